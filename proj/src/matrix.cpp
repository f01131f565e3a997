#include "permcx/matrix.hpp"

#include <algorithm>

namespace permcx {

namespace {

void check_field(const FieldPtr& f) {
    if (!f) throw Error("matrix: missing field");
}

} // namespace

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, 0) {
    check_field(field_);
    if (rows < 0 || cols < 0) throw Error("matrix: negative dimensions");
}

Matrix Matrix::identity(const FieldPtr& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, field->one());
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& field,
                         const std::vector<std::vector<long long>>& rows) {
    check_field(field);
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error("matrix: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, field->from_int(rows[i][j]));
    }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!field_ || !o.field_) return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_;
    return field_->same(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix: shape mismatch in +");
    Matrix r = *this;
    const Field& F = *field_;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = F.add(a_[k], o.a_[k]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix: shape mismatch in -");
    Matrix r = *this;
    const Field& F = *field_;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = F.sub(a_[k], o.a_[k]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(field_, o.field_);
    if (cols_ != o.rows_) throw Error("matrix: shape mismatch in *");
    Matrix r(field_, rows_, o.cols_);
    const Field& F = *field_;
    for (int i = 0; i < rows_; ++i) {
        fq_t* out = r.row_ptr(i);
        for (int k = 0; k < cols_; ++k) {
            const fq_t aik = at(i, k);
            if (aik == 0) continue;
            const fq_t* brow = o.row_ptr(k);
            if (const fq_t* mrow = F.mul_row(aik)) {
                for (int j = 0; j < o.cols_; ++j) out[j] = F.add(out[j], mrow[brow[j]]);
            } else {
                for (int j = 0; j < o.cols_; ++j) out[j] = F.add(out[j], F.mul(aik, brow[j]));
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(fq_t c) const {
    Matrix r = *this;
    const Field& F = *field_;
    for (auto& v : r.a_) v = F.mul(v, c);
    return r;
}

Matrix Matrix::negated() const {
    Matrix r = *this;
    const Field& F = *field_;
    for (auto& v : r.a_) v = F.neg(v);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::pow(long long k) const {
    if (rows_ != cols_) throw Error("matrix: pow requires a square matrix");
    if (k < 0) throw Error("matrix: negative power");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](fq_t v) { return v == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? field_->one() : 0)) return false;
    return true;
}

Matrix Matrix::submatrix(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
        throw Error("matrix: submatrix out of range");
    Matrix r(field_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
}

void Matrix::paste(int r0, int c0, const Matrix& block) {
    check_same_field(field_, block.field_);
    if (r0 < 0 || c0 < 0 || r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
        throw Error("matrix: paste out of range");
    for (int i = 0; i < block.rows_; ++i)
        for (int j = 0; j < block.cols_; ++j) set(r0 + i, c0 + j, block.at(i, j));
}

Matrix Matrix::rows_slice(const std::vector<int>& which) const {
    Matrix r(field_, static_cast<int>(which.size()), cols_);
    for (std::size_t i = 0; i < which.size(); ++i) {
        if (which[i] < 0 || which[i] >= rows_) throw Error("matrix: row index out of range");
        for (int j = 0; j < cols_; ++j) r.set(static_cast<int>(i), j, at(which[i], j));
    }
    return r;
}

RrefResult Matrix::rref() const {
    check_field(field_);
    RrefResult out;
    out.reduced = *this;
    Matrix& R = out.reduced;
    const Field& F = *field_;
    int pr = 0;
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
        int sel = -1;
        for (int i = pr; i < rows_; ++i)
            if (R.at(i, c) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < cols_; ++j) std::swap(R.row_ptr(sel)[j], R.row_ptr(pr)[j]);
        const fq_t piv_inv = F.inv(R.at(pr, c));
        {
            fq_t* prow = R.row_ptr(pr);
            if (const fq_t* mrow = F.mul_row(piv_inv)) {
                for (int j = c; j < cols_; ++j) prow[j] = mrow[prow[j]];
            } else {
                for (int j = c; j < cols_; ++j) prow[j] = F.mul(prow[j], piv_inv);
            }
        }
        const fq_t* prow = R.row_ptr(pr);
        for (int i = 0; i < rows_; ++i) {
            if (i == pr) continue;
            const fq_t f = R.at(i, c);
            if (f == 0) continue;
            const fq_t nf = F.neg(f);
            fq_t* irow = R.row_ptr(i);
            if (const fq_t* mrow = F.mul_row(nf)) {
                for (int j = c; j < cols_; ++j) irow[j] = F.add(irow[j], mrow[prow[j]]);
            } else {
                for (int j = c; j < cols_; ++j) irow[j] = F.add(irow[j], F.mul(nf, prow[j]));
            }
        }
        out.pivots.push_back(c);
        ++pr;
    }
    out.rank = pr;
    return out;
}

int Matrix::rank() const { return rref().rank; }

Matrix Matrix::kernel_basis() const {
    const RrefResult rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(field_, static_cast<int>(free_cols.size()), cols_);
    const Field& F = *field_;
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis.set(static_cast<int>(k), f, F.one());
        for (std::size_t t = 0; t < rr.pivots.size(); ++t)
            basis.set(static_cast<int>(k), rr.pivots[t], F.neg(rr.reduced.at(static_cast<int>(t), f)));
    }
    return basis;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    check_same_field(field_, rhs.field_);
    if (rhs.rows_ != rows_) throw Error("matrix: solve rhs row mismatch");
    const Matrix aug = hstack(*this, rhs);
    const RrefResult rr = aug.rref();
    for (int c : rr.pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(field_, cols_, rhs.cols_);
    for (std::size_t t = 0; t < rr.pivots.size(); ++t)
        for (int k = 0; k < rhs.cols_; ++k)
            x.set(rr.pivots[t], k, rr.reduced.at(static_cast<int>(t), cols_ + k));
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw Error("matrix: inverse requires a square matrix");
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    // solve() gives a particular solution; it is the inverse only at full rank
    if (rank() != rows_) return std::nullopt;
    return x;
}

Matrix Matrix::row_space_basis() const {
    const RrefResult rr = rref();
    return rr.reduced.submatrix(0, 0, rr.rank, cols_);
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    check_same_field(a.field(), b.field());
    if (a.rows() != b.rows()) throw Error("matrix: hstack row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    r.paste(0, 0, a);
    r.paste(0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    check_same_field(a.field(), b.field());
    if (a.cols() != b.cols()) throw Error("matrix: vstack column mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    r.paste(0, 0, a);
    r.paste(a.rows(), 0, b);
    return r;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw Error("matrix: block_diag of empty list");
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        check_same_field(blocks[0].field(), b.field());
        rows += b.rows();
        cols += b.cols();
    }
    Matrix r(blocks[0].field(), rows, cols);
    int r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        r.paste(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return r;
}

bool in_row_space(const Matrix& basis, const Matrix& rows) {
    check_same_field(basis.field(), rows.field());
    if (basis.cols() != rows.cols()) throw Error("matrix: in_row_space column mismatch");
    if (rows.rows() == 0) return true;
    return vstack(basis, rows).rank() == basis.rank();
}

} // namespace permcx
