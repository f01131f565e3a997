#pragma once

#include "permcx/field.hpp"

#include <optional>
#include <vector>

namespace permcx {

struct RrefResult;

/// Dense matrix over a shared finite field, row-major element codes.
/// All operations are exact; canonical forms (RREF, kernel bases, particular
/// solutions) are deterministic so downstream artifacts are reproducible.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, int rows, int cols);

    static Matrix identity(const FieldPtr& field, int n);
    /// Builds from integer rows through the prime subfield.
    static Matrix from_rows(const FieldPtr& field,
                            const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    fq_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, fq_t v) { a_[static_cast<std::size_t>(i) * cols_ + j] = v; }
    const fq_t* row_ptr(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }
    fq_t* row_ptr(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(fq_t c) const;
    Matrix negated() const;
    Matrix transpose() const;
    Matrix pow(long long k) const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix submatrix(int r0, int c0, int nr, int nc) const;
    void paste(int r0, int c0, const Matrix& block);
    Matrix rows_slice(const std::vector<int>& which) const;

    RrefResult rref() const;
    int rank() const;

    /// Rows form the canonical basis of the right kernel {x : A x = 0}: one
    /// basis vector per free column in increasing column order.
    Matrix kernel_basis() const;

    /// Particular solution of A X = rhs with all free variables zero, or
    /// nullopt when the system is inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    std::optional<Matrix> inverse() const;

    /// RREF with zero rows dropped: the canonical basis of the row space.
    Matrix row_space_basis() const;

private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<fq_t> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;
    int rank = 0;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const std::vector<Matrix>& blocks);

/// True when every row of `rows` lies in the row space of `basis`.
bool in_row_space(const Matrix& basis, const Matrix& rows);

} // namespace permcx
