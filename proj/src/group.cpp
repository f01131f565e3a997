#include "permcx/group.hpp"

#include <algorithm>
#include <sstream>

namespace permcx {

namespace {

constexpr long long kEnumerationHardCap = 1 << 22;

FieldPtr prime_field(int p) { return Field::make(p, 1); }

} // namespace

long long ElemAbGroup::order() const {
    long long n = 1;
    for (int i = 0; i < r; ++i) {
        n *= p;
        if (n > (1LL << 40)) throw Error("group: order overflow");
    }
    return n;
}

std::string ElemAbGroup::describe() const {
    std::ostringstream os;
    os << "C_" << p << "^" << r;
    return os.str();
}

void validate_group(const ElemAbGroup& g) {
    if (!is_prime(g.p)) throw Error("group: p must be prime");
    if (g.r < 0) throw Error("group: rank must be nonnegative");
    g.order();
}

long long vec_code(const ElemAbGroup& g, const VecFp& v) {
    if (static_cast<int>(v.size()) != g.r) throw Error("group: vector length mismatch");
    long long code = 0;
    for (int i = 0; i < g.r; ++i) {
        const int c = ((v[i] % g.p) + g.p) % g.p;
        code = code * g.p + c;
    }
    return code;
}

VecFp vec_from_code(const ElemAbGroup& g, long long code) {
    VecFp v(g.r, 0);
    for (int i = g.r - 1; i >= 0; --i) {
        v[i] = static_cast<int>(code % g.p);
        code /= g.p;
    }
    return v;
}

VecFp vec_add(const ElemAbGroup& g, const VecFp& a, const VecFp& b) {
    VecFp v(g.r, 0);
    for (int i = 0; i < g.r; ++i) v[i] = (a[i] + b[i]) % g.p;
    return v;
}

VecFp vec_sub(const ElemAbGroup& g, const VecFp& a, const VecFp& b) {
    VecFp v(g.r, 0);
    for (int i = 0; i < g.r; ++i) v[i] = ((a[i] - b[i]) % g.p + g.p) % g.p;
    return v;
}

VecFp vec_scale(const ElemAbGroup& g, int c, const VecFp& a) {
    VecFp v(g.r, 0);
    const int cc = ((c % g.p) + g.p) % g.p;
    for (int i = 0; i < g.r; ++i) v[i] = (a[i] * cc) % g.p;
    return v;
}

std::vector<VecFp> all_vectors(const ElemAbGroup& g) {
    const long long n = g.order();
    if (n > kEnumerationHardCap) throw Error("group: too large to enumerate");
    std::vector<VecFp> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long long code = 0; code < n; ++code) out.push_back(vec_from_code(g, code));
    return out;
}

Subgroup::Subgroup(ElemAbGroup group, Matrix rref_basis)
    : group_(group), basis_(std::move(rref_basis)) {
    validate_group(group_);
    if (!basis_.field() || basis_.field()->p() != group_.p || basis_.field()->e() != 1)
        throw Error("subgroup: basis must be over the prime field F_p");
    if (basis_.cols() != group_.r) throw Error("subgroup: basis column count must equal the rank of the group");
    const auto rr = basis_.rref();
    if (rr.rank != basis_.rows() || rr.reduced != basis_)
        throw Error("subgroup: basis must be in reduced row echelon form with no zero rows");
}

Subgroup Subgroup::from_generators(const ElemAbGroup& g, const std::vector<VecFp>& vectors) {
    validate_group(g);
    const FieldPtr f = prime_field(g.p);
    Matrix m(f, static_cast<int>(vectors.size()), g.r);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != g.r)
            throw Error("subgroup: generator length must equal the rank of the group");
        for (int j = 0; j < g.r; ++j) m.set(static_cast<int>(i), j, f->from_int(vectors[i][j]));
    }
    return Subgroup(g, m.row_space_basis());
}

Subgroup Subgroup::trivial(const ElemAbGroup& g) {
    return Subgroup(g, Matrix(prime_field(g.p), 0, g.r));
}

Subgroup Subgroup::full(const ElemAbGroup& g) {
    return Subgroup(g, Matrix::identity(prime_field(g.p), g.r));
}

long long Subgroup::order() const {
    long long n = 1;
    for (int i = 0; i < rank(); ++i) n *= group_.p;
    return n;
}

long long Subgroup::index() const {
    long long n = 1;
    for (int i = 0; i < group_.r - rank(); ++i) n *= group_.p;
    return n;
}

VecFp Subgroup::basis_row(int i) const {
    VecFp v(group_.r, 0);
    for (int j = 0; j < group_.r; ++j) v[j] = basis_.at(i, j);
    return v;
}

bool Subgroup::contains_vector(const VecFp& v) const {
    const FieldPtr f = basis_.field();
    Matrix row(f, 1, group_.r);
    for (int j = 0; j < group_.r; ++j) row.set(0, j, f->from_int(v[j]));
    return in_row_space(basis_, row);
}

std::vector<VecFp> Subgroup::elements() const {
    const int s = rank();
    long long count = 1;
    for (int i = 0; i < s; ++i) count *= group_.p;
    if (count > kEnumerationHardCap) throw Error("subgroup: too large to enumerate");
    std::vector<VecFp> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long v = 0; v < count; ++v) {
        VecFp elt(group_.r, 0);
        long long t = v;
        for (int i = s - 1; i >= 0; --i) {
            const int c = static_cast<int>(t % group_.p);
            t /= group_.p;
            if (c != 0)
                elt = vec_add(group_, elt, vec_scale(group_, c, basis_row(i)));
        }
        out.push_back(std::move(elt));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Subgroup::operator==(const Subgroup& o) const {
    return group_ == o.group_ && basis_ == o.basis_;
}

std::string Subgroup::describe() const {
    std::ostringstream os;
    os << "<";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ", ";
        os << "(";
        for (int j = 0; j < group_.r; ++j) {
            if (j) os << ",";
            os << static_cast<int>(basis_.at(i, j));
        }
        os << ")";
    }
    os << ">";
    return os.str();
}

LatticeRelation lattice_ops(const Subgroup& inner, const Subgroup& outer) {
    if (inner.group() != outer.group()) throw Error("lattice_ops: ambient group mismatch");
    const ElemAbGroup g = inner.group();

    LatticeRelation rel{false, 0,
                        Subgroup::trivial(g), Subgroup::trivial(g)};

    const Matrix stacked = vstack(outer.basis(), inner.basis());
    rel.contains = stacked.rank() == outer.rank();
    if (rel.contains) {
        long long idx = 1;
        for (int i = 0; i < outer.rank() - inner.rank(); ++i) idx *= g.p;
        rel.index_if_contained = idx;
    }
    rel.sum = Subgroup(g, vstack(inner.basis(), outer.basis()).row_space_basis());

    // x in both row spaces: x = a*BE = b*BF; solve [BE^T | -BF^T](a;b)^T = 0.
    const Matrix be_t = inner.basis().transpose();
    const Matrix bf_t = outer.basis().transpose().negated();
    const Matrix ker = hstack(be_t, bf_t).kernel_basis();
    Matrix pts(inner.basis().field(), ker.rows(), g.r);
    if (ker.rows() > 0 && inner.rank() > 0) {
        const Matrix a_part = ker.submatrix(0, 0, ker.rows(), inner.rank());
        pts = a_part * inner.basis();
    }
    rel.intersection = Subgroup(g, pts.row_space_basis());
    return rel;
}

std::vector<VecFp> coset_reps(const Subgroup& e) {
    const ElemAbGroup g = e.group();
    const long long n = g.order();
    if (n > kEnumerationHardCap) throw Error("coset_reps: group too large to enumerate");
    const auto elements = e.elements();
    std::vector<long long> elt_codes;
    elt_codes.reserve(elements.size());
    for (const auto& s : elements) elt_codes.push_back(vec_code(g, s));

    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<VecFp> reps;
    for (long long code = 0; code < n; ++code) {
        if (seen[static_cast<std::size_t>(code)]) continue;
        const VecFp v = vec_from_code(g, code);
        reps.push_back(v);
        for (const auto& s : elements)
            seen[static_cast<std::size_t>(vec_code(g, vec_add(g, v, s)))] = true;
    }
    return reps;
}

void validate_collection(const SubgroupCollection& h) {
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].group() != h[0].group())
            throw Error("collection: members must share one ambient group");
        for (std::size_t j = i + 1; j < h.size(); ++j)
            if (h[i] == h[j]) throw Error("collection: duplicate subgroup");
    }
}

SubgroupCollection all_subgroups(const ElemAbGroup& g, std::optional<int> rank_filter,
                                 long long max_order) {
    validate_group(g);
    if (g.order() > max_order)
        throw Error("all_subgroups: group order exceeds the enumeration bound");
    const FieldPtr f = prime_field(g.p);
    SubgroupCollection out;
    for (int s = 0; s <= g.r; ++s) {
        if (rank_filter && *rank_filter != s) continue;
        if (s == 0) {
            out.push_back(Subgroup::trivial(g));
            continue;
        }
        // pivot column combinations in lexicographic order
        std::vector<int> piv(s);
        for (int i = 0; i < s; ++i) piv[i] = i;
        while (true) {
            std::vector<bool> is_piv(g.r, false);
            for (int c : piv) is_piv[c] = true;
            std::vector<std::pair<int, int>> free_pos; // row-major
            for (int i = 0; i < s; ++i)
                for (int j = piv[i] + 1; j < g.r; ++j)
                    if (!is_piv[j]) free_pos.emplace_back(i, j);
            long long total = 1;
            for (std::size_t k = 0; k < free_pos.size(); ++k) total *= g.p;
            for (long long v = 0; v < total; ++v) {
                Matrix m(f, s, g.r);
                for (int i = 0; i < s; ++i) m.set(i, piv[i], f->one());
                long long t = v;
                for (int k = static_cast<int>(free_pos.size()) - 1; k >= 0; --k) {
                    const int val = static_cast<int>(t % g.p);
                    t /= g.p;
                    m.set(free_pos[k].first, free_pos[k].second, f->from_int(val));
                }
                out.emplace_back(g, m);
            }
            // advance combination
            int i = s - 1;
            while (i >= 0 && piv[i] == g.r - s + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int k = i + 1; k < s; ++k) piv[k] = piv[k - 1] + 1;
        }
    }
    return out;
}

ChainConditionReport check_chain_condition(const SubgroupCollection& h) {
    validate_collection(h);
    ChainConditionReport rep;
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (i == j) continue;
            if (h[j].rank() != h[i].rank() + 1) continue;
            if (vstack(h[j].basis(), h[i].basis()).rank() == h[j].rank())
                rep.violations.push_back({h[i], h[j]});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

} // namespace permcx
