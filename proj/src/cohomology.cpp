#include "permcx/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace permcx {

namespace {

// first-nonzero-normalized copy, or empty when all zero
std::vector<fq_t> projective_normal(const Field& f, const std::vector<fq_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            const fq_t scale = f.inv(v[i]);
            std::vector<fq_t> out(v.size());
            for (std::size_t j = 0; j < v.size(); ++j) out[j] = f.mul(v[j], scale);
            return out;
        }
    }
    return {};
}

bool proportional(const Field& f, const std::vector<fq_t>& a, const std::vector<fq_t>& b) {
    return projective_normal(f, a) == projective_normal(f, b);
}

// coefficients of the restriction of a linear form to E, in E's coordinates
std::vector<fq_t> restrict_form(const Field& f, const std::vector<fq_t>& coeffs,
                                const Subgroup& e) {
    std::vector<fq_t> out(static_cast<std::size_t>(e.rank()), 0);
    for (int j = 0; j < e.rank(); ++j) {
        fq_t acc = 0;
        for (int i = 0; i < e.group().r; ++i) {
            const int b = e.basis().at(j, i);
            if (b != 0) acc = f.add(acc, f.mul(f.from_int(b), coeffs[static_cast<std::size_t>(i)]));
        }
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

bool is_zero_form(const std::vector<fq_t>& v) {
    return std::all_of(v.begin(), v.end(), [](fq_t c) { return c == 0; });
}

std::string form_to_string(const Field& f, const std::vector<fq_t>& coeffs, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (coeffs[i] != f.one()) {
            const std::string c = f.to_string(coeffs[i]);
            if (c.find('+') != std::string::npos)
                os << "(" << c << ")*";
            else
                os << c << "*";
        }
        os << var << i + 1;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

PolyClass::PolyClass(ElemAbGroup group, FieldPtr field)
    : group_(group), field_(std::move(field)) {
    validate_group(group_);
    if (!field_) throw Error("PolyClass: missing field");
    if (field_->p() != group_.p)
        throw Error("PolyClass: field characteristic must equal the group prime");
}

PolyClass PolyClass::constant(const ElemAbGroup& g, const FieldPtr& f, fq_t c) {
    PolyClass out(g, f);
    if (c != 0) out.terms_[std::vector<int>(static_cast<std::size_t>(g.r), 0)] = c;
    return out;
}

PolyClass PolyClass::variable(const ElemAbGroup& g, const FieldPtr& f, int i) {
    if (i < 0 || i >= g.r) throw Error("PolyClass: variable index out of range");
    PolyClass out(g, f);
    std::vector<int> e(static_cast<std::size_t>(g.r), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.terms_[e] = f->one();
    return out;
}

PolyClass PolyClass::linear_form(const ElemAbGroup& g, const FieldPtr& f,
                                 const std::vector<fq_t>& coeffs) {
    if (static_cast<int>(coeffs.size()) != g.r)
        throw Error("PolyClass: linear form needs one coefficient per variable");
    PolyClass out(g, f);
    for (int i = 0; i < g.r; ++i) {
        if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
        std::vector<int> e(static_cast<std::size_t>(g.r), 0);
        e[static_cast<std::size_t>(i)] = 1;
        out.terms_[e] = coeffs[static_cast<std::size_t>(i)];
    }
    return out;
}

int PolyClass::poly_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
}

int PolyClass::graded_degree() const {
    const int d = poly_degree();
    return d < 0 ? -1 : d * generator_degree();
}

void PolyClass::insert_term(const std::vector<int>& exps, fq_t c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_[exps] = c;
    } else {
        const fq_t sum = field_->add(it->second, c);
        if (sum == 0)
            terms_.erase(it);
        else
            it->second = sum;
    }
}

PolyClass PolyClass::operator+(const PolyClass& o) const {
    if (group_ != o.group_) throw Error("PolyClass: group mismatch in +");
    check_same_field(field_, o.field_);
    if (!is_zero() && !o.is_zero() && poly_degree() != o.poly_degree())
        throw Error("PolyClass: sum of classes of different degrees is not homogeneous");
    PolyClass out = *this;
    for (const auto& [e, c] : o.terms_) out.insert_term(e, c);
    return out;
}

PolyClass PolyClass::operator*(const PolyClass& o) const {
    if (group_ != o.group_) throw Error("PolyClass: group mismatch in *");
    check_same_field(field_, o.field_);
    PolyClass out(group_, field_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, field_->mul(ca, cb));
        }
    return out;
}

PolyClass PolyClass::scaled(fq_t c) const {
    PolyClass out(group_, field_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = field_->mul(v, c);
    return out;
}

bool PolyClass::operator==(const PolyClass& o) const {
    return group_ == o.group_ && field_->same(*o.field_) && terms_ == o.terms_;
}

std::string PolyClass::describe() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != field_->one()) {
            os << field_->to_string(c);
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

PolyClass restrict_class(const PolyClass& c, const Subgroup& e) {
    if (e.group() != c.group()) throw Error("restrict_class: subgroup of a different group");
    const ElemAbGroup target{c.group().p, e.rank()};
    const FieldPtr f = c.field();
    PolyClass out(target, f);
    for (const auto& [exps, coef] : c.terms()) {
        PolyClass term = PolyClass::constant(target, f, coef);
        for (int i = 0; i < c.group().r; ++i) {
            if (exps[static_cast<std::size_t>(i)] == 0) continue;
            std::vector<fq_t> sub(static_cast<std::size_t>(e.rank()), 0);
            for (int j = 0; j < e.rank(); ++j)
                sub[static_cast<std::size_t>(j)] = f->from_int(e.basis().at(j, i));
            const PolyClass image = PolyClass::linear_form(target, f, sub);
            for (int k = 0; k < exps[static_cast<std::size_t>(i)]; ++k) term = term * image;
        }
        if (out.is_zero() || term.is_zero() || out.poly_degree() == term.poly_degree())
            out = out + term;
        else
            throw Error("restrict_class: internal grading failure");
    }
    return out;
}

PolyClass LinearFormProduct::expand() const {
    PolyClass out = PolyClass::constant(group, field, field->one());
    for (const auto& fac : factors)
        out = out * PolyClass::linear_form(group, field, fac);
    return out;
}

std::string LinearFormProduct::describe() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " * ";
        os << "(" << form_to_string(*field, factors[i], 'x') << ")";
    }
    return os.str();
}

std::optional<LinearFormProduct> restrict_factors(const LinearFormProduct& u, const Subgroup& e) {
    LinearFormProduct out{{u.group.p, e.rank()}, u.field, {}};
    for (const auto& fac : u.factors) {
        auto res = restrict_form(*u.field, fac, e);
        if (is_zero_form(res)) return std::nullopt;
        out.factors.push_back(std::move(res));
    }
    return out;
}

namespace {

// All projective candidates vanishing on `lower_member` (or all nonzero forms
// when absent) that restrict to nonzero on every member of top_rank, in the
// deterministic enumeration order of the kernel-combination odometer.
std::vector<std::vector<fq_t>> avoidance_candidates(const Field& f, const ElemAbGroup& g,
                                                    const Subgroup* lower_member,
                                                    const SubgroupCollection& top_rank,
                                                    const FieldPtr& field) {
    // basis of the solution space of "form vanishes on the member"
    Matrix basis(field, 0, g.r);
    if (lower_member && lower_member->rank() > 0) {
        Matrix pairing(field, lower_member->rank(), g.r);
        for (int i = 0; i < lower_member->rank(); ++i)
            for (int j = 0; j < g.r; ++j)
                pairing.set(i, j, field->from_int(lower_member->basis().at(i, j)));
        basis = pairing.kernel_basis();
    } else {
        basis = Matrix::identity(field, g.r);
    }
    const int d = basis.rows();
    std::vector<std::vector<fq_t>> out;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= f.q();
    for (long long v = 1; v < total; ++v) {
        // digits little-endian: coefficient of basis row 0 changes fastest
        std::vector<fq_t> coeffs(static_cast<std::size_t>(d), 0);
        long long t = v;
        for (int i = 0; i < d; ++i) {
            coeffs[static_cast<std::size_t>(i)] = static_cast<fq_t>(t % f.q());
            t /= f.q();
        }
        // projective normalization: first nonzero coefficient must be 1
        bool normalized = false;
        for (int i = 0; i < d; ++i) {
            if (coeffs[static_cast<std::size_t>(i)] != 0) {
                normalized = coeffs[static_cast<std::size_t>(i)] == f.one();
                break;
            }
        }
        if (!normalized) continue;
        std::vector<fq_t> form(static_cast<std::size_t>(g.r), 0);
        for (int i = 0; i < d; ++i) {
            const fq_t c = coeffs[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j < g.r; ++j)
                form[static_cast<std::size_t>(j)] =
                    f.add(form[static_cast<std::size_t>(j)], f.mul(c, basis.at(i, j)));
        }
        bool good = true;
        for (const auto& e : top_rank)
            if (is_zero_form(restrict_form(f, form, e))) { good = false; break; }
        if (good) out.push_back(std::move(form));
    }
    return out;
}

} // namespace

AvoidancePair find_avoidance_pair(const SubgroupCollection& top_rank,
                                  const SubgroupCollection& lower, FieldPtr start_field) {
    if (top_rank.empty()) throw Error("find_avoidance_pair: empty top-rank collection");
    const ElemAbGroup g = top_rank[0].group();
    validate_group(g);
    {
        SubgroupCollection all = top_rank;
        all.insert(all.end(), lower.begin(), lower.end());
        validate_collection(all);
    }
    const int s = top_rank[0].rank();
    for (const auto& e : top_rank)
        if (e.rank() != s)
            throw Error("find_avoidance_pair: top-rank members must share one rank, found " +
                        e.describe());
    if (s < 2)
        throw Error("find_avoidance_pair: maximum rank 1 admits no regular pair of length two "
                    "(a one-variable polynomial ring has depth one); see the documented gap");
    for (const auto& e : lower) {
        if (e.rank() >= s)
            throw Error("find_avoidance_pair: lower member " + e.describe() +
                        " must have rank below the top rank");
        for (const auto& t : top_rank) {
            const auto rel = lattice_ops(e, t);
            if (rel.contains && rel.index_if_contained == g.p)
                throw Error("find_avoidance_pair: pair " + e.describe() + " < " + t.describe() +
                            " has index p; no factor can separate them");
        }
    }

    FieldPtr field = start_field ? start_field : Field::make(g.p, 1);
    if (field->p() != g.p)
        throw Error("find_avoidance_pair: field characteristic must equal the group prime");

    for (int attempt = 0; attempt < 9; ++attempt) {
        const Field& f = *field;
        bool ok = true;
        std::vector<std::vector<fq_t>> u_factors, v_factors;

        if (lower.empty()) {
            const auto cands = avoidance_candidates(f, g, nullptr, top_rank, field);
            if (cands.empty()) ok = false;
            if (ok) {
                u_factors.push_back(cands[0]);
                bool found = false;
                for (const auto& cand : cands) {
                    bool clear = true;
                    for (const auto& e : top_rank) {
                        if (proportional(f, restrict_form(f, cand, e),
                                         restrict_form(f, u_factors[0], e))) {
                            clear = false;
                            break;
                        }
                    }
                    if (clear) {
                        v_factors.push_back(cand);
                        found = true;
                        break;
                    }
                }
                ok = found;
            }
        } else {
            std::vector<std::vector<std::vector<fq_t>>> pools;
            for (const auto& e : lower) {
                pools.push_back(avoidance_candidates(f, g, &e, top_rank, field));
                if (pools.back().empty()) { ok = false; break; }
            }
            if (ok) {
                for (const auto& pool : pools) u_factors.push_back(pool[0]);
                // forbidden projective classes per top-rank member
                std::vector<std::vector<std::vector<fq_t>>> forbidden(top_rank.size());
                for (std::size_t t = 0; t < top_rank.size(); ++t)
                    for (const auto& uf : u_factors)
                        forbidden[t].push_back(
                            projective_normal(f, restrict_form(f, uf, top_rank[t])));
                for (std::size_t k = 0; k < pools.size() && ok; ++k) {
                    bool found = false;
                    for (const auto& cand : pools[k]) {
                        bool clear = true;
                        for (std::size_t t = 0; t < top_rank.size() && clear; ++t) {
                            const auto cls = projective_normal(f, restrict_form(f, cand, top_rank[t]));
                            for (const auto& bad : forbidden[t])
                                if (cls == bad) { clear = false; break; }
                        }
                        if (clear) {
                            v_factors.push_back(cand);
                            found = true;
                            break;
                        }
                    }
                    ok = found;
                }
            }
        }

        if (ok) {
            AvoidancePair pair{{g, field, std::move(u_factors)},
                               {g, field, std::move(v_factors)},
                               field};
            const auto check = verify_avoidance_pair(pair.u, pair.v, top_rank, lower);
            if (!check.ok)
                throw Error("find_avoidance_pair: internal error, constructed pair fails "
                            "verification: " + check.witness);
            return pair;
        }
        field = Field::make(g.p, field->e() + 1);
    }
    throw Error("find_avoidance_pair: no pair found within the field enlargement cap");
}

AvoidanceVerdict verify_avoidance_pair(const LinearFormProduct& u, const LinearFormProduct& v,
                                       const SubgroupCollection& top_rank,
                                       const SubgroupCollection& lower) {
    if (u.group != v.group) return {false, "u and v over different groups"};
    if (!u.field || !v.field || !u.field->same(*v.field))
        return {false, "u and v over different fields"};
    const Field& f = *u.field;
    for (const auto& prod : {u, v})
        for (const auto& fac : prod.factors)
            if (is_zero_form(fac)) return {false, "zero factor"};

    for (std::size_t k = 0; k < lower.size(); ++k) {
        if (!restrict_class(u.expand(), lower[k]).is_zero())
            return {false, "u does not restrict to zero on lower member " + lower[k].describe()};
        if (!restrict_class(v.expand(), lower[k]).is_zero())
            return {false, "v does not restrict to zero on lower member " + lower[k].describe()};
    }
    for (const auto& e : top_rank) {
        const auto ru = restrict_factors(u, e);
        if (!ru) return {false, "u restricts to zero on " + e.describe()};
        const auto rv = restrict_factors(v, e);
        if (!rv) return {false, "v restricts to zero on " + e.describe()};
        for (std::size_t a = 0; a < ru->factors.size(); ++a)
            for (std::size_t b = 0; b < rv->factors.size(); ++b)
                if (proportional(f, ru->factors[a], rv->factors[b]))
                    return {false, "common projective factor on " + e.describe() + ": (" +
                                       form_to_string(f, ru->factors[a], 'y') + ") from u factor " +
                                       std::to_string(a) + " and v factor " + std::to_string(b)};
    }
    return {true, ""};
}

namespace {

// incremental row-echelon basis for greedy independence tests
class EchelonAccumulator {
public:
    EchelonAccumulator(FieldPtr field, int cols) : field_(std::move(field)), cols_(cols) {}

    // reduces the row against the basis; absorbs and reports true when a
    // nonzero remainder is left
    bool add(std::vector<fq_t> row) {
        const Field& f = *field_;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const fq_t c = row[static_cast<std::size_t>(pivots_[k])];
            if (c == 0) continue;
            const fq_t nc = f.neg(c);
            const auto& base = rows_[k];
            for (int j = pivots_[k]; j < cols_; ++j)
                row[static_cast<std::size_t>(j)] =
                    f.add(row[static_cast<std::size_t>(j)], f.mul(nc, base[static_cast<std::size_t>(j)]));
        }
        int piv = -1;
        for (int j = 0; j < cols_; ++j)
            if (row[static_cast<std::size_t>(j)] != 0) { piv = j; break; }
        if (piv < 0) return false;
        const fq_t scale = f.inv(row[static_cast<std::size_t>(piv)]);
        for (int j = piv; j < cols_; ++j)
            row[static_cast<std::size_t>(j)] = f.mul(row[static_cast<std::size_t>(j)], scale);
        // keep rows sorted by pivot for the reduction pass
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
        return true;
    }

    bool add(const Matrix& m, int row) {
        std::vector<fq_t> r(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = m.at(row, j);
        return add(std::move(r));
    }

private:
    FieldPtr field_;
    int cols_;
    std::vector<std::vector<fq_t>> rows_;
    std::vector<int> pivots_;
};

// greedy lift of a basis of span(rows)/span(rad): row indices whose classes
// are independent modulo rad
std::vector<int> minimal_generator_rows(const Matrix& rows, const Matrix& rad) {
    EchelonAccumulator acc(rows.field(), rows.cols());
    for (int i = 0; i < rad.rows(); ++i) acc.add(rad, i);
    std::vector<int> chosen;
    for (int i = 0; i < rows.rows(); ++i)
        if (acc.add(rows, i)) chosen.push_back(i);
    return chosen;
}

} // namespace

ResolutionSlice minimal_free_resolution(const GModule& m, int j_top) {
    if (j_top < 0) throw Error("minimal_free_resolution: negative length");
    check_same_field(m.field, m.field);
    const ElemAbGroup g = m.group;
    const FieldPtr field = m.field;
    const long long order = g.order();
    const int n = static_cast<int>(order);

    // regular representation matrices for every group element, lex order
    const GModule regular = make_permutation(Subgroup::trivial(g), field);
    std::vector<Matrix> rho;
    rho.reserve(static_cast<std::size_t>(n));
    for (const auto& v : all_vectors(g)) rho.push_back(element_action(regular, v));
    std::vector<Matrix> sigma; // action of every group element on m
    sigma.reserve(static_cast<std::size_t>(n));
    for (const auto& v : all_vectors(g)) sigma.push_back(element_action(m, v));

    ResolutionSlice out{g, field, {}, {}};

    // head of m: greedy standard basis vectors spanning m / rad m
    const Matrix rad_m = radical(m);
    std::vector<Matrix> gens; // column vectors in m
    {
        const Matrix id = Matrix::identity(field, m.dim);
        const auto rows = minimal_generator_rows(id, rad_m);
        for (int i : rows) gens.push_back(id.rows_slice({i}).transpose());
    }
    int b = static_cast<int>(gens.size());
    out.ranks.push_back(b);

    // cover kG^b -> m, column (t, g) = g . gen_t
    Matrix cover(field, m.dim, b * n);
    for (int t = 0; t < b; ++t)
        for (int e = 0; e < n; ++e)
            cover.paste(0, t * n + e, sigma[static_cast<std::size_t>(e)] * gens[static_cast<std::size_t>(t)]);

    int prev_rank = b;
    Matrix kernel = cover.kernel_basis(); // rows inside kG^{b_0}

    for (int j = 1; j <= j_top; ++j) {
        const int ambient = prev_rank * n;
        // rad of the kernel submodule: rows k (A_i - I) for every generator
        Matrix rad_rows(field, 0, ambient);
        for (int i = 0; i < g.r; ++i) {
            Matrix a_blk(field, ambient, ambient);
            for (int t = 0; t < prev_rank; ++t) a_blk.paste(t * n, t * n, regular.action[i]);
            rad_rows = vstack(rad_rows, kernel * (a_blk - Matrix::identity(field, ambient)).transpose());
        }
        const Matrix rad_basis = rad_rows.row_space_basis();
        const auto chosen = minimal_generator_rows(kernel, rad_basis);
        const int bj = static_cast<int>(chosen.size());
        out.ranks.push_back(bj);

        Matrix diff(field, ambient, bj * n);
        for (int t = 0; t < bj; ++t) {
            const Matrix k_col = kernel.rows_slice({chosen[static_cast<std::size_t>(t)]}).transpose();
            for (int e = 0; e < n; ++e) {
                Matrix col(field, ambient, 1);
                for (int blk = 0; blk < prev_rank; ++blk)
                    col.paste(blk * n, 0,
                              rho[static_cast<std::size_t>(e)] *
                                  k_col.submatrix(blk * n, 0, n, 1));
                diff.paste(0, t * n + e, col);
            }
        }
        out.diffs.push_back(diff);
        prev_rank = bj;
        if (j < j_top) kernel = diff.kernel_basis();
    }
    return out;
}

std::vector<int> cohomology_dims(const GModule& m, int j_top) {
    const ResolutionSlice res =
        minimal_free_resolution(make_trivial(m.group, m.field, 1), j_top + 1);
    return cohomology_dims(m, j_top, res);
}

std::vector<int> cohomology_dims(const GModule& m, int j_top,
                                 const ResolutionSlice& trivial_resolution) {
    if (j_top < 0) throw Error("cohomology_dims: negative degree");
    if (trivial_resolution.group != m.group)
        throw Error("cohomology_dims: resolution over a different group");
    check_same_field(m.field, trivial_resolution.field);
    if (static_cast<int>(trivial_resolution.ranks.size()) < j_top + 2)
        throw Error("cohomology_dims: resolution slice too short, need degrees 0.." +
                    std::to_string(j_top + 1));

    const ElemAbGroup g = m.group;
    const FieldPtr field = m.field;
    const int n = static_cast<int>(g.order());
    std::vector<Matrix> sigma;
    sigma.reserve(static_cast<std::size_t>(n));
    for (const auto& v : all_vectors(g)) sigma.push_back(element_action(m, v));

    // Hom(P_j, M) = M^{b_j}; the induced map precomposes with the resolution
    // differential, with blocks sum_g coeff * sigma_g.
    std::vector<Matrix> induced; // induced[j-1] : M^{b_{j-1}} -> M^{b_j}
    for (int j = 1; j <= j_top + 1; ++j) {
        const Matrix& phi = trivial_resolution.diffs[static_cast<std::size_t>(j - 1)];
        const int b_from = trivial_resolution.ranks[static_cast<std::size_t>(j - 1)];
        const int b_to = trivial_resolution.ranks[static_cast<std::size_t>(j)];
        Matrix d(field, b_to * m.dim, b_from * m.dim);
        for (int t = 0; t < b_to; ++t)
            for (int tp = 0; tp < b_from; ++tp) {
                Matrix block(field, m.dim, m.dim);
                for (int e = 0; e < n; ++e) {
                    const fq_t coef = phi.at(tp * n + e, t * n);
                    if (coef != 0) block = block + sigma[static_cast<std::size_t>(e)].scaled(coef);
                }
                d.paste(t * m.dim, tp * m.dim, block);
            }
        induced.push_back(std::move(d));
    }

    std::vector<int> dims(static_cast<std::size_t>(j_top) + 1, 0);
    std::vector<int> rank_d(static_cast<std::size_t>(j_top) + 2, 0);
    for (int j = 1; j <= j_top + 1; ++j)
        rank_d[static_cast<std::size_t>(j)] = induced[static_cast<std::size_t>(j - 1)].rank();
    for (int j = 0; j <= j_top; ++j) {
        const int space = trivial_resolution.ranks[static_cast<std::size_t>(j)] * m.dim;
        dims[static_cast<std::size_t>(j)] =
            (space - rank_d[static_cast<std::size_t>(j + 1)]) - rank_d[static_cast<std::size_t>(j)];
    }
    return dims;
}

std::vector<std::vector<int>> e1_dimension_table(const BoundedComplex& c, int j_top) {
    require_valid(c);
    if (j_top < 0) throw Error("e1_dimension_table: negative degree");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(j_top) + 1);
    if (c.terms.empty()) return table;
    const ResolutionSlice res = minimal_free_resolution(
        make_trivial(c.terms[0].group, c.terms[0].field, 1), j_top + 1);
    std::vector<std::vector<int>> per_term;
    for (const auto& t : c.terms) per_term.push_back(cohomology_dims(t, j_top, res));
    for (int j = 0; j <= j_top; ++j)
        for (std::size_t i = 0; i < c.terms.size(); ++i)
            table[static_cast<std::size_t>(j)].push_back(per_term[i][static_cast<std::size_t>(j)]);
    return table;
}

} // namespace permcx
