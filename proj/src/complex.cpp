#include "permcx/complex.hpp"

#include <algorithm>
#include <sstream>

namespace permcx {

namespace {

GModule zero_module_like(const ElemAbGroup& g, const FieldPtr& field) {
    return make_trivial(g, field, 0);
}

void check_complex_context(const BoundedComplex& c) {
    if (c.terms.empty()) {
        if (!c.diffs.empty()) throw Error("complex: differentials without terms");
        return;
    }
    if (c.diffs.size() != c.terms.size() - 1)
        throw Error("complex: expected one differential per adjacent pair of terms");
}

} // namespace

std::vector<ComplexViolation> validate_complex(const BoundedComplex& c) {
    std::vector<ComplexViolation> out;
    try {
        check_complex_context(c);
    } catch (const Error& e) {
        out.push_back({"shape", -1, -1, e.what()});
        return out;
    }
    if (c.terms.empty()) return out;

    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        try {
            validate_module(c.terms[i]);
            if (c.terms[i].group != c.terms[0].group)
                throw Error("terms over different groups");
            check_same_field(c.terms[i].field, c.terms[0].field);
        } catch (const Error& e) {
            out.push_back({"module", static_cast<int>(i), -1, e.what()});
        }
    }
    if (!out.empty()) return out;

    const int r = c.terms[0].group.r;
    for (std::size_t i = 0; i < c.diffs.size(); ++i) {
        const Matrix& d = c.diffs[i];
        if (d.rows() != c.terms[i + 1].dim || d.cols() != c.terms[i].dim ||
            !d.field() || !d.field()->same(*c.terms[0].field)) {
            out.push_back({"shape", static_cast<int>(i), -1,
                           "differential has the wrong shape or field"});
            continue;
        }
        for (int g = 0; g < r; ++g) {
            if (d * c.terms[i].action[g] != c.terms[i + 1].action[g] * d)
                out.push_back({"equivariance", static_cast<int>(i), g,
                               "differential does not commute with generator " + std::to_string(g)});
        }
    }
    if (!out.empty()) return out;

    for (std::size_t i = 0; i + 1 < c.diffs.size(); ++i) {
        if (!(c.diffs[i + 1] * c.diffs[i]).is_zero())
            out.push_back({"composite", static_cast<int>(i), -1,
                           "d^" + std::to_string(i + 1) + " after d^" + std::to_string(i) +
                               " is nonzero"});
    }
    return out;
}

void require_valid(const BoundedComplex& c) {
    const auto v = validate_complex(c);
    if (v.empty()) return;
    std::ostringstream os;
    os << "complex invalid: " << v[0].invariant;
    if (v[0].position >= 0) os << " at position " << v[0].position;
    if (v[0].generator >= 0) os << " (generator " << v[0].generator << ")";
    os << ": " << v[0].detail;
    throw Error(os.str());
}

ExactnessReport is_exact(const BoundedComplex& c) {
    ExactnessReport rep;
    const int l = c.length();
    if (l < 0) return rep;
    std::vector<int> rank_d(static_cast<std::size_t>(l) + 1, 0); // rank_d[i] = rank d^i, d^l = 0
    for (int i = 0; i < l; ++i) rank_d[static_cast<std::size_t>(i)] = c.diffs[i].rank();
    rep.homology_dims.resize(static_cast<std::size_t>(l) + 1, 0);
    for (int i = 0; i <= l; ++i) {
        const int nullity = c.terms[i].dim - (i < l ? rank_d[static_cast<std::size_t>(i)] : 0);
        const int im_prev = i > 0 ? rank_d[static_cast<std::size_t>(i - 1)] : 0;
        rep.homology_dims[static_cast<std::size_t>(i)] = nullity - im_prev;
    }
    rep.exact = std::all_of(rep.homology_dims.begin(), rep.homology_dims.end(),
                            [](int d) { return d == 0; });
    return rep;
}

bool verify_homotopy(const BoundedComplex& c, const Homotopy& h) {
    const int l = c.length();
    if (l < 0) return h.maps.empty();
    if (static_cast<int>(h.maps.size()) != l) return false;
    const FieldPtr field = c.terms[0].field;
    const int r = c.terms[0].group.r;
    for (int i = 1; i <= l; ++i) {
        const Matrix& hi = h.maps[i - 1];
        if (hi.rows() != c.terms[i - 1].dim || hi.cols() != c.terms[i].dim) return false;
        if (!hi.field() || !hi.field()->same(*field)) return false;
        for (int g = 0; g < r; ++g)
            if (hi * c.terms[i].action[g] != c.terms[i - 1].action[g] * hi) return false;
    }
    for (int i = 0; i <= l; ++i) {
        Matrix lhs(field, c.terms[i].dim, c.terms[i].dim);
        if (i >= 1) lhs = lhs + c.diffs[i - 1] * h.maps[i - 1];
        if (i < l) lhs = lhs + h.maps[i] * c.diffs[i];
        if (!lhs.is_identity()) return false;
    }
    return true;
}

ContractibilityReport is_contractible(const BoundedComplex& c) {
    const int l = c.length();
    if (l < 0) return {true, Homotopy{}};
    const FieldPtr field = c.terms[0].field;

    // Unknowns: coefficients over a Hom-space basis per position, so every
    // candidate homotopy is equivariant by construction.
    std::vector<std::vector<Matrix>> bases(static_cast<std::size_t>(l));
    std::vector<int> offsets(static_cast<std::size_t>(l) + 1, 0);
    for (int i = 1; i <= l; ++i) {
        bases[static_cast<std::size_t>(i - 1)] = hom_space(c.terms[i], c.terms[i - 1]);
        offsets[static_cast<std::size_t>(i)] =
            offsets[static_cast<std::size_t>(i - 1)] +
            static_cast<int>(bases[static_cast<std::size_t>(i - 1)].size());
    }
    const int unknowns = offsets[static_cast<std::size_t>(l)];

    int total_rows = 0;
    std::vector<int> row_offset(static_cast<std::size_t>(l) + 1, 0);
    for (int i = 0; i <= l; ++i) {
        row_offset[static_cast<std::size_t>(i)] = total_rows;
        total_rows += c.terms[i].dim * c.terms[i].dim;
    }

    Matrix sys(field, total_rows, unknowns);
    Matrix rhs(field, total_rows, 1);
    for (int i = 0; i <= l; ++i) {
        const int dim = c.terms[i].dim;
        const int base_row = row_offset[static_cast<std::size_t>(i)];
        for (int a = 0; a < dim; ++a) rhs.set(base_row + a * dim + a, 0, field->one());
        if (i >= 1) {
            const auto& basis = bases[static_cast<std::size_t>(i - 1)];
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const Matrix prod = c.diffs[i - 1] * basis[k];
                const int col = offsets[static_cast<std::size_t>(i - 1)] + static_cast<int>(k);
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b) {
                        const fq_t v = prod.at(a, b);
                        if (v != 0)
                            sys.set(base_row + a * dim + b, col,
                                    field->add(sys.at(base_row + a * dim + b, col), v));
                    }
            }
        }
        if (i < l) {
            const auto& basis = bases[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const Matrix prod = basis[k] * c.diffs[i];
                const int col = offsets[static_cast<std::size_t>(i)] + static_cast<int>(k);
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b) {
                        const fq_t v = prod.at(a, b);
                        if (v != 0)
                            sys.set(base_row + a * dim + b, col,
                                    field->add(sys.at(base_row + a * dim + b, col), v));
                    }
            }
        }
    }

    const auto sol = sys.solve(rhs);
    if (!sol) return {false, std::nullopt};

    Homotopy h;
    for (int i = 1; i <= l; ++i) {
        Matrix hi(field, c.terms[i - 1].dim, c.terms[i].dim);
        const auto& basis = bases[static_cast<std::size_t>(i - 1)];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const fq_t coef = sol->at(offsets[static_cast<std::size_t>(i - 1)] + static_cast<int>(k), 0);
            if (coef != 0) hi = hi + basis[k].scaled(coef);
        }
        h.maps.push_back(std::move(hi));
    }
    if (!verify_homotopy(c, h))
        throw Error("is_contractible: internal error, certificate failed re-verification");
    return {true, std::move(h)};
}

BoundedComplex direct_sum_complex(const BoundedComplex& a, const BoundedComplex& b) {
    if (a.terms.empty()) return b;
    if (b.terms.empty()) return a;
    if (a.terms[0].group != b.terms[0].group) throw Error("direct_sum_complex: group mismatch");
    check_same_field(a.terms[0].field, b.terms[0].field);
    const ElemAbGroup g = a.terms[0].group;
    const FieldPtr field = a.terms[0].field;
    const int len = std::max(a.length(), b.length());

    auto term_of = [&](const BoundedComplex& c, int i) {
        return i <= c.length() ? c.terms[static_cast<std::size_t>(i)] : zero_module_like(g, field);
    };
    auto diff_of = [&](const BoundedComplex& c, int i) {
        if (i < c.length()) return c.diffs[static_cast<std::size_t>(i)];
        const int from = i <= c.length() ? c.terms[static_cast<std::size_t>(i)].dim : 0;
        return Matrix(field, 0, i == c.length() ? from : 0);
    };

    BoundedComplex out;
    for (int i = 0; i <= len; ++i)
        out.terms.push_back(direct_sum({term_of(a, i), term_of(b, i)}));
    for (int i = 0; i < len; ++i) {
        const Matrix da = diff_of(a, i), db = diff_of(b, i);
        Matrix d(field, out.terms[i + 1].dim, out.terms[i].dim);
        d.paste(0, 0, da);
        d.paste(da.rows(), da.cols(), db);
        out.diffs.push_back(std::move(d));
    }
    return out;
}

BoundedComplex shift_complex(const BoundedComplex& c, int n) {
    if (n < 0) throw Error("shift_complex: negative shift");
    if (n == 0 || c.terms.empty()) return c;
    const ElemAbGroup g = c.terms[0].group;
    const FieldPtr field = c.terms[0].field;
    BoundedComplex out;
    for (int i = 0; i < n; ++i) out.terms.push_back(zero_module_like(g, field));
    for (const auto& t : c.terms) out.terms.push_back(t);
    for (int i = 0; i + 1 < n; ++i) out.diffs.push_back(Matrix(field, 0, 0));
    if (n >= 1) out.diffs.push_back(Matrix(field, c.terms[0].dim, 0));
    for (const auto& d : c.diffs) out.diffs.push_back(d);
    return out;
}

BoundedComplex restrict_complex(const BoundedComplex& c, const Subgroup& h) {
    BoundedComplex out;
    for (const auto& t : c.terms) out.terms.push_back(restrict_to(t, h));
    out.diffs = c.diffs;
    return out;
}

BoundedComplex induce_complex(const BoundedComplex& c, const Matrix& embedding) {
    BoundedComplex out;
    int copies = 1;
    for (const auto& t : c.terms) {
        out.terms.push_back(induce(t, embedding));
        if (t.dim > 0) copies = out.terms.back().dim / t.dim;
    }
    for (const auto& d : c.diffs) out.diffs.push_back(induce_map(d, copies));
    return out;
}

BoundedComplex inflate_complex(const BoundedComplex& c, const Matrix& quotient_map) {
    BoundedComplex out;
    for (const auto& t : c.terms) out.terms.push_back(inflate(t, quotient_map));
    out.diffs = c.diffs;
    return out;
}

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::certified: return "certified";
        case Membership::failed: return "failed";
        case Membership::unknown: return "unknown";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "CONSISTENT-WITH-THEOREM";
        case Verdict::violation_candidate: return "THEOREM-VIOLATION-CANDIDATE";
        case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

CollectionCriterionReport check_collection_criterion(const SubgroupCollection& h,
                                                     const BoundedComplex& c) {
    validate_collection(h);
    require_valid(c);
    if (!c.terms.empty() && !h.empty() && c.terms[0].group != h[0].group())
        throw Error("check_collection_criterion: complex and collection over different groups");

    CollectionCriterionReport rep;
    bool any_unknown = false, any_failed = false;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        const GModule& t = c.terms[i];
        if (!t.tags) {
            any_unknown = true;
            rep.membership_detail.push_back("term " + std::to_string(i) + " is untagged");
            continue;
        }
        for (const auto& tag : *t.tags) {
            if (tag.multiplicity == 0 || tag.end == tag.begin) continue;
            const Subgroup s = tag.kind == SummandKind::trivial ? Subgroup::full(t.group)
                               : tag.kind == SummandKind::free_module
                                   ? Subgroup::trivial(t.group)
                                   : *tag.subgroup;
            if (std::find(h.begin(), h.end(), s) == h.end()) {
                any_failed = true;
                rep.membership_detail.push_back("term " + std::to_string(i) + " has summand k[G/" +
                                                s.describe() + "] outside the collection");
            }
        }
    }
    rep.membership = any_failed   ? Membership::failed
                     : any_unknown ? Membership::unknown
                                   : Membership::certified;
    rep.condition = check_chain_condition(h);
    rep.exactness = is_exact(c);
    rep.contractibility = is_contractible(c);

    if (rep.contractibility.contractible)
        rep.verdict = Verdict::consistent;
    else if (!rep.condition.ok || !rep.exactness.exact || rep.membership == Membership::failed)
        rep.verdict = Verdict::consistent; // hypothesis void, implication holds
    else if (rep.membership == Membership::unknown)
        rep.verdict = Verdict::inconclusive;
    else
        rep.verdict = Verdict::violation_candidate;
    return rep;
}

EquivariantMap split_via_rank_two_subgroup(const BoundedComplex& c, const Subgroup& e) {
    require_valid(c);
    const int l = c.length();
    if (l < 1) throw Error("split: complex must have at least two terms");
    if (e.group() != c.terms[0].group) throw Error("split: subgroup of a different group");
    if (e.rank() != 2) throw Error("split: subgroup must have rank 2");

    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        const GModule& t = c.terms[i];
        if (!t.tags)
            throw Error("split: term " + std::to_string(i) +
                        " is untagged; a certified trivial + free decomposition is required");
        for (const auto& tag : *t.tags)
            if (tag.kind == SummandKind::permutation)
                throw Error("split: term " + std::to_string(i) +
                            " has a summand that is neither trivial nor free");
    }
    for (const auto& tag : *c.terms[static_cast<std::size_t>(l)].tags)
        if (tag.kind != SummandKind::trivial && tag.multiplicity > 0)
            throw Error("split: terminal term must be a sum of trivial modules");

    const BoundedComplex restricted = restrict_complex(c, e);
    const auto contraction = is_contractible(restricted);
    if (!contraction.contractible)
        throw Error("split: restriction to the rank-2 subgroup is not contractible");
    const Matrix theta = contraction.certificate->maps[static_cast<std::size_t>(l - 1)];

    const GModule& last_but_one = c.terms[static_cast<std::size_t>(l - 1)];
    std::vector<int> trivial_coords, free_coords;
    for (const auto& tag : *last_but_one.tags)
        for (int k = tag.begin; k < tag.end; ++k)
            (tag.kind == SummandKind::trivial ? trivial_coords : free_coords).push_back(k);

    const FieldPtr field = c.terms[0].field;
    Matrix psi(field, last_but_one.dim, c.terms[static_cast<std::size_t>(l)].dim);
    for (int k : trivial_coords)
        for (int j = 0; j < psi.cols(); ++j) psi.set(k, j, theta.at(k, j));

    // The free component of theta must land in the radical of the free part:
    // the image consists of fixed points of E, and fixed points of a free
    // module lie inside its radical.
    if (!free_coords.empty()) {
        GModule free_part{c.terms[0].group, field, static_cast<int>(free_coords.size()), {}, std::nullopt};
        for (int g = 0; g < c.terms[0].group.r; ++g) {
            Matrix a(field, free_part.dim, free_part.dim);
            for (std::size_t i = 0; i < free_coords.size(); ++i)
                for (std::size_t j = 0; j < free_coords.size(); ++j)
                    a.set(static_cast<int>(i), static_cast<int>(j),
                          last_but_one.action[g].at(free_coords[static_cast<int>(i)],
                                                    free_coords[static_cast<int>(j)]));
            free_part.action.push_back(std::move(a));
        }
        const Matrix rad = radical(free_part);
        Matrix theta_free(field, free_part.dim, theta.cols());
        for (std::size_t i = 0; i < free_coords.size(); ++i)
            for (int j = 0; j < theta.cols(); ++j)
                theta_free.set(static_cast<int>(i), j, theta.at(free_coords[i], j));
        if (!in_row_space(rad, theta_free.transpose()))
            throw Error("split: internal error, fixed-point image escapes the radical of the free part");
    }

    if (!(c.diffs[static_cast<std::size_t>(l - 1)] * psi).is_identity())
        throw Error("split: internal error, projected section fails to split the last differential");

    EquivariantMap out{c.terms[static_cast<std::size_t>(l)], last_but_one, psi};
    validate_map(out);
    return out;
}

BoundedComplex contractible_from_pieces(const ElemAbGroup& g, const FieldPtr& field,
                                        const std::vector<GModule>& pieces, Rng& rng) {
    const int len = static_cast<int>(pieces.size());
    BoundedComplex out;
    auto piece_at = [&](int i) -> GModule {
        if (i < 0 || i >= len) return zero_module_like(g, field);
        return pieces[static_cast<std::size_t>(i)];
    };
    for (int j = 0; j <= len; ++j)
        out.terms.push_back(direct_sum({piece_at(j - 1), piece_at(j)}));
    for (int j = 0; j < len; ++j) {
        const int src_head = piece_at(j - 1).dim;
        const int dj = piece_at(j).dim;
        Matrix d(field, out.terms[j + 1].dim, out.terms[j].dim);
        d.paste(0, src_head, Matrix::identity(field, dj));
        out.diffs.push_back(std::move(d));
    }

    // conjugate by random invertible equivariant automorphisms
    std::vector<Matrix> autos, autos_inv;
    for (const auto& term : out.terms) {
        const auto endo = hom_space(term, term);
        Matrix chosen = Matrix::identity(field, term.dim);
        Matrix chosen_inv = chosen;
        for (int attempt = 0; attempt < 64; ++attempt) {
            Matrix x(field, term.dim, term.dim);
            for (const auto& b : endo) {
                const fq_t coef = static_cast<fq_t>(rng.uniform(field->q()));
                if (coef != 0) x = x + b.scaled(coef);
            }
            const auto inv = x.inverse();
            if (inv) {
                chosen = std::move(x);
                chosen_inv = *inv;
                break;
            }
        }
        autos.push_back(std::move(chosen));
        autos_inv.push_back(std::move(chosen_inv));
    }
    for (int j = 0; j < len; ++j)
        out.diffs[j] = autos[j + 1] * out.diffs[j] * autos_inv[j];
    return out;
}

BoundedComplex random_contractible_complex(const SubgroupCollection& h, const FieldPtr& field,
                                           int length, const std::vector<int>& max_multiplicities,
                                           std::uint64_t seed) {
    validate_collection(h);
    if (h.empty()) throw Error("random_contractible_complex: empty collection");
    if (length < 0) throw Error("random_contractible_complex: negative length");
    if (max_multiplicities.size() != h.size())
        throw Error("random_contractible_complex: one multiplicity bound per subgroup expected");
    const ElemAbGroup g = h[0].group();
    Rng rng(seed);
    std::vector<GModule> pieces;
    for (int i = 0; i < length; ++i) {
        std::vector<GModule> parts;
        for (std::size_t j = 0; j < h.size(); ++j) {
            const int m = rng.uniform(max_multiplicities[j] + 1);
            for (int k = 0; k < m; ++k) parts.push_back(make_permutation(h[j], field));
        }
        if (parts.empty())
            pieces.push_back(make_trivial(g, field, 0));
        else
            pieces.push_back(direct_sum(parts));
    }
    return contractible_from_pieces(g, field, pieces, rng);
}

} // namespace permcx
