#pragma once

#include "permcx/complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace permcx {

/// Homogeneous element of the polynomial part k[x_1..x_r] of the graded
/// cohomology ring of C_p^r. Generators carry degree 1 when p = 2 and degree
/// 2 otherwise; the exterior generators of the odd-p ring are not modeled
/// here (dimension computations go through resolutions instead).
class PolyClass {
public:
    PolyClass(ElemAbGroup group, FieldPtr field); // zero
    static PolyClass constant(const ElemAbGroup& g, const FieldPtr& f, fq_t c);
    static PolyClass variable(const ElemAbGroup& g, const FieldPtr& f, int i);
    static PolyClass linear_form(const ElemAbGroup& g, const FieldPtr& f,
                                 const std::vector<fq_t>& coeffs);

    const ElemAbGroup& group() const { return group_; }
    const FieldPtr& field() const { return field_; }
    const std::map<std::vector<int>, fq_t>& terms() const { return terms_; }

    int generator_degree() const { return group_.p == 2 ? 1 : 2; }
    int poly_degree() const; // -1 for the zero class
    int graded_degree() const;
    bool is_zero() const { return terms_.empty(); }

    PolyClass operator+(const PolyClass& o) const;
    PolyClass operator*(const PolyClass& o) const;
    PolyClass scaled(fq_t c) const;
    bool operator==(const PolyClass& o) const;

    std::string describe() const;

private:
    void insert_term(const std::vector<int>& exps, fq_t c);

    ElemAbGroup group_;
    FieldPtr field_;
    std::map<std::vector<int>, fq_t> terms_; // exponent vector -> coefficient
};

/// Substitutes x_i by the linear form given by the i-th coordinates of E's
/// canonical basis rows: the transpose of the inclusion on degree-one duals,
/// extended multiplicatively. Grading is preserved.
PolyClass restrict_class(const PolyClass& c, const Subgroup& e);

/// A product of nonzero linear forms; the representation used for the
/// avoidance pair, where regularity reduces to a proportionality test.
struct LinearFormProduct {
    ElemAbGroup group;
    FieldPtr field;
    std::vector<std::vector<fq_t>> factors;

    PolyClass expand() const;
    std::string describe() const;
};

/// Factorwise restriction to E; nullopt when some factor restricts to zero
/// (the whole product then restricts to zero).
std::optional<LinearFormProduct> restrict_factors(const LinearFormProduct& u, const Subgroup& e);

struct AvoidancePair {
    LinearFormProduct u, v;
    FieldPtr field_used;
};

/// Constructs u, v as one linear factor per member of `lower`, each factor
/// vanishing on its member and nonvanishing on every member of `top_rank`,
/// with no projectively-proportional factor pair after restriction to any
/// top-rank member. When `lower` is empty, u and v are two single forms with
/// non-proportional restrictions everywhere. If the current field is too
/// small the base field is enlarged deterministically (e -> e+1) and the
/// search restarts; the field actually used is returned.
AvoidancePair find_avoidance_pair(const SubgroupCollection& top_rank,
                                  const SubgroupCollection& lower,
                                  FieldPtr start_field = nullptr);

struct AvoidanceVerdict {
    bool ok = false;
    std::string witness;
};

/// Checks (a) u and v restrict to zero on every member of `lower`, and
/// (b) on every member of `top_rank` both restrict to nonzero products with
/// no common projective linear factor — exactly the condition for the
/// restrictions to form a regular sequence in the polynomial ring.
AvoidanceVerdict verify_avoidance_pair(const LinearFormProduct& u, const LinearFormProduct& v,
                                       const SubgroupCollection& top_rank,
                                       const SubgroupCollection& lower);

/// Initial slice of a minimal free resolution: ranks b_0..b_J and the maps
/// kG^{b_j} -> kG^{b_{j-1}} for j = 1..J. Free-module bases are indexed
/// (generator, group element) with group elements in lexicographic order.
struct ResolutionSlice {
    ElemAbGroup group;
    FieldPtr field;
    std::vector<int> ranks;
    std::vector<Matrix> diffs;
};

ResolutionSlice minimal_free_resolution(const GModule& m, int j_top);

/// Exact dimensions of H^j(G, M) for 0 <= j <= j_top, computed as homology
/// of Hom(P_*, M) for a minimal free resolution P_* of the trivial module.
std::vector<int> cohomology_dims(const GModule& m, int j_top);
std::vector<int> cohomology_dims(const GModule& m, int j_top,
                                 const ResolutionSlice& trivial_resolution);

/// table[j][i] = dim H^j(G, C^i), 0 <= j <= j_top, 0 <= i <= length.
std::vector<std::vector<int>> e1_dimension_table(const BoundedComplex& c, int j_top);

} // namespace permcx
