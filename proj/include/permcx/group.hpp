#pragma once

#include "permcx/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permcx {

/// Elementary abelian p-group C_p^r identified with the vector space F_p^r.
/// The standard basis vectors are the distinguished generators. Rank 0 is the
/// trivial group; it appears when restricting to the trivial subgroup.
struct ElemAbGroup {
    int p = 2;
    int r = 1;

    long long order() const;
    bool operator==(const ElemAbGroup& o) const { return p == o.p && r == o.r; }
    bool operator!=(const ElemAbGroup& o) const { return !(*this == o); }
    std::string describe() const;
};

void validate_group(const ElemAbGroup& g);

/// Group elements as coordinate vectors with entries in [0, p).
using VecFp = std::vector<int>;

/// Lexicographic code of a vector: v[0] is the most significant digit, so
/// ascending codes enumerate F_p^r in lexicographic order.
long long vec_code(const ElemAbGroup& g, const VecFp& v);
VecFp vec_from_code(const ElemAbGroup& g, long long code);
VecFp vec_add(const ElemAbGroup& g, const VecFp& a, const VecFp& b);
VecFp vec_sub(const ElemAbGroup& g, const VecFp& a, const VecFp& b);
VecFp vec_scale(const ElemAbGroup& g, int c, const VecFp& a);
std::vector<VecFp> all_vectors(const ElemAbGroup& g);

/// A subgroup of C_p^r, i.e. a subspace of F_p^r, stored as the canonical
/// reduced-row-echelon basis with no zero rows. Equality is structural, so
/// equal subgroups compare equal and deduplicate without extra bookkeeping.
class Subgroup {
public:
    Subgroup(ElemAbGroup group, Matrix rref_basis);

    static Subgroup from_generators(const ElemAbGroup& g, const std::vector<VecFp>& vectors);
    static Subgroup trivial(const ElemAbGroup& g);
    static Subgroup full(const ElemAbGroup& g);

    const ElemAbGroup& group() const { return group_; }
    const Matrix& basis() const { return basis_; }
    int rank() const { return basis_.rows(); }
    long long order() const;
    long long index() const;

    VecFp basis_row(int i) const;
    bool contains_vector(const VecFp& v) const;
    /// All p^rank elements in lexicographic order.
    std::vector<VecFp> elements() const;

    bool operator==(const Subgroup& o) const;
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
    std::string describe() const;

private:
    ElemAbGroup group_;
    Matrix basis_;
};

struct LatticeRelation {
    bool contains = false;            // first argument contained in second
    long long index_if_contained = 0; // 0 when not contained
    Subgroup sum;
    Subgroup intersection;
};

LatticeRelation lattice_ops(const Subgroup& inner, const Subgroup& outer);

/// One representative per coset, each the lexicographically smallest vector
/// of its coset, listed in lexicographic order. This ordering fixes the basis
/// of every permutation module, so it is part of the serialization contract.
std::vector<VecFp> coset_reps(const Subgroup& e);

using SubgroupCollection = std::vector<Subgroup>;

void validate_collection(const SubgroupCollection& h);

/// Every subspace of F_p^r (optionally of one fixed rank), canonical bases,
/// deterministic order: rank ascending, then pivot columns lexicographic,
/// then free entries ascending.
SubgroupCollection all_subgroups(const ElemAbGroup& g,
                                 std::optional<int> rank_filter = std::nullopt,
                                 long long max_order = 81);

struct ChainViolation {
    Subgroup sub;
    Subgroup super;
};

struct ChainConditionReport {
    bool ok = true;
    std::vector<ChainViolation> violations;
};

/// Lists every ordered pair (E, F) of distinct members with E contained in F
/// at index p, in collection order.
ChainConditionReport check_chain_condition(const SubgroupCollection& h);

} // namespace permcx
