#pragma once

#include "permcx/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permcx {

enum class SummandKind { trivial, free_module, permutation };
const char* kind_name(SummandKind k);

/// A certified direct-summand claim: `multiplicity` copies of one canonical
/// summand occupying coordinates [begin, end). Tags are metadata, never
/// trusted blindly: validate_module re-checks every claim against the action
/// matrices.
struct SummandTag {
    SummandKind kind = SummandKind::trivial;
    std::optional<Subgroup> subgroup; // present iff kind == permutation
    int multiplicity = 1;
    int begin = 0;
    int end = 0;

    bool operator==(const SummandTag& o) const;
};

/// A finite-dimensional module over kG for G elementary abelian, given by one
/// pairwise-commuting unipotent action matrix per generator. Vectors are
/// columns; action[i] is the matrix of the i-th standard generator.
struct GModule {
    ElemAbGroup group;
    FieldPtr field;
    int dim = 0;
    std::vector<Matrix> action;
    std::optional<std::vector<SummandTag>> tags;
};

GModule make_trivial(const ElemAbGroup& g, const FieldPtr& field, int multiplicity);
GModule make_free(const ElemAbGroup& g, const FieldPtr& field, int multiplicity);

/// The permutation module on the cosets of E, basis indexed by coset_reps(E).
/// E = G gives the trivial module, E = 1 the free module of rank one.
GModule make_permutation(const Subgroup& e, const FieldPtr& field);

GModule direct_sum(const std::vector<GModule>& modules);

/// Checks commuting actions, unipotence of exponent p, and every tag claim
/// (block-diagonal decomposition with canonical blocks). Throws naming the
/// violated invariant.
void validate_module(const GModule& m);

/// Exact comparison of group, field, dimension and action matrices.
bool same_module(const GModule& a, const GModule& b);

/// Action of the group element v = sum v_i g_i, i.e. the product of the
/// generator matrices with those exponents.
Matrix element_action(const GModule& m, const VecFp& v);

/// Canonical basis of Hom_kG(source, target): the kernel basis of the
/// vectorized commutation system {X A_i = B_i X}, each row reshaped to a
/// target.dim x source.dim matrix.
std::vector<Matrix> hom_space(const GModule& source, const GModule& target);

/// Rows: canonical basis of the fixed-point subspace M^G.
Matrix fixed_points(const GModule& m);

/// Rows: canonical basis of rad M = sum_i im(A_i - I).
Matrix radical(const GModule& m);

/// Same underlying space; actions of the canonical basis vectors of H.
/// Trivial tags survive, any other tag is dropped (the canonical basis order
/// of the restricted summands is not preserved in general).
GModule restrict_to(const GModule& m, const Subgroup& h);

/// kG tensor_{kH} M for H given by an ordered independent basis inside G
/// (rows of `embedding`). Basis: (coset representative, basis vector of M)
/// in coset order. A one-dimensional trivial module induces to the canonical
/// permutation module on the embedded subgroup, exactly.
GModule induce(const GModule& m, const Matrix& embedding);

/// Induction of a map between modules over the same subgroup: one diagonal
/// block per coset.
Matrix induce_map(const Matrix& f, int copies);

/// Pullback along the surjection G ->> Q given by `quotient_map` (r x s over
/// F_p, row i = image of the i-th generator of G). Same dimension; trivial
/// tags survive.
GModule inflate(const GModule& m, const Matrix& quotient_map);

struct EquivariantMap {
    GModule source;
    GModule target;
    Matrix matrix; // target.dim x source.dim
};

void validate_map(const EquivariantMap& f);

} // namespace permcx
