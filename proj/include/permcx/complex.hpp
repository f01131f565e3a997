#pragma once

#include "permcx/module.hpp"
#include "permcx/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace permcx {

/// Bounded cochain complex C^0 -> C^1 -> ... -> C^l. diffs[i] is the matrix
/// of d^i : C^i -> C^{i+1}. The empty complex (no terms) is permitted and is
/// exact and contractible by convention; a single-term complex is exact (and
/// contractible) exactly when the term is zero.
struct BoundedComplex {
    std::vector<GModule> terms;
    std::vector<Matrix> diffs;

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

struct ComplexViolation {
    std::string invariant; // "module" | "shape" | "equivariance" | "composite"
    int position = -1;
    int generator = -1;
    std::string detail;
};

std::vector<ComplexViolation> validate_complex(const BoundedComplex& c);
void require_valid(const BoundedComplex& c);

struct ExactnessReport {
    bool exact = true;
    std::vector<int> homology_dims;
};

/// Homology dimensions by exact rank computations; ker d^l := C^l and
/// im d^{-1} := 0 at the ends.
ExactnessReport is_exact(const BoundedComplex& c);

/// Chain contraction certificate: maps[i-1] = h^i : C^i -> C^{i-1} for
/// i = 1..l, satisfying d h + h d = id with h^0 = 0 and h^{l+1} = 0.
struct Homotopy {
    std::vector<Matrix> maps;
};

bool verify_homotopy(const BoundedComplex& c, const Homotopy& h);

struct ContractibilityReport {
    bool contractible = false;
    std::optional<Homotopy> certificate;
};

/// Decides contractibility by one global affine solve over the field: the
/// unknown homotopy components range over a Hom-space basis per position (so
/// equivariance is built in) and the equations dh + hd = id are stacked into
/// a single system. The returned certificate is re-verified exactly.
ContractibilityReport is_contractible(const BoundedComplex& c);

BoundedComplex direct_sum_complex(const BoundedComplex& a, const BoundedComplex& b);
BoundedComplex shift_complex(const BoundedComplex& c, int n);
BoundedComplex restrict_complex(const BoundedComplex& c, const Subgroup& h);
BoundedComplex induce_complex(const BoundedComplex& c, const Matrix& embedding);
BoundedComplex inflate_complex(const BoundedComplex& c, const Matrix& quotient_map);

enum class Membership { certified, failed, unknown };
enum class Verdict { consistent, violation_candidate, inconclusive };

const char* membership_name(Membership m);
const char* verdict_name(Verdict v);

struct CollectionCriterionReport {
    Membership membership = Membership::unknown;
    std::vector<std::string> membership_detail;
    ChainConditionReport condition;
    ExactnessReport exactness;
    ContractibilityReport contractibility;
    Verdict verdict = Verdict::inconclusive;
};

/// Runs the full hypothesis/conclusion check for a collection of subgroups
/// against a complex: summand membership (from certified tags), the index-p
/// chain condition, exactness, and contractibility. The verdict is
/// CONSISTENT-WITH-THEOREM when (condition && membership && exact) implies
/// contractible, THEOREM-VIOLATION-CANDIDATE when the hypothesis holds but
/// the solver finds no contraction, and INCONCLUSIVE when untagged terms
/// leave the hypothesis undecided.
CollectionCriterionReport check_collection_criterion(const SubgroupCollection& h,
                                                     const BoundedComplex& c);

/// The terminal splitting of a contractible complex of trivial-plus-free
/// modules through a rank-two subgroup: restrict to E, contract, take the
/// terminal homotopy component, and project onto the trivial summand of the
/// next-to-last term. The free component of the terminal homotopy lands in
/// the radical of the free part (asserted), so the projected map still
/// splits the last differential, now equivariantly over the whole group.
EquivariantMap split_via_rank_two_subgroup(const BoundedComplex& c, const Subgroup& e);

/// Contractible-by-construction complex: pieces[i] sits as
/// 0 -> pieces[i] -> pieces[i] -> 0 in degrees (i, i+1), the sum is
/// conjugated by random equivariant automorphisms drawn from Hom-space
/// combinations until invertible. Terms keep their summand tags.
BoundedComplex contractible_from_pieces(const ElemAbGroup& g, const FieldPtr& field,
                                        const std::vector<GModule>& pieces, Rng& rng);

/// Seeded test-data generator: pieces are direct sums of permutation modules
/// on the collection's subgroups with multiplicities drawn up to the given
/// bounds (one bound per subgroup). The output validates, is exact and is
/// contractible by construction; it cannot produce non-contractible exact
/// complexes, so it exercises the checkers rather than searching for
/// violations.
BoundedComplex random_contractible_complex(const SubgroupCollection& h, const FieldPtr& field,
                                           int length, const std::vector<int>& max_multiplicities,
                                           std::uint64_t seed);

} // namespace permcx
