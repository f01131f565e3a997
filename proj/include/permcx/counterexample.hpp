#pragma once

#include "permcx/complex.hpp"

namespace permcx {

/// The exact, non-contractible complex 0 -> k -> kC_p -> kC_p -> k -> 0 over
/// the cyclic group of order p: the first map sends 1 to the norm element,
/// the middle map is multiplication by (g - 1), the last is the augmentation.
BoundedComplex periodicity_complex(int p, const FieldPtr& field);

struct CounterexampleReport {
    Subgroup sub;
    Subgroup super;
    BoundedComplex complex;
    bool exact = false;
    bool contractible = true;
};

/// For an index-p containment E < F: inflate the periodicity complex through
/// the quotient F/E (realized by the lowest-index completion of E's basis
/// inside F), induce up to the ambient group, and re-base every term onto the
/// canonical permutation module so the terms carry exact tags on {E, F}. The
/// result is re-certified: it must be exact and must not be contractible.
CounterexampleReport chain_pair_counterexample(const Subgroup& sub, const Subgroup& super,
                                               const FieldPtr& field);

/// One certified counterexample per violating pair of the chain condition;
/// empty exactly when the condition holds.
std::vector<CounterexampleReport> necessity_report(const SubgroupCollection& h,
                                                   const FieldPtr& field);

} // namespace permcx
