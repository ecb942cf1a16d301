#pragma once

#include "phantom/closures/closure.hpp"
#include "phantom/complexes/chain_complex.hpp"

namespace phantom {

// Z_i(F^e C) ⊆ B_i(F^e C)^* for e = 0..e_max. Cycle generators at level e are
// tested with tight-closure scans reaching level at most max(e0, e_max - e) above e.
// Reading kHolds; a failure certificate names (level, generator, q').
Verdict stably_phantom_at(const ChainComplex& c, int i, const TestElementSpec& spec, unsigned e_max);

// Phantomness of [z] in H_i(F^e C): z in B^*. Throws InputError if z is no cycle.
Verdict phantom_element(const ChainComplex& c, int i, unsigned e, const Vector& z, const TestElementSpec& spec,
                        unsigned e_max);

// Criterion (a) is stably_phantom_at; criterion (c) asks c z^q0 ∈ B^[q0] for
// every cycle generator z at each level, an exact check per level.
struct CriteriaReport {
  Verdict phantom;        // (a)
  Verdict kills;          // (c): certified failure, or CertifiedHolds on the scanned levels
  bool flag = false;      // certified statuses contradict each other
  std::string detail;
};

CriteriaReport criteria_equivalence_check(const ChainComplex& c, int i, const TestElementSpec& spec, unsigned e_max);

// Cycles at each level e <= e_max lie in the Frobenius closure of the boundaries.
Verdict finf_exact_at(const ChainComplex& c, int i, unsigned e_max);

// A --alpha--> B --beta--> C with beta alpha = 0.
struct GeInjectivityReport {
  Verdict direct;      // ker F^e(beta) ⊆ (im F^e alpha)^*
  Verdict injective;   // beta^{-1}(approximate 0^*) ⊆ (im alpha)^*
  bool agree = true;   // no certified contradiction
};

GeInjectivityReport ge_injectivity_check(const ModuleMap& alpha, const ModuleMap& beta, const TestElementSpec& spec,
                                         unsigned e_max, int candidate_degree = 2);

}  // namespace phantom
