#pragma once

#include <optional>
#include <vector>

#include "phantom/closures/closure.hpp"

namespace phantom {

// L ⊆ N ⊆ M; the constructor checks both containments by reduction.
class NakayamaInstance {
 public:
  NakayamaInstance(Submodule l, Submodule n);
  const Submodule& l() const { return l_; }
  const Submodule& n() const { return n_; }

 private:
  Submodule l_;
  Submodule n_;
};

struct NakayamaGenericReport {
  // One verdict per generator of N: membership in (L + mN)^* and in L^*.
  std::vector<Verdict> hypothesis;
  std::vector<Verdict> conclusion;
  Verdict hypothesis_all;
  Verdict conclusion_all;
  // Generators whose conclusion is certified false while the hypothesis is at
  // least witnessed. Flagged for review, never asserted.
  std::vector<std::size_t> flagged;
  bool potential_counterexample() const { return !flagged.empty(); }
};

NakayamaGenericReport nakayama_generic_check(const NakayamaInstance& inst, const TestElementSpec& spec, unsigned e_max);

struct NakayamaPair {
  unsigned e = 0;
  unsigned e_prime = 0;
  bool holds = false;
  // First generator of N_e violating the containment.
  std::optional<std::size_t> failing_generator;
};

struct NakayamaFamilyReport {
  std::vector<NakayamaPair> pairs;
  bool hypothesis_met = false;
  // Per e: N_e ⊆ (L^[q])^*, joined over generators.
  std::vector<Verdict> conclusion;
  // Hypothesis met on every pair while some conclusion is certified false.
  bool potential_counterexample = false;
};

// family[e] is N_e ⊆ F^e(M). Pairs (e, e') with e' >= e0 and e + e' < family.size()
// are checked exactly. Throws InputError if no pair fits or L^[q] ⊄ N_e.
NakayamaFamilyReport nakayama_family_check(const Submodule& l, const std::vector<Submodule>& family,
                                           const TestElementSpec& spec, unsigned e_max);

// N_e = N^[q] for e = 0..e_max.
std::vector<Submodule> bracket_family(const Submodule& n, unsigned e_max);

}  // namespace phantom
