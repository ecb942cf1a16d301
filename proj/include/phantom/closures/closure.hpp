#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phantom/closures/verdict.hpp"
#include "phantom/modules/frobenius.hpp"

namespace phantom {

// A declared q0-weak test element: z in N^* iff c z^q in N^[q] for all q >= q0.
// Never derived; every certified non-membership is conditional on it.
struct TestElementSpec {
  Polynomial c;
  std::uint64_t q0 = 1;
  bool locally_stable = false;
  std::string provenance;

  // Throws InputError if c vanishes in R or q0 is not a power of p.
  void validate(const QuotientRing& ring) const;
  unsigned e0(const QuotientRing& ring) const;
};

TestElementSpec unit_test_element(const QuotientRing& ring, std::string provenance = "unit");

// c_{-1} = 1, c_{n+1} = c * c_n^{q0}; reduced in R.
Polynomial cn_multiplier(const TestElementSpec& spec, int n, const QuotientRing& ring);

// Trivial membership, then z^q in N^[q] for q = p, ..., p^e_max.
// With the ring's regular flag a failure is certified; otherwise NoWitnessUpTo.
Verdict frobenius_closure_member(const Vector& z, const Submodule& n, unsigned e_max);

// Trivial membership, Frobenius witnesses up to e_max, then c z^q' in N^[q']
// for q0 <= q' <= p^max(e0, e_max). A failure gives CertifiedNonMember.
Verdict tight_closure_member(const Vector& z, const Submodule& n, const TestElementSpec& spec, unsigned e_max);

std::vector<Verdict> zero_star_members(const std::vector<Vector>& candidates, const PresentedModule& m,
                                       const TestElementSpec& spec, unsigned e_max);

// Re-checks a verdict's certificate with fresh normal forms only.
bool replay_certificate(const Verdict& v, const Vector& z, const Submodule& n, const TestElementSpec* spec);

struct CandidateVerdict {
  Vector candidate;
  Verdict verdict;
};

// F^e(M) modulo the candidates judged to lie in 0^* (certified or only
// witnessed). Candidates default to standard monomials times generators of
// degree <= candidate_degree.
struct ReducedFrobenius {
  PresentedModule module;
  std::vector<CandidateVerdict> candidates;
  // Indices of candidates killed on WitnessedUpTo evidence only.
  std::vector<std::size_t> witnessed_only;
  bool certified() const { return witnessed_only.empty(); }
};

std::vector<Vector> standard_candidates(const PresentedModule& m, int max_degree);

ReducedFrobenius reduced_frobenius(const PresentedModule& m, unsigned e, const TestElementSpec& spec,
                                   unsigned e_max, std::optional<std::vector<Vector>> candidates = std::nullopt,
                                   int candidate_degree = 2);

}  // namespace phantom
