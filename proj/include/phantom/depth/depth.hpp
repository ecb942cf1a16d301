#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phantom/complexes/phantom_homology.hpp"

namespace phantom {

// One element of a sequence, tested on the quotient by the earlier elements.
// Verdicts use Reading::kRegular and are capped at WitnessedUpTo: regularity
// quantifies over every e, so a scan can refute it but never prove it.
struct StepVerdict {
  Polynomial x;
  Verdict verdict;
  // Every kernel generator at every scanned level was certified to lie in 0^*.
  bool certified_clean = false;
  // Phantom scans only: the failing exponent t and prefix exponents u.
  std::optional<std::uint64_t> t;
  std::vector<std::uint64_t> u;
};

struct SequenceVerdict {
  std::vector<Polynomial> xs;
  std::vector<StepVerdict> steps;  // stops after the first failing step
  bool proper = true;              // xs M != M
  Verdict aggregate;
  std::optional<std::size_t> failing_step;
  unsigned e_max = 0;
  std::uint64_t t_max = 0;

  bool certified_no() const { return aggregate.certified_non_member(); }
  // All steps certified clean on the scanned levels (vacuous for an empty sequence).
  bool certified_clean() const;
};

// 0 :_{F^e(M)} x^q ⊆ 0^* for e <= e_max. Throws InputError if x is outside the
// maximal ideal or M = 0. If xM = M the step is CertifiedNo with element "xM = M".
StepVerdict ghost_regular_element(const Polynomial& x, const PresentedModule& m, const TestElementSpec& spec,
                                  unsigned e_max);

SequenceVerdict ghost_regular_sequence(const std::vector<Polynomial>& xs, const PresentedModule& m,
                                       const TestElementSpec& spec, unsigned e_max);

// All exponents t <= t_max and prefix tuples u with entries <= t_max.
// t_max = 0 selects p^e_max.
SequenceVerdict phantom_regular_sequence(const std::vector<Polynomial>& xs, const PresentedModule& m,
                                         const TestElementSpec& spec, unsigned e_max, std::uint64_t t_max = 0);

enum class DepthQualifier {
  kCertified,     // every counted spot certified-holds, and the boundary spot certified-fails (or d = n)
  kBoundLimited,  // some counted spot or the boundary rests on a bounded scan
};

struct PhantomDepthReport {
  unsigned depth = 0;
  DepthQualifier qualifier = DepthQualifier::kBoundLimited;
  // Spot verdicts in the order evaluated.
  std::vector<std::pair<int, Verdict>> spots;
  // Rigidity predicted one spot and the direct scan saw another.
  bool rigidity_flag = false;
};

// Largest d with K.(I; M) stably phantom at n, n-1, ..., n-d+1. With
// trust_rigidity the boundary is located by bisection over single spots, and
// re-verified spot by spot before a certified qualifier is emitted; without it
// every spot from n down to the boundary is scanned. Throws InputError if IM = M.
PhantomDepthReport phantom_depth(const std::vector<Polynomial>& gens, const PresentedModule& m,
                                 const TestElementSpec& spec, unsigned e_max, bool trust_rigidity = false);

// Largest j with H_{n-i}(K.(I; M)) = 0 for i < j.
unsigned classical_depth(const std::vector<Polynomial>& gens, const PresentedModule& m);

// Ideals of S containing J, standing for primes of R.
using PrimeList = std::vector<std::vector<Polynomial>>;

// Minimal primes of M from its 0-th Fitting ideal, when that ideal plus J is
// monomial. Throws UnsupportedInput otherwise.
PrimeList module_minimal_primes(const PresentedModule& m);

// ht (I + p)/p as dim R/p - dim R/(I + p), for each prime.
std::vector<int> relative_heights(const std::vector<Polynomial>& gens, const PrimeList& primes, const QuotientRing& ring);
// Minimum, resp. maximum, of relative_heights. Primes default to module_minimal_primes.
int minheight(const std::vector<Polynomial>& gens, const PresentedModule& m, const std::optional<PrimeList>& primes);
int height(const std::vector<Polynomial>& gens, const PresentedModule& m, const std::optional<PrimeList>& primes);

struct DepthReport {
  std::vector<Polynomial> gens;
  unsigned depth = 0;
  PhantomDepthReport phantom;
  int minheight = 0;
  int height = 0;
  bool all_certified = false;
  bool chain_violation = false;
};

DepthReport depth_chain_report(const std::vector<Polynomial>& gens, const PresentedModule& m,
                               const TestElementSpec& spec, unsigned e_max,
                               const std::optional<PrimeList>& primes = std::nullopt);

struct PermutabilityReport {
  SequenceVerdict forward;
  SequenceVerdict backward;
  bool flag = false;  // certified-no one way, certified-clean the other
};

PermutabilityReport permutability_check(const Polynomial& x, const Polynomial& y, const PresentedModule& m,
                                        const TestElementSpec& spec, unsigned e_max);

struct MaximalSequence {
  std::vector<std::size_t> order;  // pool indices in the order tried
  std::vector<Polynomial> sequence;
  // Every other pool element is a certified ghost zerodivisor on the quotient,
  // and K.(I; M/xM) certified-fails at its top spot.
  bool certified_maximal = false;
};

struct MaximalScanReport {
  std::vector<MaximalSequence> runs;
  bool flag = false;  // two certified-maximal runs of different lengths
  std::vector<std::size_t> lengths() const;
};

// Greedy ghost sequences drawn from the pool (default: the generators of I),
// over every ordering for pools of size <= 4 and the rotations otherwise.
MaximalScanReport maximal_sequence_scan(const std::vector<Polynomial>& gens, const PresentedModule& m,
                                        const TestElementSpec& spec, unsigned e_max,
                                        std::optional<std::vector<Polynomial>> pool = std::nullopt);

// Single-element link between ghost regularity and the reduced Frobenius
// approximation: if x is certified clean, then no kernel generator of x^q on
// F^e(M) modulo the certified part of 0^* may certifiably lie outside 0^*.
struct GeRegularityReport {
  StepVerdict ghost;
  bool flag = false;
  std::string detail;
};

GeRegularityReport ge_regularity_check(const Polynomial& x, const PresentedModule& m, const TestElementSpec& spec,
                                       unsigned e_max, int candidate_degree = 2);

}  // namespace phantom
