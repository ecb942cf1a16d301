#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phantom/complexes/phantom_homology.hpp"

namespace phantom {

// 0 -> L. -alpha-> M. -beta-> N. -> 0 over one degree range. The constructor
// checks exactly that alpha and beta are chain maps, beta alpha = 0 and each
// beta_i is surjective. The two closure conditions per degree are verdicts,
// see hypotheses().
class ShortSPSequence {
 public:
  ShortSPSequence(ChainComplex l, ChainComplex m, ChainComplex n, std::vector<Matrix> alpha, std::vector<Matrix> beta);

  const ChainComplex& l() const { return l_; }
  const ChainComplex& m() const { return m_; }
  const ChainComplex& n() const { return n_; }
  ModuleMap alpha(int i) const;
  ModuleMap beta(int i) const;

  // Per degree i: ker F^e(beta_i) ⊆ (im F^e(alpha_i))^* and ker F^e(alpha_i) ⊆ 0^*, e <= e_max.
  struct DegreeHypotheses {
    int degree;
    Verdict middle;
    Verdict left;
  };
  std::vector<DegreeHypotheses> hypotheses(const TestElementSpec& spec, unsigned e_max) const;

 private:
  ChainComplex l_, m_, n_;
  std::vector<ModuleMap> alpha_, beta_;
};

struct DeltaLift {
  Vector y;               // beta_i(y) = z in F^e(M_i)
  Vector x;               // alpha_{i-1}(x) = d(c y^q') in F^{e+e'}(L_{i-1})
  Vector representative;  // c x^q'' in F^{e+e'+e''}(L_{i-1})
};

struct DeltaClass {
  Vector z;
  unsigned e = 0, e1 = 0, e2 = 0;  // levels of z, q' = p^e1, q'' = p^e2
  DeltaLift primary;
  std::vector<DeltaLift> alternates;
  bool is_cycle = false;          // d(c x^q'') = 0 exactly
  bool lift_independent = true;   // every alternate gives the same homology class
  bool is_zero = false;           // the class vanishes in homology
};

// delta^{(q',q'')}([z]) for a cycle z of F^e(N_i). Alternates come from adding
// kernel generators of F^e(beta_i) to y and of F^{e+e'}(alpha_{i-1}) to x.
// Throws LiftError when no y or x exists, InputError on bad arguments.
DeltaClass connecting_delta(const ShortSPSequence& s, int i, const Vector& z, unsigned e, unsigned e1, unsigned e2,
                            const TestElementSpec& spec, std::size_t max_alternates = 6);

struct SPPart {
  std::string name;
  int degree = 0;
  std::vector<std::pair<std::string, Verdict>> items;
  bool flag = false;
  std::string detail;
};

// Evaluates, per degree, which classes map to phantom elements (phantom-image,
// delta-zero-image, n-criterion) and how stable phantomness passes between the
// three complexes (spots.L/M/N). Flags only certified contradictions.
std::vector<SPPart> sp_sequence_checks(const ShortSPSequence& s, const std::vector<int>& degrees,
                                       const TestElementSpec& spec, unsigned e_max);

}  // namespace phantom
