#pragma once

#include <vector>

#include "phantom/modules/frobenius.hpp"

namespace phantom {

// C_lo <- ... <- C_hi with d_i : C_i -> C_{i-1}. Outside [lo, hi] the modules
// are zero. The constructor checks that each d_i is well defined and that
// d_{i-1} d_i vanishes on every generator.
class ChainComplex {
 public:
  ChainComplex() = default;
  // differentials[k] is d_{lo+k+1}: C_{lo+k+1} -> C_{lo+k}.
  ChainComplex(QRingPtr ring, int lo, std::vector<PresentedModule> modules, std::vector<Matrix> differentials);

  const QRingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
  PresentedModule module(int i) const;
  ModuleMap differential(int i) const;

  ChainComplex frobenius(unsigned e) const;

 private:
  struct Trusted {};
  ChainComplex(Trusted, QRingPtr ring, int lo, std::vector<PresentedModule> modules, std::vector<ModuleMap> maps);

  QRingPtr ring_;
  int lo_ = 0;
  std::vector<PresentedModule> modules_;
  std::vector<ModuleMap> maps_;
};

// K.(x; M) in degrees 0..n. The basis of K_k is the k-subsets of {1..n} in
// colex order, and d(e_J) = sum_s (-1)^(s+1) x_{j_s} e_{J - j_s}. With this
// order the last variable splits d_{k+1} into blocks
// [[d'_{k+1}, (-1)^k x_n I], [0, d'_k]] where d' is the differential of K.(x_1..x_{n-1}).
ChainComplex koszul(const std::vector<Polynomial>& xs, const PresentedModule& m);
// Bare matrix of d_k for K.(x; R).
Matrix koszul_matrix(const RingPtr& ring, const std::vector<Polynomial>& xs, int k);

// Z_i and B_i of F^e(C), both inside F^e(C_i).
struct HomologyData {
  unsigned e = 0;
  int i = 0;
  Submodule cycles;
  Submodule boundaries;
};

// Same submodule with generators in decreasing order of leading term, so
// certificates do not depend on how a kernel computation emitted them.
Submodule canonical_generators(const Submodule& n);

HomologyData homology_data(const ChainComplex& c, int i, unsigned e);

// Whether z is a cycle of F^e(C) at i.
bool is_cycle(const ChainComplex& c, int i, unsigned e, const Vector& z);
// Exact vanishing of H_i: Z_i ⊆ B_i.
bool exact_at(const ChainComplex& c, int i, unsigned e = 0);

}  // namespace phantom
