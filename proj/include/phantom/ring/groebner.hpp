#pragma once

#include <memory>
#include <vector>

#include "phantom/ring/polynomial.hpp"

namespace phantom {

// A reduced Groebner basis of a submodule of S^rank (rank 1: an ideal),
// monic and sorted by increasing leading term.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::size_t rank, std::vector<Vector> elements);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Vector>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  // True if every e_i lies in the submodule.
  bool is_everything() const;
  std::vector<Polynomial> as_polynomials() const;

 private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<Vector> elements_;
  std::vector<std::vector<std::size_t>> by_position_;
};

using BasisPtr = std::shared_ptr<const GroebnerBasis>;

// Buchberger's algorithm with the normal selection strategy, ties broken by
// generator index; product criterion for ideals, chain criterion always.
GroebnerBasis compute_groebner(const RingPtr& ring, std::size_t rank, std::vector<Vector> generators);

// Cached entry point; see GroebnerCache.
BasisPtr groebner(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& generators);

// Remainder of the division algorithm; divisors need not form a basis.
Vector reduce_by(const Vector& f, const std::vector<Vector>& divisors);

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

std::vector<Vector> to_vectors(const std::vector<Polynomial>& polys);

}  // namespace phantom
