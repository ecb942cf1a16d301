#pragma once

#include <memory>
#include <string>
#include <vector>

#include "phantom/ring/groebner.hpp"

namespace phantom {

// R = S/J. Modules over R are presented over S with the J-columns appended
// lazily, so J is never multiplied into presentation matrices. "Local" means
// the graded-local convention: m is generated by all variables and J lies in m.
class QuotientRing {
 public:
  QuotientRing(RingPtr ambient, std::vector<Polynomial> ideal, bool regular = false);

  const RingPtr& ambient() const { return ambient_; }
  std::uint32_t characteristic() const { return ambient_->characteristic(); }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  const std::vector<Polynomial>& ideal_basis() const { return basis_; }
  // Declared by the caller; enables certified non-membership for Frobenius closure.
  bool regular() const { return regular_; }
  bool is_polynomial_ring() const { return basis_.empty(); }

  Polynomial reduce(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool in_maximal_ideal(const Polynomial& f) const;
  // J*e_i for every i < rank, as vectors in S^rank.
  std::vector<Vector> ideal_columns(std::size_t rank) const;

  Polynomial parse(const std::string& text) const;
  Polynomial constant(std::int64_t v) const { return Polynomial::constant(ambient_, v); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient_, i); }

  std::string signature() const;

 private:
  RingPtr ambient_;
  std::vector<Polynomial> ideal_;
  std::vector<Polynomial> basis_;
  bool regular_;
};

using QRingPtr = std::shared_ptr<const QuotientRing>;

QRingPtr make_quotient(RingPtr ambient, std::vector<Polynomial> ideal = {}, bool regular = false);
QRingPtr make_quotient(RingPtr ambient, const std::vector<std::string>& ideal, bool regular = false);

}  // namespace phantom
