#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phantom/ring/poly_ring.hpp"

namespace phantom {

struct Term {
  Coeff coef;
  Monomial mono;
};

// Element of the ambient polynomial ring; terms kept in descending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Coeff coef, const Monomial& mono);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Coeff constant_coefficient() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(Coeff c, const Monomial& m) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Repeated squaring; checks the degree budget.
  Polynomial pow(std::uint64_t n) const;
  // f^q for q a power of the characteristic, computed by raising monomials.
  Polynomial frobenius(std::uint64_t q) const;
  Polynomial monic() const;

  std::string to_string() const;
  std::uint64_t hash() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

struct VTerm {
  Coeff coef;
  std::uint32_t pos;
  Monomial mono;
};

// Element of a free module S^rank under position-over-term order:
// a smaller position index is larger, then the monomial order decides.
class Vector {
 public:
  Vector() = default;
  Vector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

  static Vector unit(RingPtr ring, std::size_t rank, std::size_t index);
  static Vector from_coordinates(RingPtr ring, const std::vector<Polynomial>& coords);
  static Vector from_terms(RingPtr ring, std::size_t rank, std::vector<VTerm> terms);
  // Terms must already be sorted, distinct and nonzero.
  static Vector from_sorted_terms(RingPtr ring, std::size_t rank, std::vector<VTerm> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VTerm& lead() const { return terms_.front(); }
  int degree() const;

  std::vector<Polynomial> coordinates() const;
  Polynomial coordinate(std::size_t index) const;

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector operator*(const Polynomial& f) const;
  Vector scaled(Coeff c) const;
  Vector times_term(Coeff c, const Monomial& m) const;
  bool operator==(const Vector& o) const;
  bool operator!=(const Vector& o) const { return !(*this == o); }

  // this + c*m*o, merging sorted term lists.
  Vector add_multiple(const Vector& o, Coeff c, const Monomial& m) const;
  Vector frobenius(std::uint64_t q) const;
  Vector monic() const;

  // Positions shifted by offset inside a free module of rank new_rank.
  Vector embed(std::size_t new_rank, std::size_t offset) const;
  // Components in [begin, end), shifted down to start at position 0.
  Vector slice(std::size_t begin, std::size_t end) const;

  std::string to_string() const;
  std::uint64_t hash() const;

 private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<VTerm> terms_;
};

// Positive if term a is larger than term b in position-over-term order.
int compare_terms(const PolyRing& ring, const VTerm& a, const VTerm& b);

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace phantom
