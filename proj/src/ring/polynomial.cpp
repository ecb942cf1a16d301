#include "phantom/ring/polynomial.hpp"

#include <algorithm>

#include "phantom/ring/errors.hpp"
#include "term_ops.hpp"

namespace phantom {

namespace {

using detail::merge;
using detail::normalize;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

auto term_cmp(const PolyRing& ring) {
  return [&ring](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono); };
}

auto vterm_cmp(const PolyRing& ring) {
  return [&ring](const VTerm& a, const VTerm& b) { return compare_terms(ring, a, b); };
}

}  // namespace

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (a == b) return;
  if (!a || !b || a->signature() != b->signature()) {
    throw RingMismatch(std::string("ring mismatch in ") + where);
  }
}

int compare_terms(const PolyRing& ring, const VTerm& a, const VTerm& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return ring.compare(a.mono, b.mono);
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
  Polynomial f(ring);
  Coeff c = ring->field().from_signed(value);
  if (c != 0) f.terms_.push_back({c, Monomial{}});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw InputError("variable index out of range");
  Polynomial f(ring);
  f.terms_.push_back({1, phantom::variable(index)});
  return f;
}

Polynomial Polynomial::term(RingPtr ring, Coeff coef, const Monomial& mono) {
  Polynomial f(ring);
  coef %= ring->characteristic();
  if (coef != 0) f.terms_.push_back({coef, mono});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(ring);
  for (auto& t : terms) t.coef %= ring->characteristic();
  normalize(terms, ring->field(), term_cmp(*ring));
  f.terms_ = std::move(terms);
  return f;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree != terms_.front().mono.degree) return false;
  }
  return true;
}

Coeff Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "polynomial addition");
  Polynomial r(ring_);
  r.terms_ = merge(terms_, o.terms_, 1, ring_->field(), term_cmp(*ring_));
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "polynomial subtraction");
  Polynomial r(ring_);
  r.terms_ = merge(terms_, o.terms_, ring_->field().neg(1), ring_->field(), term_cmp(*ring_));
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "polynomial multiplication");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  const auto& field = ring_->field();
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({field.mul(a.coef, b.coef), mul(a.mono, b.mono)});
  }
  normalize(prod, field, term_cmp(*ring_));
  Polynomial r(ring_);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(ring_);
  c %= ring_->characteristic();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field().mul(t.coef, c);
  return r;
}

Polynomial Polynomial::times_term(Coeff c, const Monomial& m) const {
  Polynomial r(ring_);
  c %= ring_->characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(t.coef, c), mul(t.mono, m)});
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coef != o.terms_[i].coef || terms_[i].mono != o.terms_[i].mono) return false;
  }
  return true;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  if (n > 0 && !is_zero()) ring_->check_degree(static_cast<std::uint64_t>(std::max(degree(), 0)) * n, "power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  if (!log_p(ring_->characteristic(), q)) {
    throw InputError("Frobenius exponent " + std::to_string(q) + " is not a power of p");
  }
  if (!is_zero()) ring_->check_degree(static_cast<std::uint64_t>(degree()) * q, "Frobenius power");
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coef, phantom::pow(t.mono, q)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().coef));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += '+';
    if (t.mono.is_one()) {
      s += std::to_string(t.coef);
    } else {
      if (t.coef != 1) s += std::to_string(t.coef) + '*';
      s += ring_->monomial_string(t.mono);
    }
  }
  return s;
}

std::uint64_t Polynomial::hash() const {
  std::uint64_t h = 0x51ed270b27;
  for (const auto& t : terms_) h = mix(mix(h, t.coef), t.mono.hash());
  return h;
}

// -------------------------------------------------------------------- Vector

Vector Vector::unit(RingPtr ring, std::size_t rank, std::size_t index) {
  if (index >= rank) throw InputError("unit vector index out of range");
  Vector v(ring, rank);
  v.terms_.push_back({1, static_cast<std::uint32_t>(index), Monomial{}});
  return v;
}

Vector Vector::from_coordinates(RingPtr ring, const std::vector<Polynomial>& coords) {
  Vector v(ring, coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    require_same_ring(ring, coords[i].ring(), "vector construction");
    for (const auto& t : coords[i].terms()) {
      v.terms_.push_back({t.coef, static_cast<std::uint32_t>(i), t.mono});
    }
  }
  return v;
}

Vector Vector::from_terms(RingPtr ring, std::size_t rank, std::vector<VTerm> terms) {
  Vector v(ring, rank);
  for (auto& t : terms) {
    if (t.pos >= rank) throw InputError("vector term position out of range");
    t.coef %= ring->characteristic();
  }
  normalize(terms, ring->field(), vterm_cmp(*ring));
  v.terms_ = std::move(terms);
  return v;
}

Vector Vector::from_sorted_terms(RingPtr ring, std::size_t rank, std::vector<VTerm> terms) {
  Vector v(ring, rank);
  v.terms_ = std::move(terms);
  return v;
}

int Vector::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree));
  return d;
}

std::vector<Polynomial> Vector::coordinates() const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : terms_) parts[t.pos].push_back({t.coef, t.mono});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& part : parts) {
    Polynomial f(ring_);
    f = Polynomial::from_terms(ring_, std::move(part));
    out.push_back(std::move(f));
  }
  return out;
}

Polynomial Vector::coordinate(std::size_t index) const {
  std::vector<Term> part;
  for (const auto& t : terms_) {
    if (t.pos == index) part.push_back({t.coef, t.mono});
  }
  return Polynomial::from_terms(ring_, std::move(part));
}

namespace {

void require_rank(const Vector& a, const Vector& b) {
  if (a.rank() != b.rank()) throw InputError("vector rank mismatch");
  require_same_ring(a.ring(), b.ring(), "vector arithmetic");
}

}  // namespace

Vector Vector::operator+(const Vector& o) const {
  require_rank(*this, o);
  Vector r(ring_, rank_);
  r.terms_ = merge(terms_, o.terms_, 1, ring_->field(), vterm_cmp(*ring_));
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  require_rank(*this, o);
  Vector r(ring_, rank_);
  r.terms_ = merge(terms_, o.terms_, ring_->field().neg(1), ring_->field(), vterm_cmp(*ring_));
  return r;
}

Vector Vector::operator-() const { return scaled(ring_->field().neg(1)); }

Vector Vector::operator*(const Polynomial& f) const {
  if (f.is_zero() || is_zero()) return Vector(ring_, rank_);
  require_same_ring(ring_, f.ring(), "vector scaling");
  std::vector<VTerm> prod;
  prod.reserve(terms_.size() * f.size());
  const auto& field = ring_->field();
  for (const auto& a : terms_) {
    for (const auto& b : f.terms()) {
      prod.push_back({field.mul(a.coef, b.coef), a.pos, mul(a.mono, b.mono)});
    }
  }
  normalize(prod, field, vterm_cmp(*ring_));
  Vector r(ring_, rank_);
  r.terms_ = std::move(prod);
  return r;
}

Vector Vector::scaled(Coeff c) const {
  Vector r(ring_, rank_);
  c %= ring_->characteristic();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field().mul(t.coef, c);
  return r;
}

Vector Vector::times_term(Coeff c, const Monomial& m) const {
  Vector r(ring_, rank_);
  c %= ring_->characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(t.coef, c), t.pos, mul(t.mono, m)});
  return r;
}

bool Vector::operator==(const Vector& o) const {
  if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (a.coef != b.coef || a.pos != b.pos || a.mono != b.mono) return false;
  }
  return true;
}

Vector Vector::add_multiple(const Vector& o, Coeff c, const Monomial& m) const {
  std::vector<VTerm> shifted;
  shifted.reserve(o.terms_.size());
  for (const auto& t : o.terms_) shifted.push_back({t.coef, t.pos, mul(t.mono, m)});
  Vector r(ring_, rank_);
  r.terms_ = merge(terms_, shifted, c, ring_->field(), vterm_cmp(*ring_));
  return r;
}

Vector Vector::frobenius(std::uint64_t q) const {
  if (!log_p(ring_->characteristic(), q)) {
    throw InputError("Frobenius exponent " + std::to_string(q) + " is not a power of p");
  }
  if (!is_zero()) ring_->check_degree(static_cast<std::uint64_t>(degree()) * q, "Frobenius power");
  Vector r(ring_, rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coef, t.pos, phantom::pow(t.mono, q)});
  return r;
}

Vector Vector::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().coef));
}

Vector Vector::embed(std::size_t new_rank, std::size_t offset) const {
  if (offset + rank_ > new_rank) throw InputError("embedding does not fit");
  Vector r(ring_, new_rank);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.pos += static_cast<std::uint32_t>(offset);
  return r;
}

Vector Vector::slice(std::size_t begin, std::size_t end) const {
  Vector r(ring_, end - begin);
  for (const auto& t : terms_) {
    if (t.pos >= begin && t.pos < end) {
      r.terms_.push_back({t.coef, static_cast<std::uint32_t>(t.pos - begin), t.mono});
    }
  }
  return r;
}

std::string Vector::to_string() const {
  std::string s = "(";
  auto coords = coordinates();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += coords[i].to_string();
  }
  return s + ")";
}

std::uint64_t Vector::hash() const {
  std::uint64_t h = mix(0x7a3c9e1d, rank_);
  for (const auto& t : terms_) h = mix(mix(mix(h, t.coef), t.pos), t.mono.hash());
  return h;
}

}  // namespace phantom
