#include "phantom/ring/quotient_ring.hpp"

#include "phantom/ring/errors.hpp"
#include "phantom/ring/parser.hpp"

namespace phantom {

QuotientRing::QuotientRing(RingPtr ambient, std::vector<Polynomial> ideal, bool regular)
    : ambient_(std::move(ambient)), regular_(regular) {
  for (auto& f : ideal) {
    require_same_ring(ambient_, f.ring(), "quotient ring");
    if (f.is_zero()) continue;
    if (f.constant_coefficient() != 0) {
      throw InputError("defining ideal must lie in the maximal ideal: " + f.to_string());
    }
    ideal_.push_back(std::move(f));
  }
  basis_ = buchberger(ideal_);
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  if (basis_.empty()) return f;
  require_same_ring(ambient_, f.ring(), "quotient reduction");
  return normal_form(f, basis_);
}

bool QuotientRing::in_maximal_ideal(const Polynomial& f) const { return reduce(f).constant_coefficient() == 0; }

std::vector<Vector> QuotientRing::ideal_columns(std::size_t rank) const {
  std::vector<Vector> cols;
  cols.reserve(rank * ideal_.size());
  for (std::size_t i = 0; i < rank; ++i) {
    Vector e = Vector::unit(ambient_, rank, i);
    for (const auto& f : ideal_) cols.push_back(e * f);
  }
  return cols;
}

Polynomial QuotientRing::parse(const std::string& text) const { return parse_polynomial(text, ambient_); }

std::string QuotientRing::signature() const {
  std::string s = ambient_->signature() + ";ideal=";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ',';
    s += basis_[i].to_string();
  }
  return s;
}

QRingPtr make_quotient(RingPtr ambient, std::vector<Polynomial> ideal, bool regular) {
  return std::make_shared<const QuotientRing>(std::move(ambient), std::move(ideal), regular);
}

QRingPtr make_quotient(RingPtr ambient, const std::vector<std::string>& ideal, bool regular) {
  std::vector<Polynomial> polys;
  for (const auto& s : ideal) polys.push_back(parse_polynomial(s, ambient));
  return make_quotient(std::move(ambient), std::move(polys), regular);
}

}  // namespace phantom
