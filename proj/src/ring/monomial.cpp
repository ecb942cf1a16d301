#include "phantom/ring/monomial.hpp"

#include <algorithm>
#include <limits>

#include "phantom/ring/errors.hpp"

namespace phantom {

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::kGrevlex;
  if (name == "lex") return MonomialOrder::kLex;
  if (name == "deglex" || name == "grlex") return MonomialOrder::kDeglex;
  throw InputError("unknown monomial order '" + name + "'");
}

std::string order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::kGrevlex: return "grevlex";
    case MonomialOrder::kLex: return "lex";
    case MonomialOrder::kDeglex: return "deglex";
  }
  return "grevlex";
}

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp[i] > o.exp[i]) return false;
  }
  return true;
}

std::uint64_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::uint16_t checked(std::uint64_t v) {
  if (v > std::numeric_limits<std::uint16_t>::max()) {
    throw ResourceError("monomial exponent overflow");
  }
  return static_cast<std::uint16_t>(v);
}

}  // namespace

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp[i] = checked(static_cast<std::uint64_t>(a.exp[i]) + b.exp[i]);
  }
  r.degree = a.degree + b.degree;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.degree += r.exp[i];
  }
  return r;
}

Monomial div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp[i] = a.exp[i] - b.exp[i];
  r.degree = a.degree - b.degree;
  return r;
}

Monomial pow(const Monomial& a, std::uint64_t n) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp[i] = checked(a.exp[i] * n);
  r.degree = static_cast<std::uint32_t>(a.degree * n);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  }
  return true;
}

Monomial variable(std::size_t index) {
  Monomial m;
  m.exp[index] = 1;
  m.degree = 1;
  return m;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order != MonomialOrder::kLex && a.degree != b.degree) {
    return a.degree < b.degree ? -1 : 1;
  }
  if (order == MonomialOrder::kGrevlex) {
    for (std::size_t i = kMaxVariables; i-- > 0;) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace phantom
