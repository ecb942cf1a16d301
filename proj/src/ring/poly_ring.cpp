#include "phantom/ring/poly_ring.hpp"

#include <cctype>
#include <set>

#include "phantom/ring/errors.hpp"

namespace phantom {

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order,
                   Limits limits)
    : field_(p), variables_(std::move(variables)), order_(order), limits_(limits) {
  if (variables_.size() > kMaxVariables) {
    throw UnsupportedInput("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char ch : v) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

void PolyRing::check_degree(std::uint64_t degree, const char* what) const {
  if (degree > limits_.max_degree) {
    throw ResourceError(std::string(what) + ": degree " + std::to_string(degree) +
                        " exceeds budget " + std::to_string(limits_.max_degree));
  }
}

std::string PolyRing::signature() const {
  std::string s = "p=" + std::to_string(characteristic()) + ";vars=";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ',';
    s += variables_[i];
  }
  s += ";order=" + order_name(order_);
  return s;
}

std::string PolyRing::monomial_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += variables_[i];
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order,
                  Limits limits) {
  return std::make_shared<const PolyRing>(p, std::move(variables), order, limits);
}

std::uint64_t frobenius_power(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > (1ull << 40)) throw ResourceError("Frobenius power p^e too large");
  }
  return q;
}

std::optional<unsigned> log_p(std::uint32_t p, std::uint64_t q) {
  unsigned e = 0;
  while (q > 1) {
    if (q % p != 0) return std::nullopt;
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return e;
}

}  // namespace phantom
