#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phantom/ring/monomial.hpp"
#include "phantom/ring/prime_field.hpp"

namespace phantom {

struct Limits {
  std::uint32_t max_degree = 64;
  std::size_t max_basis = 20000;
};

// F_p[x_1..x_n] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::kGrevlex, Limits limits = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  MonomialOrder order() const { return order_; }
  const Limits& limits() const { return limits_; }

  std::optional<std::size_t> variable_index(std::string_view name) const;
  int compare(const Monomial& a, const Monomial& b) const { return phantom::compare(a, b, order_); }
  void check_degree(std::uint64_t degree, const char* what) const;

  // Identifies the ring for caching; limits are not part of it.
  std::string signature() const;
  std::string monomial_string(const Monomial& m) const;

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
  Limits limits_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::kGrevlex, Limits limits = {});

// q = p^e, with overflow checked against 2^40.
std::uint64_t frobenius_power(std::uint32_t p, unsigned e);
// Returns e with p^e = q, or nullopt if q is not a power of p.
std::optional<unsigned> log_p(std::uint32_t p, std::uint64_t q);

}  // namespace phantom
