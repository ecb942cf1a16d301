#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace phantom {

inline constexpr std::size_t kMaxVariables = 12;

enum class MonomialOrder { kGrevlex, kLex, kDeglex };

MonomialOrder parse_order(const std::string& name);
std::string order_name(MonomialOrder order);

struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::uint32_t degree = 0;

  bool operator==(const Monomial& o) const { return degree == o.degree && exp == o.exp; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool is_one() const { return degree == 0; }
  bool divides(const Monomial& o) const;
  std::uint64_t hash() const;
};

// Throws ResourceError if an exponent would overflow.
Monomial mul(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
// Requires b | a.
Monomial div(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, std::uint64_t n);
bool coprime(const Monomial& a, const Monomial& b);
Monomial variable(std::size_t index);

// Negative, zero or positive as a is smaller, equal or larger than b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

}  // namespace phantom
