#pragma once

#include <cstdint>

namespace phantom {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

// Arithmetic in F_p for p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t n) const;
  Coeff inv(Coeff a) const;
  Coeff from_signed(std::int64_t v) const;

 private:
  std::uint32_t p_;
};

}  // namespace phantom
