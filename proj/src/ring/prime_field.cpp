#include "phantom/ring/prime_field.hpp"

#include "phantom/ring/errors.hpp"

namespace phantom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t n) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Coeff PrimeField::from_signed(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

}  // namespace phantom
