#include "effmodel/ring/prime_field.hpp"

#include <string>

#include "effmodel/error.hpp"

namespace effmodel::ring {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw UsageError("p must be prime (got " + std::to_string(p) + ")");
  }
  if (p > kMaxPrime) {
    throw UsageError("p too large (max " + std::to_string(kMaxPrime) + ")");
  }
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const noexcept {
  value_type result = 1 % p_;
  value_type base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

bool PrimeField::is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace effmodel::ring
