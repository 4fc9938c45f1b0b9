#pragma once

#include <cstdint>

namespace effmodel::ring {

/// Arithmetic in F_p for a runtime prime p. Elements are canonical
/// residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  /// Largest supported characteristic. Bounded so that C(p, k) fits in
  /// 128-bit intermediates and products of residues fit in 64 bits.
  static constexpr std::uint32_t kMaxPrime = 65521;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  value_type reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const noexcept;
  /// Throws DomainError on zero.
  value_type inv(value_type a) const;

  static bool is_prime(std::uint64_t n) noexcept;

 private:
  std::uint32_t p_;
};

}  // namespace effmodel::ring
