#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effmodel/ring/base_element.hpp"

namespace effmodel::ring {

inline constexpr std::size_t kMaxVars = 12;

/// Name reserved for the uniformizer in every ring and in the text syntax.
inline constexpr std::string_view kPiName = "pi";

/// Declared variable list plus characteristic. Shared immutably between all
/// polynomials of one ambient ring.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(std::uint32_t p, std::vector<std::string> names);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index(std::string_view name) const noexcept;
  /// Index of `name`, throwing UsageError when absent.
  std::size_t require(std::string_view name) const;

  bool operator==(const Ring& o) const noexcept { return p_ == o.p_ && names_ == o.names_; }

 private:
  Ring(std::uint32_t p, std::vector<std::string> names) : p_(p), names_(std::move(names)) {}

  std::uint32_t p_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Exponent vector over the declared variables plus the pi-exponent.
/// Ordering is lexicographic in declared variable order, pi last.
struct Monomial {
  std::array<std::int32_t, kMaxVars> exps{};
  std::int32_t pi = 0;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  bool same_vars(const Monomial& o) const noexcept { return exps == o.exps; }
  bool is_constant() const noexcept;
  Monomial operator*(const Monomial& o) const noexcept;
};

/// Sparse polynomial in a ring's variables with BaseElement coefficients.
///
/// Internally pi is stored as one more exponent, so a term is
/// (exponent vector, pi-exponent, F_p coefficient). Terms are kept sorted by
/// Monomial ordering without zeros, which makes the representation canonical.
class MPoly {
 public:
  struct Term {
    Monomial mono;
    std::uint32_t coeff;
    bool operator==(const Term&) const = default;
  };

  explicit MPoly(RingPtr ring);

  static MPoly constant(RingPtr ring, const BaseElement& c);
  static MPoly constant(RingPtr ring, std::int64_t c);
  static MPoly variable(RingPtr ring, std::string_view name);
  static MPoly variable(RingPtr ring, std::size_t index);
  /// coeff * prod x_i^{exps[i]}
  static MPoly monomial(RingPtr ring, std::span<const std::int32_t> exps,
                        const BaseElement& coeff);
  static MPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::uint32_t p() const noexcept { return ring_->p(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// No variable occurs (pi may).
  bool is_constant() const noexcept;
  /// The value as a BaseElement; throws DomainError when a variable occurs.
  BaseElement as_base() const;

  /// Coefficient of the variable monomial `exps`, collecting all pi-powers.
  BaseElement coefficient(std::span<const std::int32_t> exps) const;
  /// Variable exponent vectors (truncated to ring size) with their
  /// BaseElement coefficients, in ascending order.
  std::vector<std::pair<std::vector<std::int32_t>, BaseElement>> grouped() const;

  /// Minimum pi-exponent over all terms; nullopt for zero.
  std::optional<std::int32_t> valuation() const noexcept;
  bool is_integral() const noexcept;
  /// Drop every term with positive pi-exponent. Throws DomainError when
  /// some coefficient is not integral.
  MPoly reduce_mod_pi() const;
  std::int32_t degree_in(std::size_t var) const noexcept;

  MPoly scaled(const BaseElement& c) const;
  /// Multiply by pi^e.
  MPoly shifted(std::int32_t e) const;
  MPoly pow(std::uint64_t n) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const BaseElement& c, const MPoly& a) { return a.scaled(c); }

  friend bool operator==(const MPoly& a, const MPoly& b) noexcept {
    return a.terms_ == b.terms_ && *a.ring_ == *b.ring_;
  }

  /// Re-express in `target`, which must declare every variable occurring
  /// here (matched by name).
  MPoly embed(RingPtr target) const;
  /// Rename variables by name; unlisted names are kept.
  MPoly renamed(RingPtr target, const std::map<std::string, std::string>& names) const;

  /// Text form: terms in descending variable order, pi ascending inside a
  /// variable monomial, e.g. "u1^2*u2 + 2*pi^-3*u1 + 1".
  std::string to_string() const;

 private:
  void check_same_ring(const MPoly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Sum of terms sharing a monomial, sorted, zero-free.
std::vector<MPoly::Term> canonicalize(std::uint32_t p, std::vector<MPoly::Term> terms);

}  // namespace effmodel::ring
