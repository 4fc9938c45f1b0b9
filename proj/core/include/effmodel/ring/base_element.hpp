#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace effmodel::ring {

/// Laurent polynomial in the uniformizer pi with coefficients in F_p.
///
/// Stands in for elements of R = F_p[[pi]] (no negative exponents) and for
/// the pi-power-denominator part of its fraction field. Terms are kept sorted
/// by ascending exponent with no zero coefficients, so equality is structural.
///
/// A default-constructed value is an "unbound" zero (p() == 0); binary
/// operations adopt the characteristic of the other operand.
class BaseElement {
 public:
  struct Term {
    std::int32_t exp;
    std::uint32_t coeff;
    bool operator==(const Term&) const = default;
  };

  BaseElement() = default;

  static BaseElement zero(std::uint32_t p);
  static BaseElement constant(std::uint32_t p, std::int64_t c);
  /// c * pi^e
  static BaseElement pi_power(std::uint32_t p, std::int32_t e, std::int64_t c = 1);
  static BaseElement from_terms(std::uint32_t p, std::vector<Term> terms);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  /// Single term c * pi^e; these are exactly the units of F_p[pi, 1/pi].
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Smallest exponent with nonzero coefficient; nullopt encodes +infinity.
  std::optional<std::int32_t> valuation() const noexcept;
  /// No negative pi-exponent (zero counts as integral).
  bool is_integral() const noexcept;
  /// Integral of valuation 0: a unit of the local ring at pi.
  bool is_unit() const noexcept;
  std::uint32_t coefficient(std::int32_t e) const noexcept;
  /// Residue mod pi. Throws DomainError when not integral.
  std::uint32_t residue() const;

  /// Multiply by pi^e.
  BaseElement shifted(std::int32_t e) const;
  BaseElement scaled(std::int64_t c) const;
  /// Terms with exponent < e (resp. >= e).
  BaseElement truncated_below(std::int32_t e) const;
  BaseElement part_from(std::int32_t e) const;
  /// Exact division by a monomial c * pi^e. Throws DomainError otherwise.
  BaseElement divided_by_monomial(const BaseElement& m) const;
  BaseElement pow(std::uint64_t n) const;

  BaseElement operator-() const;
  BaseElement& operator+=(const BaseElement& o);
  BaseElement& operator-=(const BaseElement& o);
  friend BaseElement operator+(BaseElement a, const BaseElement& b) { return a += b; }
  friend BaseElement operator-(BaseElement a, const BaseElement& b) { return a -= b; }
  friend BaseElement operator*(const BaseElement& a, const BaseElement& b);

  /// Characteristic-blind comparison of canonical forms (unbound zero equals
  /// any zero).
  friend bool operator==(const BaseElement& a, const BaseElement& b) noexcept {
    return a.terms_ == b.terms_ && (a.p_ == b.p_ || a.terms_.empty() || a.p_ == 0 || b.p_ == 0);
  }

  /// Textual form in the expression syntax, e.g. "1 + 2*pi^-3".
  std::string to_string() const;

 private:
  BaseElement(std::uint32_t p, std::vector<Term> terms) : p_(p), terms_(std::move(terms)) {}
  static std::uint32_t bind(std::uint32_t a, std::uint32_t b);

  std::uint32_t p_ = 0;
  std::vector<Term> terms_;
};

}  // namespace effmodel::ring
