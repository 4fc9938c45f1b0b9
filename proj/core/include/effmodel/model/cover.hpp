#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "effmodel/ring/mpoly.hpp"
#include "effmodel/ring/rewrite.hpp"

namespace effmodel::model {

using ring::BaseElement;
using ring::MPoly;
using ring::RingPtr;

/// Cover of the affine line Spec R[w] given by equations X_i^p = rhs_i in
/// the ring (X_1, ..., X_n, w). The rule for X_i may involve X_1..X_i and w,
/// so the algebra is free over R[w] on the X-monomials with exponents < p.
class CoverPresentation {
 public:
  /// `rhs` are elements of a ring containing the fiber names and "w"; they
  /// are re-embedded. With `integral_model` all coefficients must be
  /// integral (DomainError otherwise).
  CoverPresentation(std::uint32_t p, std::vector<std::string> fiber, std::vector<MPoly> rhs,
                    bool integral_model);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<std::string>& fiber() const noexcept { return fiber_; }
  std::size_t size() const noexcept { return fiber_.size(); }
  /// Fiber variables followed by w.
  const RingPtr& ring() const noexcept { return ring_; }
  const ring::RewriteSystem& relations() const noexcept { return rel_; }
  const std::vector<MPoly>& rhs() const noexcept { return rhs_; }
  bool integral_model() const noexcept { return integral_; }
  std::size_t base_index() const noexcept { return fiber_.size(); }

  MPoly variable(std::size_t i) const { return MPoly::variable(ring_, i); }
  MPoly base() const { return MPoly::variable(ring_, fiber_.size()); }

  /// "Z1^3 = Z1 + w" per equation.
  std::vector<std::string> equations() const;
  /// Reduction mod pi of an integral model.
  CoverPresentation special_fiber() const;
  /// Same equations with the fiber variables renamed.
  CoverPresentation renamed(const std::vector<std::string>& fiber) const;

  bool operator==(const CoverPresentation& o) const {
    return p_ == o.p_ && fiber_ == o.fiber_ && rhs_ == o.rhs_;
  }

 private:
  std::uint32_t p_;
  std::vector<std::string> fiber_;
  RingPtr ring_;
  std::vector<MPoly> rhs_;
  bool integral_;
  ring::RewriteSystem rel_;
};

/// The K-side torsor in variables T1, T2:
///   T1^p = T1 + pi^m1 w,  T2^p = T2 + pi^m2 w - c(T1^p, -T1).
CoverPresentation torsor_equations(std::uint32_t p, std::int64_t m1, std::int64_t m2);

/// Model obtained by Z_i = pi^(s_i) T_i: rhs_i(Z) = pi^(p s_i) rhs_i^K(T = pi^-s Z).
/// The result is flagged integral when every coefficient is.
CoverPresentation substitute_model(const CoverPresentation& kside, const std::vector<std::int64_t>& shifts);

/// Inverse check: substituting Z_i = pi^(s_i) T_i into the model and dividing
/// by pi^(p s_i) gives back the K-side equations exactly.
bool recovers_kside(const CoverPresentation& model, const CoverPresentation& kside,
                    const std::vector<std::int64_t>& shifts);

}  // namespace effmodel::model
