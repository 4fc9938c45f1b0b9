#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "effmodel/ring/mpoly.hpp"

namespace effmodel::ring {

/// Rules var^p -> rhs realizing quotient rings such as
/// R[u1,u2]/(u1^p - u1, u2^p - u2) and the cover equations.
///
/// Rules are declared in a triangular order: the right-hand side of rule i
/// may mention the variables of rules j <= i and any free variable, and the
/// exponent of its own variable in it must stay below p. Under that
/// condition reduction terminates and every polynomial has a unique normal
/// form with all rule-variable exponents < p.
class RewriteSystem {
 public:
  struct Rule {
    std::size_t var;
    MPoly rhs;
  };

  /// Empty system over `ring` (normal form is the identity).
  explicit RewriteSystem(RingPtr ring);
  /// Throws DomainError when the rules are not triangular.
  RewriteSystem(RingPtr ring, std::vector<Rule> rules);
  RewriteSystem(RingPtr ring, const std::vector<std::pair<std::string, MPoly>>& rules);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  /// Rule index governing `var`, if any.
  std::optional<std::size_t> rule_for(std::size_t var) const noexcept;

  MPoly normal_form(const MPoly& q) const;
  bool is_normal(const MPoly& q) const noexcept;
  /// Apply rule `rule` once to term `term` of q (which must be reducible by
  /// it). Used to explore alternative reduction orders.
  MPoly reduce_step(const MPoly& q, std::size_t term, std::size_t rule) const;

  /// Concatenate two systems over a common ring (rules of `other` follow).
  RewriteSystem combined(const RewriteSystem& other) const;

 private:
  void validate() const;

  RingPtr ring_;
  std::vector<Rule> rules_;
  std::vector<std::optional<std::size_t>> rule_of_var_;
};

/// Evaluate q at images[i] for variable i of q's ring, landing in `target`.
/// When `rs` is given, intermediate powers and the result are normalized.
MPoly substitute(const MPoly& q, std::span<const MPoly> images, const RingPtr& target,
                 const RewriteSystem* rs = nullptr);

}  // namespace effmodel::ring
