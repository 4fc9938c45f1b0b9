#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "effmodel/ring/base_element.hpp"
#include "effmodel/ring/mpoly.hpp"
#include "effmodel/ring/rewrite.hpp"

namespace effmodel::hopf {

using ring::BaseElement;
using ring::MPoly;
using ring::RingPtr;

/// Name of generator `name` in a tensor factor: "u1" on side "L" is "uL1".
/// A name without a numeric suffix gets the side appended.
std::string tensor_name(const std::string& name, const std::string& side);

/// Finitely presented commutative Hopf algebra
///   R[x_1..x_n] / (x_i^p - c_i x_i)
/// with comultiplication given on generators (in the doubled variables
/// xL_i, xR_i) and counit values.
///
/// The algebra is free over R on the monomials with exponents < p. Axioms
/// are not assumed; see the check_* functions.
class HopfPresentation {
 public:
  HopfPresentation(std::uint32_t p, std::vector<std::string> generators,
                   std::vector<BaseElement> relation_constants, std::vector<MPoly> comul,
                   std::vector<BaseElement> counit);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<BaseElement>& relation_constants() const noexcept { return constants_; }
  /// Images of the generators, elements of doubled().
  const std::vector<MPoly>& comul() const noexcept { return comul_; }
  const std::vector<BaseElement>& counit() const noexcept { return counit_; }

  const RingPtr& ring() const noexcept { return ring_; }
  /// Variables xL_i then xR_i.
  const RingPtr& doubled() const noexcept { return doubled_; }
  /// Variables xA_i, xB_i, xC_i.
  const RingPtr& tripled() const noexcept { return tripled_; }
  const ring::RewriteSystem& relations() const noexcept { return rel_; }
  const ring::RewriteSystem& doubled_relations() const noexcept { return rel2_; }
  const ring::RewriteSystem& tripled_relations() const noexcept { return rel3_; }

  MPoly generator(std::size_t i) const { return MPoly::variable(ring_, i); }
  /// Generator i in tensor factor `side` ("L", "R", "A", "B", "C") of `target`.
  MPoly tensor_generator(const RingPtr& target, const std::string& side, std::size_t i) const;

  /// Exponent vectors with entries < p, ascending; the free R-basis.
  std::vector<std::vector<std::int32_t>> monomial_basis() const;
  std::size_t rank() const;
  /// Constants, counit values and comultiplication coefficients integral.
  bool is_integral() const;

  /// Delta of an element of ring(), normalized in doubled().
  MPoly comul_of(const MPoly& x) const;
  /// Counit of an element of ring().
  BaseElement counit_of(const MPoly& x) const;
  /// Re-express comul image `d` (in doubled()) with the two factors sent to
  /// sides `left`, `right` of `target`.
  MPoly place(const MPoly& d, const RingPtr& target, const std::string& left,
              const std::string& right) const;

  bool operator==(const HopfPresentation& o) const;

 private:
  std::uint32_t p_;
  std::vector<std::string> generators_;
  std::vector<BaseElement> constants_;
  std::vector<MPoly> comul_;
  std::vector<BaseElement> counit_;
  RingPtr ring_, doubled_, tripled_;
  ring::RewriteSystem rel_, rel2_, rel3_;
};

/// Result of an axiom check; on failure names the generator and prints the
/// nonzero residual.
struct CheckResult {
  bool ok = true;
  std::string generator;
  std::string residual;
  explicit operator bool() const noexcept { return ok; }
};

/// Group algebra of Z/p^2 over R: u_i^p = u_i, comultiplication the
/// classical Witt law, counit 0.
HopfPresentation make_zp2(std::uint32_t p);

/// Kernel of phi_{lambda,nu}: u1^p = nu u1, u2^p = nu^p lambda^(p-1) u2,
/// comultiplication the twisted law of W_2^lambda. Axioms are verified
/// before returning (VerificationFailure otherwise). Refused for p = 2.
HopfPresentation make_kernel(const BaseElement& lambda, const BaseElement& nu);

CheckResult check_coassoc(const HopfPresentation& h);
CheckResult check_counit(const HopfPresentation& h);
/// Delta(x_i^p - c_i x_i) normalizes to 0 in the doubled quotient.
CheckResult check_relations(const HopfPresentation& h);

/// Antipode of a comultiplication of the shape
///   Delta(x_i) = xL_i + xR_i + f_i(xL_j, xR_j : j < i),
/// solved recursively as S(x_i) = -x_i - f_i(S(x_j), x_j). Throws DomainError
/// for other shapes.
std::vector<MPoly> antipode(const HopfPresentation& h);
/// m(S (x) id) Delta = m(id (x) S) Delta = unit * counit on each generator.
CheckResult check_antipode(const HopfPresentation& h, const std::vector<MPoly>& s);

/// All four axiom checks plus the rank.
struct AxiomReport {
  std::size_t rank;
  CheckResult coassoc, counit, relations, antipode;
  bool all_ok() const { return coassoc.ok && counit.ok && relations.ok && antipode.ok; }
};
AxiomReport check_axioms(const HopfPresentation& h);

/// Reduction mod pi. Throws DomainError unless is_integral().
HopfPresentation special_fiber(const HopfPresentation& h);

/// Quotient by the Hopf ideal generated by the listed generators (the
/// closed subgroup they cut out). Throws DomainError when the generators do
/// not span a Hopf ideal in the simple sense checked here: each killed
/// generator's comultiplication and relation vanish modulo the others.
HopfPresentation quotient(const HopfPresentation& h, const std::vector<std::size_t>& killed);

}  // namespace effmodel::hopf
