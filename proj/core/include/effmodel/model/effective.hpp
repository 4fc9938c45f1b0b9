#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "effmodel/hopf/presentation.hpp"
#include "effmodel/model/coaction.hpp"
#include "effmodel/model/conductor.hpp"
#include "effmodel/model/cover.hpp"
#include "effmodel/ring/lattice.hpp"

namespace effmodel::model {

/// K-side torsor, the integral model obtained by Z_i = pi^(s_i) T_i, and the
/// action of the constant group Z/p^2 extended to that model.
struct CoverBuild {
  std::uint32_t p;
  CoverPresentation kside;
  std::vector<std::int64_t> shifts;
  CoverPresentation model;
  Coaction action;

  /// "Z1 = pi^3*T1" per fiber variable.
  std::vector<std::string> change_of_variables() const;
};

/// Generic construction for conductors (m1, m2) and shifts s. The model is
/// derived by substitution; the translation action T -> T + u (Witt
/// addition) is transported to it. Verifies that the model is integral,
/// that it gives back the K-side equations, that the action images are
/// integral and reduce to Witt translation, and the coaction axioms.
/// Throws VerificationFailure on any of these.
CoverBuild build_torsor_cover(std::uint32_t p, std::int64_t m1, std::int64_t m2,
                              const std::vector<std::int64_t>& shifts);

/// The model of regime A (Z1 = T1, Z2 = pi T2) or regime B
/// (Z1 = pi^(p n1) T1, Z2 = pi^(m1_tilde) T2), additionally checked against
/// the closed-form model equations of the regime.
CoverBuild build_cover(const ConductorSpec& spec);

/// Closed-form model equations of the regime, as right-hand sides of Z_i^p.
std::vector<MPoly> expected_model_rhs(const ConductorSpec& spec, const RingPtr& ring);

/// A sub-Hopf algebra of `ambient` generated as an R-algebra by some
/// elements, presented on scaled generators v_i = pi^(e_i) x_i.
struct SubHopf {
  HopfPresentation group;
  /// v_i -> pi^(e_i) x_i, elements of ambient.ring().
  std::vector<MPoly> domination;
  std::vector<std::int32_t> exponents;
  /// The subalgebra as an R-lattice on the monomial basis of ambient.
  ring::Lattice lattice;
};

/// Saturate {1} and `elements` under multiplication inside the free
/// R-module `ambient`, pick for each generator x_i the least e_i with
/// pi^(e_i) x_i in the lattice, check the lattice is spanned by the
/// monomials in these, and read off relations, comultiplication and counit.
/// Generator names are `stem` followed by the ambient generator's index.
/// VerificationFailure when the saturation does not close within p^n
/// rounds, when the lattice is not of that monomial shape, or when the
/// comultiplication leaves it ("coefficient subalgebra is not a
/// sub-Hopf-algebra").
SubHopf generated_sub_hopf(const HopfPresentation& ambient, const std::vector<MPoly>& elements,
                           const std::string& stem = "v");

struct EffectiveModel {
  SubHopf sub;
  /// The action of the effective model on the cover.
  Coaction coaction;
  const HopfPresentation& group() const noexcept { return sub.group; }
};

/// Effective model of the action: the subalgebra of the group's Hopf
/// algebra generated by the coaction coefficients.
EffectiveModel effective_model(const Coaction& c);

/// Substituting v_i -> domination_i into the coaction cg must give c.
CheckResult check_domination(const Coaction& c, const Coaction& cg,
                             const std::vector<MPoly>& domination);

struct SubgroupModel {
  HopfPresentation group;
  std::vector<MPoly> domination;  // in the quotient Hopf algebra of the subgroup
  bool connected;                 // every relation constant vanishes mod pi
};

/// Image of the effective model's Hopf algebra in the Hopf algebra of the
/// closed subgroup H of G cut out by the `killed` generators (default:
/// u1 = 0, the subgroup pZ/p^2), and its presentation.
SubgroupModel subgroup_effective_model(const Coaction& c, const SubHopf& effective,
                                       const std::vector<std::size_t>& killed = {0});

}  // namespace effmodel::model
