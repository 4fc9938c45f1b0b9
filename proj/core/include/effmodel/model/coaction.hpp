#pragma once

#include <string>
#include <vector>

#include "effmodel/hopf/presentation.hpp"
#include "effmodel/model/cover.hpp"

namespace effmodel::model {

using hopf::CheckResult;
using hopf::HopfPresentation;

/// Coaction A -> A (x) H of a Hopf algebra H on a cover A, given by the images
/// of the fiber variables (w is fixed). Images live in ring(): the cover
/// variables, w, then the generators of H.
class Coaction {
 public:
  Coaction(HopfPresentation group, CoverPresentation cover, std::vector<MPoly> images);

  const HopfPresentation& group() const noexcept { return group_; }
  const CoverPresentation& cover() const noexcept { return cover_; }
  const std::vector<MPoly>& images() const noexcept { return images_; }
  const RingPtr& ring() const noexcept { return ring_; }
  /// Cover equations together with the relations of H.
  const ring::RewriteSystem& relations() const noexcept { return rel_; }
  /// Same with H replaced by its two tensor factors (names xL_i, xR_i).
  const RingPtr& doubled_ring() const noexcept { return ring2_; }
  const ring::RewriteSystem& doubled_relations() const noexcept { return rel2_; }

  /// Image of an element of the cover ring, normalized.
  MPoly apply(const MPoly& a) const;
  /// Images as "Z1 -> Z1 + pi^3*u1" strings.
  std::vector<std::string> describe() const;
  bool is_integral() const;

  bool operator==(const Coaction& o) const {
    return group_ == o.group_ && cover_ == o.cover_ && images_ == o.images_;
  }

 private:
  HopfPresentation group_;
  CoverPresentation cover_;
  std::vector<MPoly> images_;
  RingPtr ring_, ring2_;
  ring::RewriteSystem rel_, rel2_;
};

/// Setting the group variables to their counit values gives back each
/// fiber variable.
CheckResult check_coaction_counit(const Coaction& c);
/// (mu (x) id) mu = (id (x) Delta) mu on each fiber variable.
CheckResult check_coaction_coassoc(const Coaction& c);
/// The images satisfy the cover equations modulo the relations.
CheckResult check_coaction_relations(const Coaction& c);
/// First failing check among the three, or ok.
CheckResult check_coaction(const Coaction& c);

/// Coefficients in H of the images expanded on the cover monomials
/// w^c X^a, without repetition and without the scalar ones, in order of first
/// appearance.
std::vector<MPoly> coaction_coefficients(const Coaction& c);

/// Reduction mod pi of the group and the cover together.
Coaction special_fiber(const Coaction& c);

/// Replace the group by `group` and map its generators through `images`
/// (elements of group.ring() for each old generator). Used to push a
/// coaction through a morphism of Hopf algebras.
Coaction rewrite_group(const Coaction& c, const HopfPresentation& group,
                       const std::vector<MPoly>& images);

}  // namespace effmodel::model
