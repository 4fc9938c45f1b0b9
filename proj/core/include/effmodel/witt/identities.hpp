#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "effmodel/ring/base_element.hpp"

namespace effmodel::witt {

/// Outcome of one exact polynomial identity.
struct IdentityCheck {
  std::string name;
  bool ok;
  std::string residual;  // printed nonzero difference, empty when ok
};

/// (a+b)+c = a+(b+c), a+b = b+a, a+0 = a, a+(-a) = 0 in W_2^lambda, each as an
/// identity in fresh variables.
std::vector<IdentityCheck> group_law_checks(const ring::BaseElement& lambda);

/// c(x,y) + c(x+y,z) = c(y,z) + c(x,y+z).
IdentityCheck cocycle_check(std::uint32_t p);

/// F(X) - X computed with the classical law against the coordinate display
/// (X1^p - X1, X2^p - X2 + sum <p,k> X1^(pk) (-X1)^(p-k)).
IdentityCheck classical_phi_display_check(std::uint32_t p);

/// phi_{lambda,nu} through subtraction in W_2^(lambda^p) against
/// phi_closed_form.
IdentityCheck phi_display_check(const ring::BaseElement& lambda, const ring::BaseElement& nu);

}  // namespace effmodel::witt
