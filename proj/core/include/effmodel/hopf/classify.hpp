#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "effmodel/hopf/presentation.hpp"

namespace effmodel::hopf {

/// Names for the special fibers met here. Only the group schemes that occur
/// in the two degeneration regimes are recognized; the rest is Unknown.
struct FiberClass {
  enum class Tag { EtaleZp, AlphaP, KernelForm, Product, Unknown };

  Tag tag = Tag::Unknown;
  std::uint32_t lambda = 0;  // KernelForm only
  std::uint32_t nu = 0;      // KernelForm only
  std::vector<FiberClass> parts;  // Product only

  /// "AlphaP", "EtaleZp", "KernelForm(1,1)", "Product(EtaleZp,AlphaP)", "Unknown".
  std::string to_string() const;
  bool operator==(const FiberClass&) const = default;
};

/// Classify a presentation over the residue field (all coefficients free of
/// pi; DomainError otherwise).
///
/// One generator with primitive comultiplication: AlphaP when x^p = 0,
/// EtaleZp when x^p = c x with c != 0. Two generators carrying the twisted
/// Witt law with parameter lambda-bar: for lambda-bar = 0 the product of the
/// two rank-p pieces; for lambda-bar != 0 and p > 2 KernelForm(lambda-bar,
/// nu-bar) when the constants fit; otherwise Unknown.
FiberClass classify_fiber(const HopfPresentation& hk);

struct KernelParams {
  BaseElement lambda;
  BaseElement nu;
  bool operator==(const KernelParams&) const = default;
};

/// Recognize the presentation of the kernel of phi_{lambda,nu}:
/// Delta(u1) primitive, the cross term of Delta(u2) on uL1^k uR1^(p-k) equal
/// to lambda <p,k> for one lambda, and constants (nu, nu^p lambda^(p-1)).
/// nullopt when the data is not of that form. DomainError for p = 2.
std::optional<KernelParams> identify_kernel_form(const HopfPresentation& h);

}  // namespace effmodel::hopf
