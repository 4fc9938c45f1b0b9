#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "effmodel/ring/base_element.hpp"
#include "effmodel/ring/mpoly.hpp"

namespace effmodel::witt {

using ring::BaseElement;
using ring::MPoly;

/// A point (x1, x2) of the twisted Witt plane, coordinates in one ring.
struct WittPair {
  MPoly first;
  MPoly second;

  bool operator==(const WittPair&) const = default;
  std::string to_string() const;
};

/// <p,k> = C(p,k)/p mod p for 1 <= k <= p-1. Throws DomainError otherwise.
std::uint32_t witt_binom(std::uint32_t p, std::uint32_t k);

/// c(x,y) = sum_{k=1}^{p-1} <p,k> x^k y^(p-k).
MPoly cocycle(const MPoly& x, const MPoly& y);

/// Group law of W_2^lambda:
/// (a1 + b1, a2 + b2 + lambda * c(a1, b1)). lambda = 1 is the classical law.
WittPair w2_add(const BaseElement& lambda, const WittPair& a, const WittPair& b);
/// Solves a + v = 0: v = (-a1, -a2 - lambda * c(a1, -a1)).
WittPair w2_neg(const BaseElement& lambda, const WittPair& a);
WittPair w2_sub(const BaseElement& lambda, const WittPair& a, const WittPair& b);

/// (a1^p, a2^p): W_2^lambda -> W_2^(lambda^p).
WittPair frobenius(const WittPair& a);
/// I^nu_{lambda,mu}: (nu a1, mu nu^p a2), W_2^lambda -> W_2^(lambda mu).
WittPair scalar_map(const BaseElement& mu, const BaseElement& nu, const WittPair& a);
/// phi_{lambda,nu} = F_lambda - I^nu_{lambda,lambda^(p-1)}, the difference
/// taken in W_2^(lambda^p).
WittPair phi(const BaseElement& lambda, const BaseElement& nu, const WittPair& a);
/// The displayed coordinate formula
/// (a1^p - nu a1, a2^p - nu^p lambda^(p-1) a2 + lambda^p c(a1^p, -nu a1)).
/// Agrees with phi() for odd p only.
WittPair phi_closed_form(const BaseElement& lambda, const BaseElement& nu, const WittPair& a);

/// A polynomial map between twisted Witt planes.
struct WittMap {
  std::string name;
  BaseElement source;
  BaseElement target;
  std::function<WittPair(const WittPair&)> apply;
};

WittMap frobenius_map(const BaseElement& lambda);
WittMap scalar_map_of(const BaseElement& lambda, const BaseElement& mu, const BaseElement& nu);
WittMap phi_map(const BaseElement& lambda, const BaseElement& nu);
/// g after f. The target twist of f is not compared with the source of g.
WittMap compose(const WittMap& g, const WittMap& f);

struct HomCheck {
  bool ok;
  /// Printed nonzero difference of one coordinate, empty when ok.
  std::string residual;
  explicit operator bool() const noexcept { return ok; }
};

/// map(a +_source b) == map(a) +_target map(b) in fresh variables a1,a2,b1,b2.
HomCheck check_hom(const WittMap& map, const BaseElement& source, const BaseElement& target);
inline HomCheck check_hom(const WittMap& map) { return check_hom(map, map.source, map.target); }

}  // namespace effmodel::witt
