#include "effmodel/witt/witt2.hpp"

#include "effmodel/error.hpp"
#include "effmodel/ring/prime_field.hpp"

namespace effmodel::witt {

std::string WittPair::to_string() const {
  return "(" + first.to_string() + ", " + second.to_string() + ")";
}

std::uint32_t witt_binom(std::uint32_t p, std::uint32_t k) {
  ring::PrimeField f(p);
  if (k < 1 || k >= p) {
    throw DomainError("<p,k> needs 1 <= k <= p-1 (got p=" + std::to_string(p) +
                      ", k=" + std::to_string(k) + ")");
  }
  // C(p,k) = p (p-1)...(p-k+1) / k!. Work mod p^2 so the numerator keeps
  // exactly its single factor p.
  const std::uint64_t mod = static_cast<std::uint64_t>(p) * p;
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    num = num * (p - i) % mod;
    den = den * (i + 1) % mod;
  }
  auto num_over_p = static_cast<std::uint64_t>(num / p % p);
  auto den_mod_p = static_cast<std::uint64_t>(den % p);
  return f.mul(static_cast<std::uint32_t>(num_over_p), f.inv(static_cast<std::uint32_t>(den_mod_p)));
}

MPoly cocycle(const MPoly& x, const MPoly& y) {
  const auto p = x.p();
  MPoly out(x.ring());
  for (std::uint32_t k = 1; k < p; ++k) {
    out += (x.pow(k) * y.pow(p - k)).scaled(BaseElement::constant(p, witt_binom(p, k)));
  }
  return out;
}

WittPair w2_add(const BaseElement& lambda, const WittPair& a, const WittPair& b) {
  return {a.first + b.first, a.second + b.second + lambda * cocycle(a.first, b.first)};
}

WittPair w2_neg(const BaseElement& lambda, const WittPair& a) {
  auto neg1 = -a.first;
  return {neg1, -a.second - lambda * cocycle(a.first, neg1)};
}

WittPair w2_sub(const BaseElement& lambda, const WittPair& a, const WittPair& b) {
  return w2_add(lambda, a, w2_neg(lambda, b));
}

WittPair frobenius(const WittPair& a) {
  const auto p = a.first.p();
  return {a.first.pow(p), a.second.pow(p)};
}

WittPair scalar_map(const BaseElement& mu, const BaseElement& nu, const WittPair& a) {
  return {nu * a.first, (mu * nu.pow(a.first.p())) * a.second};
}

WittPair phi(const BaseElement& lambda, const BaseElement& nu, const WittPair& a) {
  const auto p = a.first.p();
  return w2_sub(lambda.pow(p), frobenius(a), scalar_map(lambda.pow(p - 1), nu, a));
}

WittPair phi_closed_form(const BaseElement& lambda, const BaseElement& nu, const WittPair& a) {
  const auto p = a.first.p();
  auto a1p = a.first.pow(p);
  return {a1p - nu * a.first,
          a.second.pow(p) - (nu.pow(p) * lambda.pow(p - 1)) * a.second +
              lambda.pow(p) * cocycle(a1p, -(nu * a.first))};
}

WittMap frobenius_map(const BaseElement& lambda) {
  return {"F", lambda, lambda.pow(lambda.p()), [](const WittPair& a) { return frobenius(a); }};
}

WittMap scalar_map_of(const BaseElement& lambda, const BaseElement& mu, const BaseElement& nu) {
  return {"I", lambda, lambda * mu, [mu, nu](const WittPair& a) { return scalar_map(mu, nu, a); }};
}

WittMap phi_map(const BaseElement& lambda, const BaseElement& nu) {
  return {"phi", lambda, lambda.pow(lambda.p()),
          [lambda, nu](const WittPair& a) { return phi(lambda, nu, a); }};
}

WittMap compose(const WittMap& g, const WittMap& f) {
  return {g.name + "*" + f.name, f.source, g.target,
          [g, f](const WittPair& a) { return g.apply(f.apply(a)); }};
}

HomCheck check_hom(const WittMap& map, const BaseElement& source, const BaseElement& target) {
  auto p = source.p() ? source.p() : target.p();
  if (p == 0) throw DomainError("check_hom needs a bound characteristic");
  auto r = ring::Ring::make(p, {"a1", "a2", "b1", "b2"});
  WittPair a{MPoly::variable(r, "a1"), MPoly::variable(r, "a2")};
  WittPair b{MPoly::variable(r, "b1"), MPoly::variable(r, "b2")};
  auto lhs = map.apply(w2_add(source, a, b));
  auto rhs = w2_add(target, map.apply(a), map.apply(b));
  if (lhs.first != rhs.first) return {false, (lhs.first - rhs.first).to_string()};
  if (lhs.second != rhs.second) return {false, (lhs.second - rhs.second).to_string()};
  return {true, {}};
}

}  // namespace effmodel::witt
