#include "effmodel/witt/identities.hpp"

#include "effmodel/witt/witt2.hpp"

namespace effmodel::witt {

namespace {

IdentityCheck compare(std::string name, const WittPair& lhs, const WittPair& rhs) {
  if (lhs.first != rhs.first) return {std::move(name), false, (lhs.first - rhs.first).to_string()};
  if (lhs.second != rhs.second) {
    return {std::move(name), false, (lhs.second - rhs.second).to_string()};
  }
  return {std::move(name), true, {}};
}

WittPair pair(const ring::RingPtr& r, const char* x1, const char* x2) {
  return {MPoly::variable(r, x1), MPoly::variable(r, x2)};
}

}  // namespace

std::vector<IdentityCheck> group_law_checks(const ring::BaseElement& lambda) {
  auto r = ring::Ring::make(lambda.p(), {"a1", "a2", "b1", "b2", "c1", "c2"});
  auto a = pair(r, "a1", "a2"), b = pair(r, "b1", "b2"), c = pair(r, "c1", "c2");
  WittPair zero{MPoly(r), MPoly(r)};
  std::vector<IdentityCheck> out;
  out.push_back(compare("associativity", w2_add(lambda, w2_add(lambda, a, b), c),
                        w2_add(lambda, a, w2_add(lambda, b, c))));
  out.push_back(compare("commutativity", w2_add(lambda, a, b), w2_add(lambda, b, a)));
  out.push_back(compare("identity", w2_add(lambda, a, zero), a));
  out.push_back(compare("negation", w2_add(lambda, a, w2_neg(lambda, a)), zero));
  return out;
}

IdentityCheck cocycle_check(std::uint32_t p) {
  auto r = ring::Ring::make(p, {"x", "y", "z"});
  auto x = MPoly::variable(r, "x"), y = MPoly::variable(r, "y"), z = MPoly::variable(r, "z");
  auto lhs = cocycle(x, y) + cocycle(x + y, z);
  auto rhs = cocycle(y, z) + cocycle(x, y + z);
  if (lhs == rhs) return {"cocycle", true, {}};
  return {"cocycle", false, (lhs - rhs).to_string()};
}

IdentityCheck classical_phi_display_check(std::uint32_t p) {
  auto r = ring::Ring::make(p, {"X1", "X2"});
  auto x = pair(r, "X1", "X2");
  auto one = ring::BaseElement::constant(p, 1);
  auto derived = w2_sub(one, frobenius(x), x);
  auto x1p = x.first.pow(p);
  WittPair display{x1p - x.first, x.second.pow(p) - x.second + cocycle(x1p, -x.first)};
  return compare("classical_phi_display", derived, display);
}

IdentityCheck phi_display_check(const ring::BaseElement& lambda, const ring::BaseElement& nu) {
  auto r = ring::Ring::make(lambda.p(), {"u1", "u2"});
  auto u = pair(r, "u1", "u2");
  return compare("phi_display", phi(lambda, nu, u), phi_closed_form(lambda, nu, u));
}

}  // namespace effmodel::witt
