#include "effmodel/model/conductor.hpp"

#include "effmodel/error.hpp"
#include "effmodel/ring/prime_field.hpp"

namespace effmodel::model {

std::string regime_name(Regime r) { return r == Regime::A ? "A" : "B"; }

ConductorSpec ConductorSpec::make(std::uint32_t p, std::int64_t m1, std::int64_t m2) {
  ring::PrimeField check(p);
  const std::int64_t pp = p;
  auto unsupported = [&](const std::string& why) {
    return UnsupportedRegime("unsupported regime (p=" + std::to_string(p) +
                             ", m1=" + std::to_string(m1) + ", m2=" + std::to_string(m2) +
                             "): " + why +
                             "; supported are A: m1 = 0, m2 = -p and B: m1 = -p^2 n1 < 0, m2 = 0");
  };
  if (p == 2) throw unsupported("p = 2 is not covered");
  ConductorSpec s;
  s.p = p;
  s.m1 = m1;
  s.m2 = m2;
  if (m1 == 0 && m2 == -pp) {
    s.regime = Regime::A;
    return s;
  }
  if (m2 == 0 && m1 < 0 && m1 % (pp * pp) == 0) {
    s.regime = Regime::B;
    s.n1 = -m1 / (pp * pp);
    s.m1_tilde = s.n1 * (pp * (pp - 1) + 1);
    return s;
  }
  throw unsupported("conductors match neither regime");
}

ConductorSpec ConductorSpec::regime_a(std::uint32_t p) {
  return make(p, 0, -static_cast<std::int64_t>(p));
}

ConductorSpec ConductorSpec::regime_b(std::uint32_t p, std::int64_t n1) {
  return make(p, -static_cast<std::int64_t>(p) * p * n1, 0);
}

}  // namespace effmodel::model
