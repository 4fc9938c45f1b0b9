#pragma once

#include <cstdint>
#include <string>

namespace effmodel::model {

enum class Regime { A, B };

std::string regime_name(Regime r);

/// Conductors (m1, m2) of the Z/p^2-torsor
///   T1^p - T1 = pi^m1 w,
///   T2^p - T2 = pi^m2 w - sum <p,k> T1^(pk) (-T1)^(p-k).
/// Two regimes are supported:
///   A: m1 = 0, m2 = -p;
///   B: m1 = -p^2 n1 with n1 >= 1, m2 = 0, with m1_tilde = n1 (p(p-1) + 1).
struct ConductorSpec {
  std::uint32_t p = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  Regime regime = Regime::A;
  std::int64_t n1 = 0;        // regime B only
  std::int64_t m1_tilde = 0;  // regime B only

  /// UsageError for non-prime p; UnsupportedRegime for anything outside A/B
  /// and for p = 2.
  static ConductorSpec make(std::uint32_t p, std::int64_t m1, std::int64_t m2);
  static ConductorSpec regime_a(std::uint32_t p);
  static ConductorSpec regime_b(std::uint32_t p, std::int64_t n1);

  bool operator==(const ConductorSpec&) const = default;
};

}  // namespace effmodel::model
