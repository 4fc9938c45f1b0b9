#include <gtest/gtest.h>

#include "effmodel/error.hpp"
#include "effmodel/ring/parse.hpp"
#include "effmodel/witt/identities.hpp"
#include "effmodel/witt/witt2.hpp"

using namespace effmodel;
using namespace effmodel::witt;
using ring::BaseElement;
using ring::parse_base;
using ring::parse_poly;
using ring::Ring;

namespace {

// Pascal's triangle over the integers, no modular shortcuts.
std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint64_t> row{1};
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (std::uint32_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

const std::vector<std::uint32_t> kPrimes{2, 3, 5, 7};

std::vector<BaseElement> lambda_grid(std::uint32_t p) {
  return {parse_base("0", p), parse_base("1", p), parse_base("pi", p), parse_base("1 + pi", p)};
}

WittPair pair_of(const ring::RingPtr& r, const std::string& a, const std::string& b) {
  return {parse_poly(a, r), parse_poly(b, r)};
}

}  // namespace

TEST(WittBinom, MatchesIntegerBinomials) {
  EXPECT_EQ(witt_binom(3, 1), 1u);
  EXPECT_EQ(witt_binom(5, 2), 2u);
  EXPECT_EQ(witt_binom(2, 1), 1u);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u, 61u}) {
    for (std::uint32_t k = 1; k < p; ++k) {
      auto c = binomial(p, k);
      ASSERT_EQ(c % p, 0u);
      EXPECT_EQ(witt_binom(p, k), (c / p) % p) << p << "," << k;
    }
  }
  EXPECT_THROW(witt_binom(5, 0), DomainError);
  EXPECT_THROW(witt_binom(5, 5), DomainError);
}

TEST(WittAdd, Examples) {
  auto r2 = Ring::make(2, {"u1", "u2", "v1", "v2"});
  auto s = w2_add(parse_base("1", 2), pair_of(r2, "u1", "u2"), pair_of(r2, "v1", "v2"));
  EXPECT_EQ(s, pair_of(r2, "u1 + v1", "u2 + v2 + u1*v1"));

  auto r3 = Ring::make(3, {"u1", "u2", "v1", "v2"});
  auto t = w2_add(parse_base("pi", 3), pair_of(r3, "u1", "u2"), pair_of(r3, "v1", "v2"));
  EXPECT_EQ(t, pair_of(r3, "u1 + v1", "u2 + v2 + pi*(u1*v1^2 + u1^2*v1)"));

  auto zero = pair_of(r3, "0", "0");
  for (const auto& l : lambda_grid(3)) {
    EXPECT_EQ(w2_add(l, pair_of(r3, "u1", "u2"), zero), pair_of(r3, "u1", "u2"));
  }
}

TEST(WittNeg, GoldenFormulas) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto r = Ring::make(p, {"u1", "u2"});
    EXPECT_EQ(w2_neg(parse_base("1", p), pair_of(r, "u1", "u2")), pair_of(r, "-u1", "-u2"));
    EXPECT_EQ(w2_neg(parse_base("pi", p), pair_of(r, "u1", "u2")), pair_of(r, "-u1", "-u2"));
  }
  auto r = Ring::make(2, {"u1", "u2"});
  EXPECT_EQ(w2_neg(parse_base("1", 2), pair_of(r, "u1", "u2")), pair_of(r, "u1", "u2 + u1^2"));
  EXPECT_EQ(w2_neg(parse_base("pi", 2), pair_of(r, "u1", "u2")),
            pair_of(r, "u1", "u2 + pi*u1^2"));
}

TEST(WittLaw, GroupAxiomsAcrossSweep) {
  for (auto p : kPrimes) {
    for (const auto& l : lambda_grid(p)) {
      for (const auto& c : group_law_checks(l)) {
        EXPECT_TRUE(c.ok) << "p=" << p << " lambda=" << l.to_string() << " " << c.name << ": "
                          << c.residual;
      }
    }
    EXPECT_TRUE(cocycle_check(p).ok) << p;
  }
}

TEST(WittLaw, SubtractionInvertsAddition) {
  auto r = Ring::make(5, {"a1", "a2", "b1", "b2"});
  auto a = pair_of(r, "a1", "a2"), b = pair_of(r, "b1", "b2");
  for (const auto& l : lambda_grid(5)) {
    EXPECT_EQ(w2_add(l, w2_sub(l, a, b), b), a);
  }
}

TEST(Frobenius, Examples) {
  auto r = Ring::make(3, {"u1", "u2"});
  auto one = parse_base("1", 3);
  EXPECT_EQ(frobenius(pair_of(r, "u1", "u2")), pair_of(r, "u1^3", "u2^3"));
  EXPECT_EQ(frobenius(pair_of(r, "0", "0")), pair_of(r, "0", "0"));
  EXPECT_EQ(frobenius(pair_of(r, "pi", "1")), pair_of(r, "pi^3", "1"));
  for (auto p : kPrimes) {
    for (const auto& l : lambda_grid(p)) EXPECT_TRUE(check_hom(frobenius_map(l)).ok);
  }
  (void)one;
}

TEST(ScalarMap, Examples) {
  auto r = Ring::make(3, {"u1", "u2"});
  auto u = pair_of(r, "u1", "u2");
  EXPECT_EQ(scalar_map(parse_base("1", 3), parse_base("1", 3), u), u);
  EXPECT_EQ(scalar_map(parse_base("pi^2", 3), parse_base("pi", 3), u),
            pair_of(r, "pi*u1", "pi^5*u2"));
  auto lambda = parse_base("1 + pi", 3), mu = parse_base("pi^2", 3), nu = parse_base("pi", 3),
       mu2 = parse_base("pi + pi^3", 3), nu2 = parse_base("2 + pi", 3);
  auto first = scalar_map_of(lambda, mu, nu);
  auto second = scalar_map_of(lambda * mu, mu2, nu2);
  auto composed = compose(second, first);
  auto direct = scalar_map_of(lambda, mu * mu2, nu * nu2);
  EXPECT_EQ(composed.apply(u), direct.apply(u));
  EXPECT_TRUE(check_hom(composed).ok);
}

TEST(ScalarMap, WrongTargetTwistIsDetected) {
  auto lambda = parse_base("pi", 5), mu = parse_base("pi^2", 5), nu = parse_base("1 + pi", 5);
  auto map = scalar_map_of(lambda, mu, nu);
  EXPECT_TRUE(check_hom(map).ok);
  auto check = check_hom(map, lambda, lambda * parse_base("pi", 5));
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.residual.empty());
}

TEST(Phi, ClassicalCase) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto r = Ring::make(p, {"u1", "u2"});
    auto u = pair_of(r, "u1", "u2");
    auto one = parse_base("1", p);
    EXPECT_EQ(phi(one, one, u), w2_sub(one, frobenius(u), u));
    EXPECT_TRUE(classical_phi_display_check(p).ok);
    EXPECT_EQ(phi(parse_base("pi", p), one, pair_of(r, "0", "0")), pair_of(r, "0", "0"));
  }
}

TEST(Phi, ExpandedExampleAtThree) {
  auto r = Ring::make(3, {"u1", "u2"});
  auto u = pair_of(r, "u1", "u2");
  auto expected = pair_of(r, "u1^3 - u1", "u2^3 - pi^2*u2 + pi^3*(u1^5 - u1^7)");
  EXPECT_EQ(phi(parse_base("pi", 3), parse_base("1", 3), u), expected);
  EXPECT_EQ(phi_closed_form(parse_base("pi", 3), parse_base("1", 3), u), expected);
}

TEST(Phi, DisplayMatchesSubtractionForOddPrimes) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (const auto& l : lambda_grid(p)) {
      for (const auto& n : lambda_grid(p)) {
        auto c = phi_display_check(l, n);
        EXPECT_TRUE(c.ok) << c.residual;
        EXPECT_TRUE(check_hom(phi_map(l, n)).ok);
      }
    }
  }
}

// In characteristic 2 the cocycle c(x,-x) = x^2 does not vanish, and the
// coordinate display of phi misses the term lambda^2 nu^2 u1^2 that the
// subtraction produces.
TEST(Phi, DisplayDiffersFromSubtractionAtTwo) {
  auto r = Ring::make(2, {"u1", "u2"});
  auto u = pair_of(r, "u1", "u2");
  for (const auto& l : lambda_grid(2)) {
    for (const auto& n : lambda_grid(2)) {
      auto derived = phi(l, n, u);
      auto display = phi_closed_form(l, n, u);
      EXPECT_EQ(derived.first, display.first);
      EXPECT_EQ(derived.second - display.second,
                (l * l * n * n) * parse_poly("u1^2", r));
      EXPECT_TRUE(check_hom(phi_map(l, n)).ok);
    }
  }
  auto classical = classical_phi_display_check(2);
  EXPECT_FALSE(classical.ok);
  EXPECT_EQ(classical.residual, "X1^2");
}
