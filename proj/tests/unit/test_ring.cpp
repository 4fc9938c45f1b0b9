#include <gtest/gtest.h>

#include <random>

#include "effmodel/error.hpp"
#include "effmodel/ring/base_element.hpp"
#include "effmodel/ring/lattice.hpp"
#include "effmodel/ring/mpoly.hpp"
#include "effmodel/ring/parse.hpp"
#include "effmodel/ring/prime_field.hpp"
#include "effmodel/ring/rewrite.hpp"

using namespace effmodel;
using namespace effmodel::ring;

namespace {

BaseElement random_base(std::mt19937& rng, std::uint32_t p, int lo, int hi, int max_terms = 3) {
  std::uniform_int_distribution<int> e(lo, hi), c(0, static_cast<int>(p) - 1),
      n(0, max_terms);
  std::vector<BaseElement::Term> ts;
  for (int i = n(rng); i > 0; --i) ts.push_back({e(rng), static_cast<std::uint32_t>(c(rng))});
  return BaseElement::from_terms(p, ts);
}

MPoly random_poly(std::mt19937& rng, const RingPtr& ring, int max_exp, int terms) {
  std::uniform_int_distribution<int> e(0, max_exp);
  MPoly out(ring);
  for (int i = 0; i < terms; ++i) {
    std::vector<std::int32_t> exps(ring->size());
    for (auto& x : exps) x = e(rng);
    out += MPoly::monomial(ring, exps, random_base(rng, ring->p(), -2, 3, 2));
  }
  return out;
}

}  // namespace

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(4), UsageError);
  EXPECT_THROW(PrimeField(1), UsageError);
  PrimeField f(7);
  EXPECT_EQ(f.mul(f.inv(3), 3), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
}

TEST(BaseElement, ValuationAndIntegrality) {
  auto a = BaseElement::pi_power(3, 2) + BaseElement::constant(3, 1);
  EXPECT_TRUE(a.is_integral());
  EXPECT_EQ(a.valuation(), 0);
  auto b = BaseElement::pi_power(3, -3);
  EXPECT_FALSE(b.is_integral());
  EXPECT_EQ(b.valuation(), -3);
  auto z = BaseElement::zero(3);
  EXPECT_TRUE(z.is_integral());
  EXPECT_FALSE(z.valuation().has_value());
}

TEST(BaseElement, CoefficientsReduceModP) {
  EXPECT_EQ(BaseElement::constant(3, 5), BaseElement::constant(3, 2));
  EXPECT_TRUE(BaseElement::constant(3, 3).is_zero());
  auto x = BaseElement::constant(2, 1) + BaseElement::pi_power(2, 1);
  EXPECT_EQ(x * x, BaseElement::constant(2, 1) + BaseElement::pi_power(2, 2));
}

TEST(BaseElement, RingAxiomsRandomized) {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int i = 0; i < 200; ++i) {
      auto a = random_base(rng, p, -4, 4), b = random_base(rng, p, -4, 4),
           c = random_base(rng, p, -4, 4);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(MPoly, RingAxiomsRandomized) {
  std::mt19937 rng(12);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto ring = Ring::make(p, {"x", "y"});
    for (int i = 0; i < 60; ++i) {
      auto a = random_poly(rng, ring, 3, 4), b = random_poly(rng, ring, 3, 4),
           c = random_poly(rng, ring, 3, 4);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
    }
  }
}

TEST(MPoly, FrobeniusIsAdditive) {
  auto ring = Ring::make(5, {"x", "y"});
  auto x = MPoly::variable(ring, "x"), y = MPoly::variable(ring, "y");
  EXPECT_EQ((x + y).pow(5), x.pow(5) + y.pow(5));
}

TEST(Parse, PrinterRoundTrip) {
  std::mt19937 rng(13);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto ring = Ring::make(p, {"u1", "u2", "w"});
    for (int i = 0; i < 100; ++i) {
      auto a = random_poly(rng, ring, 3, 5);
      auto text = a.to_string();
      EXPECT_EQ(parse_poly(text, ring), a) << text;
      EXPECT_EQ(parse_poly(text, ring).to_string(), text);
    }
  }
}

TEST(Parse, DisplayedSyntax) {
  auto ring = Ring::make(5, {"u1", "u2"});
  auto q = parse_poly("2*pi^-3*u1^2*u2", ring);
  EXPECT_EQ(q.to_string(), "2*pi^-3*u1^2*u2");
  EXPECT_EQ(parse_poly("(u1 + 1)^2 - u1^2 - 2*u1", ring).to_string(), "1");
  EXPECT_EQ(parse_base("pi^2 + 7", 5), BaseElement::constant(5, 2) + BaseElement::pi_power(5, 2));
  EXPECT_THROW(parse_poly("u1 +", ring), UsageError);
  EXPECT_THROW(parse_poly("u3", ring), UsageError);
  EXPECT_THROW(parse_poly("u1^-1", ring), UsageError);
  EXPECT_EQ(scan_variables("Z1 + pi*w*Z1 - u2"), (std::vector<std::string>{"Z1", "w", "u2"}));
}

TEST(Rewrite, SpecExamples) {
  auto ring = Ring::make(3, {"u1"});
  auto u1 = MPoly::variable(ring, "u1");
  RewriteSystem rs(ring, {{"u1", u1}});
  EXPECT_EQ(rs.normal_form(u1.pow(3)), u1);
  EXPECT_EQ(rs.normal_form(u1.pow(4)), u1.pow(2));
  EXPECT_EQ(rs.normal_form(MPoly::constant(ring, 5)), MPoly::constant(ring, 2));
}

TEST(Rewrite, RejectsNonTriangular) {
  auto ring = Ring::make(3, {"a", "b"});
  auto a = MPoly::variable(ring, "a"), b = MPoly::variable(ring, "b");
  EXPECT_THROW(RewriteSystem(ring, {{"a", b}, {"b", a}}), DomainError);
  EXPECT_THROW(RewriteSystem(ring, {{"a", a.pow(3)}}), DomainError);
}

TEST(Rewrite, ConfluentUnderRandomReductionOrder) {
  std::mt19937 rng(14);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = Ring::make(p, {"u1", "u2", "w"});
    auto u1 = MPoly::variable(ring, "u1"), u2 = MPoly::variable(ring, "u2"),
         w = MPoly::variable(ring, "w");
    RewriteSystem rs(ring, {{"u1", u1 + w.shifted(1)},
                            {"u2", u2.shifted(1) + u1.pow(p - 1) * w - u1}});
    for (int trial = 0; trial < 15; ++trial) {
      auto q = random_poly(rng, ring, 2 * static_cast<int>(p), 3);
      auto expected = rs.normal_form(q);
      EXPECT_TRUE(rs.is_normal(expected));
      auto cur = q;
      for (int guard = 0; guard < 100000 && !rs.is_normal(cur); ++guard) {
        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (std::size_t t = 0; t < cur.size(); ++t) {
          for (std::size_t r = 0; r < rs.rules().size(); ++r) {
            if (cur.terms()[t].mono.exps[rs.rules()[r].var] >= static_cast<std::int32_t>(p)) {
              options.emplace_back(t, r);
            }
          }
        }
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        auto [t, r] = options[pick(rng)];
        cur = rs.reduce_step(cur, t, r);
      }
      EXPECT_EQ(cur, expected);
    }
  }
}

TEST(Rewrite, NormalFormIsHomomorphic) {
  std::mt19937 rng(15);
  auto ring = Ring::make(3, {"u1", "u2"});
  auto u1 = MPoly::variable(ring, "u1"), u2 = MPoly::variable(ring, "u2");
  RewriteSystem rs(ring, {{"u1", u1}, {"u2", u2.shifted(2) - u1.pow(2) * u2}});
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng, ring, 5, 3), b = random_poly(rng, ring, 5, 3);
    EXPECT_EQ(rs.normal_form(a + b), rs.normal_form(rs.normal_form(a) + rs.normal_form(b)));
    EXPECT_EQ(rs.normal_form(a * b), rs.normal_form(rs.normal_form(a) * rs.normal_form(b)));
    EXPECT_EQ(rs.normal_form(rs.normal_form(a)), rs.normal_form(a));
  }
}

namespace {

BaseElement pi(std::uint32_t p, int e) { return BaseElement::pi_power(p, e); }
BaseElement one(std::uint32_t p) { return BaseElement::constant(p, 1); }
BaseElement zero(std::uint32_t p) { return BaseElement::zero(p); }

}  // namespace

TEST(Lattice, SpecExamples) {
  const std::uint32_t p = 3;
  auto l = Lattice::reduce(2, p, {{one(p), zero(p)}, {zero(p), pi(p, 1)}});
  EXPECT_TRUE(l.contains(Row{zero(p), pi(p, 2)}));
  EXPECT_FALSE(l.contains(Row{zero(p), one(p)}));
  auto m = Lattice::reduce(2, p, {{pi(p, 1), pi(p, 1)}});
  EXPECT_TRUE(m.contains(Row{pi(p, 2), pi(p, 2)}));
  EXPECT_FALSE(m.contains(Row{pi(p, 1), pi(p, 2)}));
  EXPECT_THROW(Lattice::reduce(1, p, {{pi(p, -1)}}), DomainError);
}

TEST(Lattice, UnitPivotsAreUsed) {
  const std::uint32_t p = 2;
  // (1 + pi) is a unit of the local ring, so (1 + pi, 0) generates (1, 0).
  auto l = Lattice::reduce(2, p, {{one(p) + pi(p, 1), zero(p)}});
  EXPECT_TRUE(l.contains(Row{one(p), zero(p)}));
}

// Membership in a full-rank lattice L of R^2 is decided modulo pi^N once
// pi^N R^2 lies in L, which holds for N at least the valuation of the gcd of
// the 2x2 minors. The oracle enumerates coefficient tuples in F_2[pi]/pi^N.
TEST(Lattice, AgreesWithBruteForceOracle) {
  const std::uint32_t p = 2;
  const int n = 4;
  std::mt19937 rng(16);
  auto elements = [&] {
    std::vector<BaseElement> all;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<BaseElement::Term> ts;
      for (int b = 0; b < n; ++b) {
        if (mask >> b & 1) ts.push_back({b, 1});
      }
      all.push_back(BaseElement::from_terms(p, ts));
    }
    return all;
  }();
  auto trunc = [&](const BaseElement& x) { return x.truncated_below(n); };
  int checked = 0;
  while (checked < 40) {
    std::vector<Row> rows;
    std::uniform_int_distribution<int> nrows(2, 3);
    for (int r = nrows(rng); r > 0; --r) {
      rows.push_back({random_base(rng, p, 0, 2, 2), random_base(rng, p, 0, 2, 2)});
    }
    std::optional<std::int32_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        auto det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
        if (auto v = det.valuation(); v && (!index || *v < *index)) index = v;
      }
    }
    if (!index || *index > n) continue;
    ++checked;
    auto lattice = Lattice::reduce(2, p, rows);
    for (int q = 0; q < 12; ++q) {
      Row v{random_base(rng, p, 0, 3, 3), random_base(rng, p, 0, 3, 3)};
      if (q % 3 == 0) {
        v = {zero(p), zero(p)};
        for (const auto& r : rows) {
          auto a = random_base(rng, p, 0, 2, 2);
          v[0] += a * r[0];
          v[1] += a * r[1];
        }
      }
      bool found = false;
      std::vector<std::size_t> idx(rows.size(), 0);
      while (!found) {
        BaseElement s0 = zero(p), s1 = zero(p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          s0 += elements[idx[r]] * rows[r][0];
          s1 += elements[idx[r]] * rows[r][1];
        }
        found = trunc(s0 - v[0]).is_zero() && trunc(s1 - v[1]).is_zero();
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == elements.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
      EXPECT_EQ(lattice.contains(v), found);
    }
  }
}

TEST(Lattice, KernelIsSaturated) {
  const std::uint32_t p = 3;
  auto k = lattice_kernel(p, {{pi(p, 1)}, {pi(p, 2)}}, 1);
  EXPECT_EQ(k.rank(), 1u);
  EXPECT_TRUE(k.contains(Row{-pi(p, 1), one(p)}));
  EXPECT_FALSE(k.contains(Row{one(p), zero(p)}));
  auto k2 = lattice_kernel(p, {{one(p), zero(p)}, {zero(p), zero(p)}, {pi(p, 1), zero(p)}}, 2);
  EXPECT_EQ(k2.rank(), 2u);
  EXPECT_TRUE(k2.contains(Row{zero(p), one(p), zero(p)}));
  EXPECT_TRUE(k2.contains(Row{-pi(p, 1), zero(p), one(p)}));
}
