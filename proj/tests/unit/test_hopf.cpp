#include <gtest/gtest.h>

#include "effmodel/error.hpp"
#include "effmodel/hopf/classify.hpp"
#include "effmodel/hopf/presentation.hpp"
#include "effmodel/ring/parse.hpp"
#include "effmodel/witt/witt2.hpp"

using namespace effmodel;
using namespace effmodel::hopf;
using ring::parse_base;
using ring::parse_poly;

namespace {

std::vector<BaseElement> grid(std::uint32_t p, std::initializer_list<const char*> texts) {
  std::vector<BaseElement> out;
  for (const char* t : texts) out.push_back(parse_base(t, p));
  return out;
}

HopfPresentation with_comul(const HopfPresentation& h, std::size_t i, const MPoly& d) {
  auto comul = h.comul();
  comul[i] = d;
  return HopfPresentation(h.p(), h.generators(), h.relation_constants(), comul, h.counit());
}

}  // namespace

TEST(Hopf, Zp2Basics) {
  auto h = make_zp2(3);
  EXPECT_EQ(h.rank(), 9u);
  EXPECT_TRUE(check_counit(h).ok);
  EXPECT_EQ(h.comul()[1], parse_poly("uL2 + uR2 + uL1*uR1^2 + uL1^2*uR1", h.doubled()));
  EXPECT_EQ(h.doubled()->names(), (std::vector<std::string>{"uL1", "uL2", "uR1", "uR2"}));
}

TEST(Hopf, KernelConstants) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    EXPECT_EQ(make_kernel(parse_base("1", p), parse_base("1", p)), make_zp2(p));
  }
  auto k = make_kernel(parse_base("pi", 3), parse_base("1", 3));
  EXPECT_EQ(k.relation_constants(), grid(3, {"1", "pi^2"}));
  auto k2 = make_kernel(parse_base("pi^4", 3), parse_base("pi^2", 3));
  EXPECT_EQ(k2.relation_constants(), grid(3, {"pi^2", "pi^14"}));
  EXPECT_THROW(make_kernel(parse_base("1", 2), parse_base("1", 2)), DomainError);
}

TEST(Hopf, AxiomSuiteAcrossGrid) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    EXPECT_TRUE(check_axioms(make_zp2(p)).all_ok());
    for (const auto& l : grid(p, {"0", "1", "pi", "pi^4"})) {
      for (const auto& n : grid(p, {"0", "1", "pi", "pi^2"})) {
        auto h = make_kernel(l, n);
        auto rep = check_axioms(h);
        EXPECT_EQ(rep.rank, static_cast<std::size_t>(p * p));
        EXPECT_TRUE(rep.all_ok()) << p << " " << l.to_string() << " " << n.to_string();
      }
    }
  }
}

TEST(Hopf, AntipodeIsWittNegation) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (const auto& l : grid(p, {"1", "pi", "1 + pi"})) {
      auto h = make_kernel(l, parse_base("1", p));
      auto s = antipode(h);
      witt::WittPair u{h.generator(0), h.generator(1)};
      auto neg = witt::w2_neg(l, u);
      EXPECT_EQ(s[0], neg.first);
      EXPECT_EQ(s[1], neg.second);
      EXPECT_EQ(s[0], parse_poly("-u1", h.ring()));
      EXPECT_EQ(s[1], parse_poly("-u2", h.ring()));
    }
  }
}

TEST(Hopf, PhiVanishesOnKernel) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (const auto& l : grid(p, {"0", "1", "pi", "pi^4"})) {
      for (const auto& n : grid(p, {"0", "1", "pi", "pi^2"})) {
        auto h = make_kernel(l, n);
        auto image = witt::phi(l, n, {h.generator(0), h.generator(1)});
        EXPECT_TRUE(h.relations().normal_form(image.first).is_zero());
        EXPECT_TRUE(h.relations().normal_form(image.second).is_zero());
      }
    }
  }
}

TEST(Hopf, DroppingAnyCrossTermIsDetected) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto h = make_kernel(parse_base("pi", p), parse_base("1", p));
    auto full = h.comul()[1];
    for (const auto& t : full.terms()) {
      auto single = MPoly::from_terms(h.doubled(), {t});
      if (single == h.tensor_generator(h.doubled(), "L", 1) ||
          single == h.tensor_generator(h.doubled(), "R", 1)) {
        continue;
      }
      auto mutated = with_comul(h, 1, full - single);
      auto c = check_coassoc(mutated);
      EXPECT_FALSE(c.ok);
      EXPECT_EQ(c.generator, "u2");
      EXPECT_FALSE(c.residual.empty());
      EXPECT_FALSE(check_axioms(mutated).all_ok());
    }
  }
}

TEST(Hopf, RelationCheckSeesWrongConstant) {
  auto h = make_kernel(parse_base("pi", 5), parse_base("1", 5));
  HopfPresentation bad(5, h.generators(), grid(5, {"1", "pi"}), h.comul(), h.counit());
  EXPECT_TRUE(check_coassoc(bad).ok);
  auto r = check_relations(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.generator, "u2");
}

TEST(Hopf, SpecialFiberClassification) {
  auto pi4 = make_kernel(parse_base("pi^4", 3), parse_base("pi^2", 3));
  EXPECT_EQ(classify_fiber(special_fiber(pi4)).to_string(), "Product(AlphaP,AlphaP)");
  auto pi1 = make_kernel(parse_base("pi", 3), parse_base("1", 3));
  EXPECT_EQ(classify_fiber(special_fiber(pi1)).to_string(), "Product(EtaleZp,AlphaP)");
  EXPECT_EQ(classify_fiber(special_fiber(make_zp2(3))).to_string(), "KernelForm(1,1)");
  EXPECT_THROW(special_fiber(make_kernel(parse_base("pi^-1", 3), parse_base("1", 3))),
               DomainError);
  EXPECT_THROW(classify_fiber(pi1), DomainError);
}

TEST(Hopf, ConnectedEtalePieces) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto hk = special_fiber(make_kernel(parse_base("pi", p), parse_base("1", p)));
    auto cls = classify_fiber(hk);
    ASSERT_EQ(cls.tag, FiberClass::Tag::Product);
    EXPECT_EQ(cls.parts[0].tag, FiberClass::Tag::EtaleZp);
    EXPECT_EQ(cls.parts[1].tag, FiberClass::Tag::AlphaP);
    // The closed subgroup u1 = 0 is the connected kernel of rank p.
    auto connected = quotient(hk, {0});
    EXPECT_EQ(connected.rank(), p);
    EXPECT_EQ(classify_fiber(connected).tag, FiberClass::Tag::AlphaP);
  }
  EXPECT_THROW(quotient(make_zp2(3), {1}), DomainError);
}

TEST(Hopf, IdentifyKernelForm) {
  auto h = make_kernel(parse_base("pi^4", 3), parse_base("pi^2", 3));
  auto id = identify_kernel_form(h);
  ASSERT_TRUE(id);
  EXPECT_EQ(id->lambda, parse_base("pi^4", 3));
  EXPECT_EQ(id->nu, parse_base("pi^2", 3));
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto z = identify_kernel_form(make_zp2(p));
    ASSERT_TRUE(z);
    EXPECT_EQ(z->lambda, parse_base("1", p));
    EXPECT_EQ(z->nu, parse_base("1", p));
  }
  HopfPresentation mismatch(3, h.generators(), grid(3, {"pi^2", "pi^3"}), h.comul(), h.counit());
  EXPECT_FALSE(identify_kernel_form(mismatch));
  auto mutated = with_comul(h, 1, h.comul()[1] - parse_poly("pi^4*uL1*uR1^2", h.doubled()));
  EXPECT_FALSE(identify_kernel_form(mutated));
  auto d2 = ring::Ring::make(2, {"uL1", "uL2", "uR1", "uR2"});
  HopfPresentation two(2, {"u1", "u2"}, grid(2, {"1", "1"}),
                       {parse_poly("uL1 + uR1", d2), parse_poly("uL2 + uR2 + uL1*uR1", d2)},
                       grid(2, {"0", "0"}));
  EXPECT_THROW(identify_kernel_form(two), DomainError);
}

TEST(Hopf, SpecialFiberCommutesWithIdentification) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (const auto& l : grid(p, {"0", "1", "pi", "pi^4", "1 + pi"})) {
      for (const auto& n : grid(p, {"0", "1", "pi", "pi^2", "2 + pi"})) {
        auto h = make_kernel(l, n);
        auto generic = identify_kernel_form(h);
        auto fiber = identify_kernel_form(special_fiber(h));
        ASSERT_TRUE(generic && fiber);
        EXPECT_EQ(fiber->lambda, BaseElement::constant(p, generic->lambda.residue()));
        EXPECT_EQ(fiber->nu, BaseElement::constant(p, generic->nu.residue()));
      }
    }
  }
}
