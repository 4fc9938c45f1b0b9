#include "effmodel/hopf/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "effmodel/error.hpp"
#include "effmodel/witt/witt2.hpp"

namespace effmodel::hopf {

std::string tensor_name(const std::string& name, const std::string& side) {
  auto cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  return name.substr(0, cut) + side + name.substr(cut);
}

namespace {

std::vector<std::string> sided(const std::vector<std::string>& gens,
                               std::initializer_list<const char*> sides) {
  std::vector<std::string> out;
  for (const char* s : sides) {
    for (const auto& g : gens) out.push_back(tensor_name(g, s));
  }
  return out;
}

ring::RewriteSystem relations_for(const RingPtr& r, const std::vector<std::string>& gens,
                                  const std::vector<BaseElement>& constants,
                                  std::initializer_list<const char*> sides) {
  std::vector<ring::RewriteSystem::Rule> rules;
  for (const char* s : sides) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto name = s[0] ? tensor_name(gens[i], s) : gens[i];
      auto v = r->require(name);
      rules.push_back({v, MPoly::variable(r, v).scaled(constants[i])});
    }
  }
  return ring::RewriteSystem(r, std::move(rules));
}

}  // namespace

HopfPresentation::HopfPresentation(std::uint32_t p, std::vector<std::string> generators,
                                   std::vector<BaseElement> relation_constants,
                                   std::vector<MPoly> comul, std::vector<BaseElement> counit)
    : p_(p),
      generators_(std::move(generators)),
      constants_(std::move(relation_constants)),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      ring_(ring::Ring::make(p, generators_)),
      doubled_(ring::Ring::make(p, sided(generators_, {"L", "R"}))),
      tripled_(ring::Ring::make(p, sided(generators_, {"A", "B", "C"}))),
      rel_(ring_),
      rel2_(doubled_),
      rel3_(tripled_) {
  const auto n = generators_.size();
  if (constants_.size() != n || comul_.size() != n || counit_.size() != n) {
    throw DomainError("Hopf presentation data of inconsistent length");
  }
  for (auto& c : constants_) {
    if (c.p() == 0) c = BaseElement::zero(p);
  }
  for (auto& c : counit_) {
    if (c.p() == 0) c = BaseElement::zero(p);
  }
  for (auto& d : comul_) d = d.embed(doubled_);
  rel_ = relations_for(ring_, generators_, constants_, {""});
  rel2_ = relations_for(doubled_, generators_, constants_, {"L", "R"});
  rel3_ = relations_for(tripled_, generators_, constants_, {"A", "B", "C"});
}

MPoly HopfPresentation::tensor_generator(const RingPtr& target, const std::string& side,
                                         std::size_t i) const {
  return MPoly::variable(target, tensor_name(generators_.at(i), side));
}

std::vector<std::vector<std::int32_t>> HopfPresentation::monomial_basis() const {
  const auto n = generators_.size();
  const auto p = static_cast<std::int32_t>(p_);
  std::vector<std::vector<std::int32_t>> out;
  std::vector<std::int32_t> e(n, 0);
  while (true) {
    out.push_back(e);
    std::size_t k = n;
    while (k > 0 && ++e[k - 1] == p) e[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::size_t HopfPresentation::rank() const { return monomial_basis().size(); }

bool HopfPresentation::is_integral() const {
  auto integral = [](const BaseElement& b) { return b.is_integral(); };
  return std::all_of(constants_.begin(), constants_.end(), integral) &&
         std::all_of(counit_.begin(), counit_.end(), integral) &&
         std::all_of(comul_.begin(), comul_.end(), [](const MPoly& d) { return d.is_integral(); });
}

MPoly HopfPresentation::comul_of(const MPoly& x) const {
  return ring::substitute(x.embed(ring_), comul_, doubled_, &rel2_);
}

BaseElement HopfPresentation::counit_of(const MPoly& x) const {
  std::vector<MPoly> images;
  for (const auto& c : counit_) images.push_back(MPoly::constant(ring_, c));
  return ring::substitute(x.embed(ring_), images, ring_).as_base();
}

MPoly HopfPresentation::place(const MPoly& d, const RingPtr& target, const std::string& left,
                              const std::string& right) const {
  std::map<std::string, std::string> names;
  for (const auto& g : generators_) {
    names[tensor_name(g, "L")] = tensor_name(g, left);
    names[tensor_name(g, "R")] = tensor_name(g, right);
  }
  return d.renamed(target, names);
}

bool HopfPresentation::operator==(const HopfPresentation& o) const {
  return p_ == o.p_ && generators_ == o.generators_ && constants_ == o.constants_ &&
         comul_ == o.comul_ && counit_ == o.counit_;
}

HopfPresentation make_zp2(std::uint32_t p) {
  auto one = BaseElement::constant(p, 1);
  auto r = ring::Ring::make(p, {"uL1", "uL2", "uR1", "uR2"});
  witt::WittPair l{MPoly::variable(r, "uL1"), MPoly::variable(r, "uL2")};
  witt::WittPair rt{MPoly::variable(r, "uR1"), MPoly::variable(r, "uR2")};
  auto s = witt::w2_add(one, l, rt);
  return HopfPresentation(p, {"u1", "u2"}, {one, one}, {s.first, s.second},
                          {BaseElement::zero(p), BaseElement::zero(p)});
}

HopfPresentation make_kernel(const BaseElement& lambda, const BaseElement& nu) {
  const auto p = lambda.p() ? lambda.p() : nu.p();
  if (p == 0) throw DomainError("make_kernel needs a bound characteristic");
  if (p == 2) throw DomainError("kernel presentation undefined for p=2");
  auto r = ring::Ring::make(p, {"uL1", "uL2", "uR1", "uR2"});
  witt::WittPair l{MPoly::variable(r, "uL1"), MPoly::variable(r, "uL2")};
  witt::WittPair rt{MPoly::variable(r, "uR1"), MPoly::variable(r, "uR2")};
  auto s = witt::w2_add(lambda, l, rt);
  HopfPresentation h(p, {"u1", "u2"}, {nu, nu.pow(p) * lambda.pow(p - 1)}, {s.first, s.second},
                     {BaseElement::zero(p), BaseElement::zero(p)});
  auto report = check_axioms(h);
  for (const auto* c : {&report.coassoc, &report.counit, &report.relations, &report.antipode}) {
    if (!c->ok) {
      throw VerificationFailure("kernel presentation fails a Hopf axiom at " + c->generator,
                                c->residual);
    }
  }
  return h;
}

namespace {

CheckResult failure(const HopfPresentation& h, std::size_t i, const MPoly& residual) {
  return {false, h.generators()[i], residual.to_string()};
}

}  // namespace

CheckResult check_coassoc(const HopfPresentation& h) {
  const auto n = h.size();
  const auto& t = h.tripled();
  std::vector<MPoly> left_first, right_first;
  for (std::size_t j = 0; j < n; ++j) left_first.push_back(h.place(h.comul()[j], t, "A", "B"));
  for (std::size_t j = 0; j < n; ++j) left_first.push_back(h.tensor_generator(t, "C", j));
  for (std::size_t j = 0; j < n; ++j) right_first.push_back(h.tensor_generator(t, "A", j));
  for (std::size_t j = 0; j < n; ++j) right_first.push_back(h.place(h.comul()[j], t, "B", "C"));
  for (std::size_t i = 0; i < n; ++i) {
    auto lhs = ring::substitute(h.comul()[i], left_first, t, &h.tripled_relations());
    auto rhs = ring::substitute(h.comul()[i], right_first, t, &h.tripled_relations());
    if (lhs != rhs) return failure(h, i, lhs - rhs);
  }
  return {};
}

CheckResult check_counit(const HopfPresentation& h) {
  const auto n = h.size();
  const auto& r = h.ring();
  std::vector<MPoly> eps_left, eps_right;
  for (std::size_t j = 0; j < n; ++j) eps_left.push_back(MPoly::constant(r, h.counit()[j]));
  for (std::size_t j = 0; j < n; ++j) eps_left.push_back(h.generator(j));
  for (std::size_t j = 0; j < n; ++j) eps_right.push_back(h.generator(j));
  for (std::size_t j = 0; j < n; ++j) eps_right.push_back(MPoly::constant(r, h.counit()[j]));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto* images : {&eps_left, &eps_right}) {
      auto got = ring::substitute(h.comul()[i], *images, r, &h.relations());
      if (got != h.generator(i)) return failure(h, i, got - h.generator(i));
    }
  }
  return {};
}

CheckResult check_relations(const HopfPresentation& h) {
  const auto p = h.p();
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto x = h.generator(i);
    auto rel = x.pow(p) - x.scaled(h.relation_constants()[i]);
    auto image = h.comul_of(rel);
    if (!image.is_zero()) return failure(h, i, image);
  }
  return {};
}

std::vector<MPoly> antipode(const HopfPresentation& h) {
  const auto n = h.size();
  const auto& r = h.ring();
  std::vector<MPoly> s;
  for (std::size_t i = 0; i < n; ++i) {
    auto f = h.comul()[i] - h.tensor_generator(h.doubled(), "L", i) -
             h.tensor_generator(h.doubled(), "R", i);
    for (const auto& t : f.terms()) {
      for (std::size_t j = i; j < n; ++j) {
        if (t.mono.exps[j] != 0 || t.mono.exps[n + j] != 0) {
          throw DomainError("antipode: comultiplication of " + h.generators()[i] +
                            " is not of triangular additive shape");
        }
      }
    }
    std::vector<MPoly> images;
    for (std::size_t j = 0; j < n; ++j) images.push_back(j < i ? s[j] : MPoly(r));
    for (std::size_t j = 0; j < n; ++j) images.push_back(h.generator(j));
    s.push_back(h.relations().normal_form(-h.generator(i) -
                                          ring::substitute(f, images, r, &h.relations())));
  }
  return s;
}

CheckResult check_antipode(const HopfPresentation& h, const std::vector<MPoly>& s) {
  const auto n = h.size();
  const auto& r = h.ring();
  std::vector<MPoly> left, right;
  for (std::size_t j = 0; j < n; ++j) left.push_back(s[j].embed(r));
  for (std::size_t j = 0; j < n; ++j) left.push_back(h.generator(j));
  for (std::size_t j = 0; j < n; ++j) right.push_back(h.generator(j));
  for (std::size_t j = 0; j < n; ++j) right.push_back(s[j].embed(r));
  for (std::size_t i = 0; i < n; ++i) {
    auto expected = MPoly::constant(r, h.counit()[i]);
    for (const auto* images : {&left, &right}) {
      auto got = ring::substitute(h.comul()[i], *images, r, &h.relations());
      if (got != expected) return failure(h, i, got - expected);
    }
  }
  return {};
}

AxiomReport check_axioms(const HopfPresentation& h) {
  AxiomReport rep{h.rank(), check_coassoc(h), check_counit(h), check_relations(h), {}};
  try {
    rep.antipode = check_antipode(h, antipode(h));
  } catch (const DomainError& e) {
    rep.antipode = {false, {}, e.what()};
  }
  return rep;
}

HopfPresentation special_fiber(const HopfPresentation& h) {
  if (!h.is_integral()) throw DomainError("special fiber of a non-integral presentation");
  const auto p = h.p();
  auto reduce = [p](const BaseElement& b) { return BaseElement::constant(p, b.residue()); };
  std::vector<BaseElement> constants, counit;
  for (const auto& c : h.relation_constants()) constants.push_back(reduce(c));
  for (const auto& c : h.counit()) counit.push_back(reduce(c));
  std::vector<MPoly> comul;
  for (const auto& d : h.comul()) comul.push_back(d.reduce_mod_pi());
  return HopfPresentation(p, h.generators(), constants, comul, counit);
}

HopfPresentation quotient(const HopfPresentation& h, const std::vector<std::size_t>& killed) {
  const auto n = h.size();
  std::vector<bool> dead(n, false);
  for (auto k : killed) dead.at(k) = true;
  std::vector<MPoly> images;
  for (const auto* side : {"L", "R"}) {
    for (std::size_t j = 0; j < n; ++j) {
      images.push_back(dead[j] ? MPoly(h.doubled()) : h.tensor_generator(h.doubled(), side, j));
    }
  }
  std::vector<std::string> gens;
  std::vector<BaseElement> constants, counit;
  std::vector<MPoly> comul;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = ring::substitute(h.comul()[i], images, h.doubled());
    if (dead[i]) {
      if (!d.is_zero() || !h.counit()[i].is_zero()) {
        throw DomainError("generator " + h.generators()[i] + " does not cut out a subgroup");
      }
      continue;
    }
    gens.push_back(h.generators()[i]);
    constants.push_back(h.relation_constants()[i]);
    counit.push_back(h.counit()[i]);
    comul.push_back(std::move(d));
  }
  auto names = sided(gens, {"L", "R"});
  auto target = ring::Ring::make(h.p(), names);
  for (auto& d : comul) d = d.embed(target);
  return HopfPresentation(h.p(), gens, constants, comul, counit);
}

}  // namespace effmodel::hopf
