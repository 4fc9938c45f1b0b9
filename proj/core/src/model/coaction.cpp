#include "effmodel/model/coaction.hpp"

#include <algorithm>

#include "effmodel/error.hpp"

namespace effmodel::model {

namespace {

std::vector<std::string> cover_names(const CoverPresentation& cover) {
  return cover.ring()->names();
}

ring::RewriteSystem combined_relations(const RingPtr& target, const CoverPresentation& cover,
                                       const HopfPresentation& group,
                                       std::initializer_list<const char*> sides) {
  std::vector<ring::RewriteSystem::Rule> rules;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    rules.push_back({target->require(cover.fiber()[i]), cover.rhs()[i].embed(target)});
  }
  for (const char* side : sides) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      auto name = side[0] ? hopf::tensor_name(group.generators()[i], side) : group.generators()[i];
      auto v = target->require(name);
      rules.push_back({v, MPoly::variable(target, v).scaled(group.relation_constants()[i])});
    }
  }
  return ring::RewriteSystem(target, std::move(rules));
}

}  // namespace

Coaction::Coaction(HopfPresentation group, CoverPresentation cover, std::vector<MPoly> images)
    : group_(std::move(group)),
      cover_(std::move(cover)),
      images_(std::move(images)),
      ring_([&] {
        auto names = cover_names(cover_);
        for (const auto& g : group_.generators()) names.push_back(g);
        return ring::Ring::make(cover_.p(), names);
      }()),
      ring2_([&] {
        auto names = cover_names(cover_);
        for (const auto& g : group_.doubled()->names()) names.push_back(g);
        return ring::Ring::make(cover_.p(), names);
      }()),
      rel_(combined_relations(ring_, cover_, group_, {""})),
      rel2_(combined_relations(ring2_, cover_, group_, {"L", "R"})) {
  if (group_.p() != cover_.p()) throw DomainError("group and cover of different characteristic");
  if (images_.size() != cover_.size()) throw DomainError("one image per fiber variable expected");
  for (auto& im : images_) im = rel_.normal_form(im.embed(ring_));
}

MPoly Coaction::apply(const MPoly& a) const {
  std::vector<MPoly> subs = images_;
  subs.push_back(MPoly::variable(ring_, "w"));
  return ring::substitute(a.embed(cover_.ring()), subs, ring_, &rel_);
}

std::vector<std::string> Coaction::describe() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.push_back(cover_.fiber()[i] + " -> " + images_[i].to_string());
  }
  return out;
}

bool Coaction::is_integral() const {
  return std::all_of(images_.begin(), images_.end(), [](const MPoly& m) { return m.is_integral(); });
}

namespace {

CheckResult fail(const Coaction& c, std::size_t i, const MPoly& residual) {
  return {false, c.cover().fiber()[i], residual.to_string()};
}

// Images of the group variables of c.ring() inside target, for a
// substitution into the images.
std::vector<MPoly> cover_identity(const Coaction& c, const RingPtr& target) {
  std::vector<MPoly> out;
  for (const auto& n : c.cover().ring()->names()) out.push_back(MPoly::variable(target, n));
  return out;
}

}  // namespace

CheckResult check_coaction_counit(const Coaction& c) {
  const auto& g = c.group();
  auto subs = cover_identity(c, c.cover().ring());
  for (const auto& e : g.counit()) subs.push_back(MPoly::constant(c.cover().ring(), e));
  for (std::size_t i = 0; i < c.images().size(); ++i) {
    auto got = ring::substitute(c.images()[i], subs, c.cover().ring(), &c.cover().relations());
    auto expected = c.cover().variable(i);
    if (got != expected) return fail(c, i, got - expected);
  }
  return {};
}

CheckResult check_coaction_coassoc(const Coaction& c) {
  const auto& g = c.group();
  const auto& r2 = c.doubled_ring();
  const auto& rel2 = c.doubled_relations();
  const auto n = g.size();
  // Images with the group variables on the left factor.
  std::vector<MPoly> to_left = cover_identity(c, r2);
  for (std::size_t j = 0; j < n; ++j) to_left.push_back(g.tensor_generator(r2, "L", j));
  std::vector<MPoly> left_images;
  for (const auto& im : c.images()) left_images.push_back(ring::substitute(im, to_left, r2));

  std::vector<MPoly> act_then_act = left_images;
  act_then_act.push_back(MPoly::variable(r2, "w"));
  for (std::size_t j = 0; j < n; ++j) act_then_act.push_back(g.tensor_generator(r2, "R", j));

  std::vector<MPoly> act_then_comul = cover_identity(c, r2);
  for (std::size_t j = 0; j < n; ++j) act_then_comul.push_back(g.comul()[j].embed(r2));

  for (std::size_t i = 0; i < c.images().size(); ++i) {
    auto lhs = ring::substitute(c.images()[i], act_then_act, r2, &rel2);
    auto rhs = ring::substitute(c.images()[i], act_then_comul, r2, &rel2);
    if (lhs != rhs) return fail(c, i, lhs - rhs);
  }
  return {};
}

CheckResult check_coaction_relations(const Coaction& c) {
  const auto& cover = c.cover();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    auto equation = cover.variable(i).pow(cover.p()) - cover.rhs()[i];
    auto image = c.apply(equation);
    if (!image.is_zero()) return fail(c, i, image);
  }
  return {};
}

CheckResult check_coaction(const Coaction& c) {
  if (auto r = check_coaction_counit(c); !r) return r;
  if (auto r = check_coaction_relations(c); !r) return r;
  return check_coaction_coassoc(c);
}

std::vector<MPoly> coaction_coefficients(const Coaction& c) {
  const auto& g = c.group();
  const auto ncover = c.cover().ring()->size();
  std::vector<MPoly> out;
  for (const auto& im : c.images()) {
    std::map<std::vector<std::int32_t>, std::vector<MPoly::Term>> by_cover;
    for (const auto& t : im.terms()) {
      std::vector<std::int32_t> key(t.mono.exps.begin(), t.mono.exps.begin() + ncover);
      MPoly::Term gt{{}, t.coeff};
      gt.mono.pi = t.mono.pi;
      for (std::size_t j = 0; j < g.size(); ++j) gt.mono.exps[j] = t.mono.exps[ncover + j];
      by_cover[key].push_back(gt);
    }
    for (auto& [key, terms] : by_cover) {
      auto coeff = MPoly::from_terms(g.ring(), std::move(terms));
      if (coeff.is_constant()) continue;
      if (std::find(out.begin(), out.end(), coeff) == out.end()) out.push_back(std::move(coeff));
    }
  }
  return out;
}

Coaction special_fiber(const Coaction& c) {
  if (!c.is_integral()) throw DomainError("special fiber of a non-integral coaction");
  auto group = hopf::special_fiber(c.group());
  auto cover = c.cover().special_fiber();
  std::vector<MPoly> images;
  for (const auto& im : c.images()) images.push_back(im.reduce_mod_pi());
  return Coaction(std::move(group), std::move(cover), std::move(images));
}

Coaction rewrite_group(const Coaction& c, const HopfPresentation& group,
                       const std::vector<MPoly>& images) {
  auto names = c.cover().ring()->names();
  for (const auto& gname : group.generators()) names.push_back(gname);
  auto target = ring::Ring::make(c.cover().p(), names);
  auto subs = cover_identity(c, target);
  for (const auto& im : images) subs.push_back(im.embed(target));
  std::vector<MPoly> out;
  for (const auto& im : c.images()) out.push_back(ring::substitute(im, subs, target));
  return Coaction(group, c.cover(), std::move(out));
}

}  // namespace effmodel::model
