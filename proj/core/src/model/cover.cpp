#include "effmodel/model/cover.hpp"

#include "effmodel/error.hpp"
#include "effmodel/witt/witt2.hpp"

namespace effmodel::model {

namespace {

std::vector<std::string> with_base(std::vector<std::string> fiber) {
  fiber.emplace_back("w");
  return fiber;
}

}  // namespace

CoverPresentation::CoverPresentation(std::uint32_t p, std::vector<std::string> fiber,
                                     std::vector<MPoly> rhs, bool integral_model)
    : p_(p),
      fiber_(std::move(fiber)),
      ring_(ring::Ring::make(p, with_base(fiber_))),
      rhs_(std::move(rhs)),
      integral_(integral_model),
      rel_(ring_) {
  if (rhs_.size() != fiber_.size()) throw DomainError("one equation per fiber variable expected");
  std::vector<ring::RewriteSystem::Rule> rules;
  for (std::size_t i = 0; i < rhs_.size(); ++i) {
    rhs_[i] = rhs_[i].embed(ring_);
    if (integral_ && !rhs_[i].is_integral()) {
      throw DomainError("equation for " + fiber_[i] + " is not integral: " + rhs_[i].to_string());
    }
    rules.push_back({i, rhs_[i]});
  }
  rel_ = ring::RewriteSystem(ring_, std::move(rules));
}

std::vector<std::string> CoverPresentation::equations() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < fiber_.size(); ++i) {
    out.push_back(fiber_[i] + "^" + std::to_string(p_) + " = " + rhs_[i].to_string());
  }
  return out;
}

CoverPresentation CoverPresentation::special_fiber() const {
  std::vector<MPoly> rhs;
  for (const auto& r : rhs_) rhs.push_back(r.reduce_mod_pi());
  return CoverPresentation(p_, fiber_, std::move(rhs), true);
}

CoverPresentation CoverPresentation::renamed(const std::vector<std::string>& fiber) const {
  auto target = ring::Ring::make(p_, with_base(fiber));
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < fiber_.size(); ++i) names[fiber_[i]] = fiber.at(i);
  std::vector<MPoly> rhs;
  for (const auto& r : rhs_) rhs.push_back(r.renamed(target, names));
  return CoverPresentation(p_, fiber, std::move(rhs), integral_);
}

CoverPresentation torsor_equations(std::uint32_t p, std::int64_t m1, std::int64_t m2) {
  auto r = ring::Ring::make(p, {"T1", "T2", "w"});
  auto t1 = MPoly::variable(r, "T1"), t2 = MPoly::variable(r, "T2"), w = MPoly::variable(r, "w");
  auto rhs1 = t1 + w.shifted(static_cast<std::int32_t>(m1));
  auto rhs2 = t2 + w.shifted(static_cast<std::int32_t>(m2)) - witt::cocycle(t1.pow(p), -t1);
  bool integral = rhs1.is_integral() && rhs2.is_integral();
  return CoverPresentation(p, {"T1", "T2"}, {rhs1, rhs2}, integral);
}

CoverPresentation substitute_model(const CoverPresentation& kside,
                                   const std::vector<std::int64_t>& shifts) {
  const auto p = kside.p();
  const auto n = kside.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("Z" + std::to_string(i + 1));
  auto target = ring::Ring::make(p, with_base(names));
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(MPoly::variable(target, i).shifted(static_cast<std::int32_t>(-shifts.at(i))));
  }
  images.push_back(MPoly::variable(target, "w"));
  std::vector<MPoly> rhs;
  bool integral = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = ring::substitute(kside.rhs()[i], images, target)
                 .shifted(static_cast<std::int32_t>(static_cast<std::int64_t>(p) * shifts[i]));
    integral = integral && r.is_integral();
    rhs.push_back(std::move(r));
  }
  return CoverPresentation(p, names, std::move(rhs), integral);
}

bool recovers_kside(const CoverPresentation& model, const CoverPresentation& kside,
                    const std::vector<std::int64_t>& shifts) {
  const auto p = model.p();
  const auto n = model.size();
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(kside.variable(i).shifted(static_cast<std::int32_t>(shifts.at(i))));
  }
  images.push_back(kside.base());
  for (std::size_t i = 0; i < n; ++i) {
    auto back = ring::substitute(model.rhs()[i], images, kside.ring())
                    .shifted(static_cast<std::int32_t>(-static_cast<std::int64_t>(p) * shifts[i]));
    if (back != kside.rhs()[i]) return false;
  }
  return true;
}

}  // namespace effmodel::model
