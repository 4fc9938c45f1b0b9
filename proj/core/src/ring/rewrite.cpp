#include "effmodel/ring/rewrite.hpp"

#include <map>

#include "effmodel/error.hpp"

namespace effmodel::ring {

namespace {

using PowerCache = std::map<std::pair<std::size_t, std::int32_t>, MPoly>;

}  // namespace

RewriteSystem::RewriteSystem(RingPtr ring)
    : ring_(std::move(ring)), rule_of_var_(ring_->size()) {}

RewriteSystem::RewriteSystem(RingPtr ring, std::vector<Rule> rules)
    : ring_(std::move(ring)), rules_(std::move(rules)), rule_of_var_(ring_->size()) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto v = rules_[i].var;
    if (v >= ring_->size()) throw DomainError("rewrite rule for undeclared variable");
    if (rule_of_var_[v]) {
      throw DomainError("two rewrite rules for '" + ring_->name(v) + "'");
    }
    rule_of_var_[v] = i;
    if (!(*rules_[i].rhs.ring() == *ring_)) {
      rules_[i].rhs = rules_[i].rhs.embed(ring_);
    }
  }
  validate();
}

RewriteSystem::RewriteSystem(RingPtr ring,
                             const std::vector<std::pair<std::string, MPoly>>& rules)
    : RewriteSystem(ring, [&] {
        std::vector<Rule> out;
        for (const auto& [name, rhs] : rules) out.push_back({ring->require(name), rhs});
        return out;
      }()) {}

void RewriteSystem::validate() const {
  const auto p = static_cast<std::int32_t>(ring_->p());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (const auto& t : rules_[i].rhs.terms()) {
      for (std::size_t v = 0; v < ring_->size(); ++v) {
        if (t.mono.exps[v] == 0 || !rule_of_var_[v]) continue;
        auto j = *rule_of_var_[v];
        if (j > i) {
          throw DomainError("rewrite system not triangular: rule for '" +
                            ring_->name(rules_[i].var) + "' mentions later rule variable '" +
                            ring_->name(v) + "'");
        }
        if (j == i && t.mono.exps[v] >= p) {
          throw DomainError("rewrite rule for '" + ring_->name(v) +
                            "' does not lower its own exponent");
        }
      }
    }
  }
}

std::optional<std::size_t> RewriteSystem::rule_for(std::size_t var) const noexcept {
  if (var >= rule_of_var_.size()) return std::nullopt;
  return rule_of_var_[var];
}

bool RewriteSystem::is_normal(const MPoly& q) const noexcept {
  const auto p = static_cast<std::int32_t>(ring_->p());
  for (const auto& t : q.terms()) {
    for (const auto& r : rules_) {
      if (t.mono.exps[r.var] >= p) return false;
    }
  }
  return true;
}

namespace {

struct Normalizer {
  const RingPtr& ring;
  const std::vector<RewriteSystem::Rule>& rules;
  PowerCache cache;

  std::int32_t p() const { return static_cast<std::int32_t>(ring->p()); }

  // Normal form of var(rule r)^e.
  const MPoly& power(std::size_t r, std::int32_t e) {
    auto key = std::make_pair(r, e);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    MPoly value(ring);
    if (e == p()) {
      value = run(rules[r].rhs.terms());
    } else {
      auto prev = power(r, e - 1) * MPoly::variable(ring, rules[r].var);
      value = run(prev.terms());
    }
    return cache.emplace(key, std::move(value)).first->second;
  }

  MPoly run(std::span<const MPoly::Term> input) {
    std::vector<MPoly::Term> terms(input.begin(), input.end());
    const auto q = static_cast<std::uint64_t>(ring->p());
    for (std::size_t r = rules.size(); r-- > 0;) {
      const auto var = rules[r].var;
      bool touched = false;
      std::vector<MPoly::Term> next;
      next.reserve(terms.size());
      for (const auto& t : terms) {
        const auto e = t.mono.exps[var];
        if (e < p()) {
          next.push_back(t);
          continue;
        }
        touched = true;
        auto rest = t.mono;
        rest.exps[var] = 0;
        const auto& pw = power(r, e);
        for (const auto& s : pw.terms()) {
          next.push_back({rest * s.mono,
                          static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.coeff) *
                                                     s.coeff % q)});
        }
      }
      terms = touched ? canonicalize(ring->p(), std::move(next)) : std::move(next);
    }
    return MPoly::from_terms(ring, std::move(terms));
  }
};

}  // namespace

MPoly RewriteSystem::normal_form(const MPoly& q) const {
  if (!(*q.ring() == *ring_)) throw DomainError("normal form in a foreign ring");
  if (rules_.empty() || is_normal(q)) return q;
  Normalizer n{ring_, rules_, {}};
  return n.run(q.terms());
}

MPoly RewriteSystem::reduce_step(const MPoly& q, std::size_t term, std::size_t rule) const {
  const auto& t = q.terms()[term];
  const auto var = rules_.at(rule).var;
  if (t.mono.exps[var] < static_cast<std::int32_t>(ring_->p())) {
    throw DomainError("rule does not apply to the chosen term");
  }
  auto rest = t.mono;
  rest.exps[var] -= static_cast<std::int32_t>(ring_->p());
  auto single = MPoly::from_terms(ring_, {t});
  auto cofactor = MPoly::from_terms(ring_, {{rest, t.coeff}});
  return q - single + cofactor * rules_[rule].rhs;
}

RewriteSystem RewriteSystem::combined(const RewriteSystem& other) const {
  auto rules = rules_;
  for (const auto& r : other.rules_) {
    rules.push_back({ring_->require(other.ring_->name(r.var)), r.rhs.embed(ring_)});
  }
  return RewriteSystem(ring_, std::move(rules));
}

MPoly substitute(const MPoly& q, std::span<const MPoly> images, const RingPtr& target,
                 const RewriteSystem* rs) {
  const auto n = q.ring()->size();
  if (images.size() < n) throw DomainError("substitution misses variables");
  auto norm = [&](MPoly x) { return rs ? rs->normal_form(x) : x; };
  std::vector<std::map<std::int32_t, MPoly>> powers(n);
  auto power = [&](std::size_t v, std::int32_t e) -> const MPoly& {
    auto& cache = powers[v];
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    if (e < 0) throw DomainError("negative exponent in substitution");
    std::int32_t have = 0;
    MPoly acc = MPoly::constant(target, 1);
    if (!cache.empty()) {
      auto it = cache.lower_bound(e);
      if (it != cache.begin()) {
        --it;
        have = it->first;
        acc = it->second;
      }
    }
    for (std::int32_t k = have + 1; k <= e; ++k) {
      acc = norm(acc * images[v]);
      cache.emplace(k, acc);
    }
    return cache.at(e);
  };

  std::vector<MPoly::Term> out;
  for (const auto& t : q.terms()) {
    auto term = MPoly::constant(target, BaseElement::pi_power(q.p(), t.mono.pi, t.coeff));
    for (std::size_t v = 0; v < n && !term.is_zero(); ++v) {
      if (t.mono.exps[v] != 0) term = norm(term * power(v, t.mono.exps[v]));
    }
    out.insert(out.end(), term.terms().begin(), term.terms().end());
  }
  return norm(MPoly::from_terms(target, std::move(out)));
}

}  // namespace effmodel::ring
