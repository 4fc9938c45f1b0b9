#include "effmodel/ring/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "effmodel/error.hpp"
#include "effmodel/ring/prime_field.hpp"

namespace effmodel::ring {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

std::shared_ptr<const Ring> Ring::make(std::uint32_t p, std::vector<std::string> names) {
  PrimeField check(p);
  if (names.size() > kMaxVars) {
    throw DomainError("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw UsageError("invalid variable name '" + n + "'");
    if (n == kPiName) throw UsageError("'pi' is reserved for the uniformizer");
    if (!seen.insert(n).second) throw UsageError("duplicate variable '" + n + "'");
  }
  return std::shared_ptr<const Ring>(new Ring(p, std::move(names)));
}

std::optional<std::size_t> Ring::index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  if (auto i = index(name)) return *i;
  throw UsageError("unknown variable '" + std::string(name) + "'");
}

bool Monomial::is_constant() const noexcept {
  return std::all_of(exps.begin(), exps.end(), [](std::int32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps[i] = exps[i] + o.exps[i];
  m.pi = pi + o.pi;
  return m;
}

std::vector<MPoly::Term> canonicalize(std::uint32_t p, std::vector<MPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MPoly::Term& a, const MPoly::Term& b) { return a.mono < b.mono; });
  std::vector<MPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = (out.back().coeff + t.coeff) % p;
    } else {
      t.coeff %= p;
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const MPoly::Term& t) { return t.coeff == 0; });
  return out;
}

MPoly::MPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial without ring");
}

MPoly MPoly::constant(RingPtr ring, const BaseElement& c) {
  MPoly out(std::move(ring));
  if (c.p() != 0 && c.p() != out.p()) throw DomainError("constant of wrong characteristic");
  for (const auto& t : c.terms()) {
    Monomial m;
    m.pi = t.exp;
    out.terms_.push_back({m, t.coeff});
  }
  return out;
}

MPoly MPoly::constant(RingPtr ring, std::int64_t c) {
  auto p = ring->p();
  return constant(ring, BaseElement::constant(p, c));
}

MPoly MPoly::variable(RingPtr ring, std::string_view name) {
  auto i = ring->require(name);
  return variable(std::move(ring), i);
}

MPoly MPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw DomainError("variable index out of range");
  MPoly out(std::move(ring));
  Monomial m;
  m.exps[index] = 1;
  out.terms_.push_back({m, 1});
  return out;
}

MPoly MPoly::monomial(RingPtr ring, std::span<const std::int32_t> exps,
                      const BaseElement& coeff) {
  if (exps.size() > ring->size()) throw DomainError("exponent vector longer than ring");
  MPoly out(std::move(ring));
  Monomial base;
  std::copy(exps.begin(), exps.end(), base.exps.begin());
  for (const auto& t : coeff.terms()) {
    auto m = base;
    m.pi = t.exp;
    out.terms_.push_back({m, t.coeff});
  }
  return out;
}

MPoly MPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  MPoly out(std::move(ring));
  for (const auto& t : terms) {
    for (std::size_t i = out.ring_->size(); i < kMaxVars; ++i) {
      if (t.mono.exps[i] != 0) throw DomainError("term uses undeclared variable slot");
    }
  }
  out.terms_ = canonicalize(out.p(), std::move(terms));
  return out;
}

bool MPoly::is_constant() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.mono.is_constant(); });
}

BaseElement MPoly::as_base() const {
  if (!is_constant()) throw DomainError("expected a constant, got " + to_string());
  std::vector<BaseElement::Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.mono.pi, t.coeff});
  return BaseElement::from_terms(p(), std::move(ts));
}

BaseElement MPoly::coefficient(std::span<const std::int32_t> exps) const {
  Monomial key;
  std::copy(exps.begin(), exps.end(), key.exps.begin());
  key.pi = std::numeric_limits<std::int32_t>::min();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const Monomial& k) { return t.mono < k; });
  std::vector<BaseElement::Term> ts;
  for (; it != terms_.end() && it->mono.exps == key.exps; ++it) {
    ts.push_back({it->mono.pi, it->coeff});
  }
  return BaseElement::from_terms(p(), std::move(ts));
}

std::vector<std::pair<std::vector<std::int32_t>, BaseElement>> MPoly::grouped() const {
  std::vector<std::pair<std::vector<std::int32_t>, BaseElement>> out;
  std::size_t i = 0;
  while (i < terms_.size()) {
    std::size_t j = i;
    std::vector<BaseElement::Term> ts;
    while (j < terms_.size() && terms_[j].mono.same_vars(terms_[i].mono)) {
      ts.push_back({terms_[j].mono.pi, terms_[j].coeff});
      ++j;
    }
    std::vector<std::int32_t> key(terms_[i].mono.exps.begin(),
                                  terms_[i].mono.exps.begin() + ring_->size());
    out.emplace_back(std::move(key), BaseElement::from_terms(p(), std::move(ts)));
    i = j;
  }
  return out;
}

std::optional<std::int32_t> MPoly::valuation() const noexcept {
  if (terms_.empty()) return std::nullopt;
  std::int32_t v = terms_.front().mono.pi;
  for (const auto& t : terms_) v = std::min(v, t.mono.pi);
  return v;
}

bool MPoly::is_integral() const noexcept {
  auto v = valuation();
  return !v || *v >= 0;
}

MPoly MPoly::reduce_mod_pi() const {
  if (!is_integral()) {
    throw DomainError("reduction mod pi of non-integral polynomial " + to_string());
  }
  MPoly out(ring_);
  for (const auto& t : terms_) {
    if (t.mono.pi == 0) out.terms_.push_back(t);
  }
  return out;
}

std::int32_t MPoly::degree_in(std::size_t var) const noexcept {
  std::int32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exps[var]);
  return d;
}

MPoly MPoly::scaled(const BaseElement& c) const {
  if (c.p() != 0 && c.p() != p()) throw DomainError("scalar of wrong characteristic");
  if (c.is_one()) return *this;
  return *this * constant(ring_, c);
}

MPoly MPoly::shifted(std::int32_t e) const {
  auto out = *this;
  for (auto& t : out.terms_) t.mono.pi += e;
  return out;
}

MPoly MPoly::pow(std::uint64_t n) const {
  auto result = constant(ring_, 1);
  auto base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

MPoly MPoly::operator-() const {
  auto out = *this;
  auto q = p();
  for (auto& t : out.terms_) t.coeff = q - t.coeff;
  return out;
}

void MPoly::check_same_ring(const MPoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
    throw DomainError("polynomials from different rings");
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same_ring(o);
  if (o.terms_.empty()) return *this;
  auto q = p();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      auto c = (a->coeff + b->coeff) % q;
      if (c != 0) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_ring(b);
  MPoly out(a.ring_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  auto q = static_cast<std::uint64_t>(a.p());
  std::vector<MPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      prod.push_back({x.mono * y.mono, static_cast<std::uint32_t>(
                                           static_cast<std::uint64_t>(x.coeff) * y.coeff % q)});
    }
  }
  out.terms_ = canonicalize(a.p(), std::move(prod));
  return out;
}

MPoly MPoly::embed(RingPtr target) const { return renamed(std::move(target), {}); }

MPoly MPoly::renamed(RingPtr target, const std::map<std::string, std::string>& names) const {
  if (target->p() != p()) throw DomainError("embedding into ring of different characteristic");
  std::vector<std::optional<std::size_t>> slot(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto name = ring_->name(i);
    if (auto it = names.find(name); it != names.end()) name = it->second;
    slot[i] = target->index(name);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n{Monomial{}, t.coeff};
    n.mono.pi = t.mono.pi;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (!slot[i]) {
        throw DomainError("variable '" + ring_->name(i) + "' missing from target ring");
      }
      n.mono.exps[*slot[i]] += t.mono.exps[i];
    }
    out.push_back(n);
  }
  return from_terms(std::move(target), std::move(out));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Walk variable groups from the top; inside a group pi ascends.
  std::size_t end = terms_.size();
  while (end > 0) {
    std::size_t begin = end - 1;
    while (begin > 0 && terms_[begin - 1].mono.same_vars(terms_[end - 1].mono)) --begin;
    for (std::size_t k = begin; k < end; ++k) {
      const auto& t = terms_[k];
      if (!first) os << " + ";
      first = false;
      std::vector<std::string> factors;
      bool constant = t.mono.is_constant() && t.mono.pi == 0;
      if (t.coeff != 1 || constant) factors.push_back(std::to_string(t.coeff));
      if (t.mono.pi != 0) {
        factors.push_back(t.mono.pi == 1 ? std::string("pi")
                                         : "pi^" + std::to_string(t.mono.pi));
      }
      for (std::size_t i = 0; i < ring_->size(); ++i) {
        auto e = t.mono.exps[i];
        if (e == 0) continue;
        factors.push_back(e == 1 ? ring_->name(i) : ring_->name(i) + "^" + std::to_string(e));
      }
      for (std::size_t f = 0; f < factors.size(); ++f) {
        if (f != 0) os << '*';
        os << factors[f];
      }
    }
    end = begin;
  }
  return os.str();
}

}  // namespace effmodel::ring
