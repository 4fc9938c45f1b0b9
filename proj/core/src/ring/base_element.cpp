#include "effmodel/ring/base_element.hpp"

#include <algorithm>
#include <sstream>

#include "effmodel/error.hpp"
#include "effmodel/ring/prime_field.hpp"

namespace effmodel::ring {

namespace {

std::uint32_t reduce(std::uint32_t p, std::int64_t c) {
  auto r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

std::uint32_t BaseElement::bind(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DomainError("mixing elements of different characteristic");
}

BaseElement BaseElement::zero(std::uint32_t p) { return BaseElement(p, {}); }

BaseElement BaseElement::constant(std::uint32_t p, std::int64_t c) {
  return pi_power(p, 0, c);
}

BaseElement BaseElement::pi_power(std::uint32_t p, std::int32_t e, std::int64_t c) {
  auto r = reduce(p, c);
  if (r == 0) return zero(p);
  return BaseElement(p, {Term{e, r}});
}

BaseElement BaseElement::from_terms(std::uint32_t p, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    auto c = t.coeff % p;
    if (!merged.empty() && merged.back().exp == t.exp) {
      merged.back().coeff = (merged.back().coeff + c) % p;
    } else {
      merged.push_back({t.exp, c});
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return BaseElement(p, std::move(merged));
}

bool BaseElement::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

std::optional<std::int32_t> BaseElement::valuation() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp;
}

bool BaseElement::is_integral() const noexcept {
  return terms_.empty() || terms_.front().exp >= 0;
}

bool BaseElement::is_unit() const noexcept {
  return !terms_.empty() && terms_.front().exp == 0;
}

std::uint32_t BaseElement::coefficient(std::int32_t e) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, std::int32_t x) { return t.exp < x; });
  return (it != terms_.end() && it->exp == e) ? it->coeff : 0;
}

std::uint32_t BaseElement::residue() const {
  if (!is_integral()) throw DomainError("residue of non-integral element " + to_string());
  return coefficient(0);
}

BaseElement BaseElement::shifted(std::int32_t e) const {
  auto out = *this;
  for (auto& t : out.terms_) t.exp += e;
  return out;
}

BaseElement BaseElement::scaled(std::int64_t c) const {
  if (p_ == 0) return *this;
  auto r = reduce(p_, c);
  if (r == 0) return zero(p_);
  PrimeField f(p_);
  auto out = *this;
  for (auto& t : out.terms_) t.coeff = f.mul(t.coeff, r);
  return out;
}

BaseElement BaseElement::truncated_below(std::int32_t e) const {
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    if (t.exp < e) kept.push_back(t);
  }
  return BaseElement(p_, std::move(kept));
}

BaseElement BaseElement::part_from(std::int32_t e) const {
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    if (t.exp >= e) kept.push_back(t);
  }
  return BaseElement(p_, std::move(kept));
}

BaseElement BaseElement::divided_by_monomial(const BaseElement& m) const {
  if (!m.is_monomial()) {
    throw DomainError("division by non-monomial " + m.to_string());
  }
  auto p = bind(p_, m.p_);
  PrimeField f(p);
  auto inv = f.inv(m.terms_[0].coeff);
  auto out = *this;
  out.p_ = p;
  for (auto& t : out.terms_) {
    t.exp -= m.terms_[0].exp;
    t.coeff = f.mul(t.coeff, inv);
  }
  return out;
}

BaseElement BaseElement::pow(std::uint64_t n) const {
  if (p_ == 0) {
    if (n == 0) throw DomainError("zeroth power of an unbound zero");
    return *this;
  }
  auto result = constant(p_, 1);
  auto base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

BaseElement BaseElement::operator-() const {
  auto out = *this;
  for (auto& t : out.terms_) t.coeff = t.coeff == 0 ? 0 : p_ - t.coeff;
  return out;
}

BaseElement& BaseElement::operator+=(const BaseElement& o) {
  p_ = bind(p_, o.p_);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      auto c = (a->coeff + b->coeff) % p_;
      if (c != 0) out.push_back({a->exp, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

BaseElement& BaseElement::operator-=(const BaseElement& o) { return *this += -o; }

BaseElement operator*(const BaseElement& a, const BaseElement& b) {
  auto p = BaseElement::bind(a.p_, b.p_);
  if (a.terms_.empty() || b.terms_.empty()) return BaseElement(p, {});
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    auto c = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.terms_[0].coeff) * b.terms_[0].coeff % p);
    return BaseElement(p, {{a.terms_[0].exp + b.terms_[0].exp, c}});
  }
  std::vector<BaseElement::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      prod.push_back({x.exp + y.exp, static_cast<std::uint32_t>(
                                         static_cast<std::uint64_t>(x.coeff) * y.coeff % p)});
    }
  }
  return BaseElement::from_terms(p, std::move(prod));
}

std::string BaseElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.exp == 0) {
      os << t.coeff;
      continue;
    }
    if (t.coeff != 1) os << t.coeff << '*';
    os << "pi";
    if (t.exp != 1) os << '^' << t.exp;
  }
  return os.str();
}

}  // namespace effmodel::ring
