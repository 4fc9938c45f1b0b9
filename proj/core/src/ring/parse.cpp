#include "effmodel/ring/parse.hpp"

#include <algorithm>
#include <cctype>

#include "effmodel/error.hpp"

namespace effmodel::ring {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  MPoly parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("malformed expression '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    auto t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly term() {
    auto acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MPoly factor() {
    auto base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected exponent");
    }
    std::int64_t e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > (1LL << 30)) fail("exponent too large");
    }
    if (!negative) return base.pow(static_cast<std::uint64_t>(e));
    if (!base.is_constant() || base.size() != 1) {
      fail("negative exponent on something other than a pi-monomial");
    }
    auto b = base.as_base();
    auto inv = BaseElement::constant(ring_->p(), 1).divided_by_monomial(b);
    return MPoly::constant(ring_, inv.pow(static_cast<std::uint64_t>(e)));
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      const auto p = ring_->p();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
      }
      return MPoly::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      auto name = text_.substr(start, pos_ - start);
      if (name == kPiName) return MPoly::constant(ring_, BaseElement::pi_power(ring_->p(), 1));
      auto idx = ring_->index(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      return MPoly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

BaseElement parse_base(std::string_view text, std::uint32_t p) {
  auto ring = Ring::make(p, {});
  return parse_poly(text, ring).as_base();
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      auto start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      std::string name(text.substr(start, i - start));
      if (name != kPiName && std::find(out.begin(), out.end(), name) == out.end()) {
        out.push_back(std::move(name));
      }
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace effmodel::ring
