#include "effmodel/hopf/classify.hpp"

#include "effmodel/error.hpp"
#include "effmodel/witt/witt2.hpp"

namespace effmodel::hopf {

namespace {

const char* tag_name(FiberClass::Tag t) {
  switch (t) {
    case FiberClass::Tag::EtaleZp: return "EtaleZp";
    case FiberClass::Tag::AlphaP: return "AlphaP";
    case FiberClass::Tag::KernelForm: return "KernelForm";
    case FiberClass::Tag::Product: return "Product";
    case FiberClass::Tag::Unknown: return "Unknown";
  }
  return "Unknown";
}

// Delta(x_i) - xL_i - xR_i.
MPoly excess(const HopfPresentation& h, std::size_t i) {
  return h.comul()[i] - h.tensor_generator(h.doubled(), "L", i) -
         h.tensor_generator(h.doubled(), "R", i);
}

// For two generators: the lambda with Delta(u2) = uL2 + uR2 + lambda c(uL1, uR1)
// and Delta(u1) primitive, if any.
std::optional<BaseElement> witt_twist(const HopfPresentation& h) {
  if (h.size() != 2 || !excess(h, 0).is_zero()) return std::nullopt;
  const auto p = h.p();
  auto cross = excess(h, 1);
  auto l1 = h.tensor_generator(h.doubled(), "L", 0);
  auto r1 = h.tensor_generator(h.doubled(), "R", 0);
  // <p,1> = 1, so lambda is the coefficient of uL1 uR1^(p-1).
  auto lambda =
      cross.coefficient(std::vector<std::int32_t>{1, 0, static_cast<std::int32_t>(p - 1), 0});
  if (cross != lambda * witt::cocycle(l1, r1)) return std::nullopt;
  return lambda;
}

}  // namespace

std::string FiberClass::to_string() const {
  switch (tag) {
    case Tag::KernelForm:
      return "KernelForm(" + std::to_string(lambda) + "," + std::to_string(nu) + ")";
    case Tag::Product: {
      std::string s = "Product(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].to_string();
      return s + ")";
    }
    default:
      return tag_name(tag);
  }
}

FiberClass classify_fiber(const HopfPresentation& hk) {
  auto over_k = [](const BaseElement& b) {
    return b.is_zero() || (b.is_monomial() && b.terms()[0].exp == 0);
  };
  for (const auto& c : hk.relation_constants()) {
    if (!over_k(c)) throw DomainError("classify_fiber expects a presentation over the residue field");
  }
  for (const auto& d : hk.comul()) {
    for (const auto& t : d.terms()) {
      if (t.mono.pi != 0) throw DomainError("classify_fiber expects a presentation over the residue field");
    }
  }
  using Tag = FiberClass::Tag;
  auto piece = [&](std::size_t i) {
    return FiberClass{hk.relation_constants()[i].is_zero() ? Tag::AlphaP : Tag::EtaleZp, 0, 0, {}};
  };
  if (hk.size() == 1) {
    if (!excess(hk, 0).is_zero()) return {};
    return piece(0);
  }
  auto lambda = witt_twist(hk);
  if (!lambda) return {};
  if (lambda->is_zero()) return {Tag::Product, 0, 0, {piece(0), piece(1)}};
  const auto p = hk.p();
  if (p == 2) return {};
  const auto& c = hk.relation_constants();
  if (c[1] != c[0].pow(p) * lambda->pow(p - 1)) return {};
  return {Tag::KernelForm, lambda->residue(), c[0].residue(), {}};
}

std::optional<KernelParams> identify_kernel_form(const HopfPresentation& h) {
  const auto p = h.p();
  if (p == 2) throw DomainError("kernel form identification unsupported for p=2");
  auto lambda = witt_twist(h);
  if (!lambda) return std::nullopt;
  const auto& c = h.relation_constants();
  if (c[1] != c[0].pow(p) * lambda->pow(p - 1)) return std::nullopt;
  return KernelParams{*lambda, c[0]};
}

}  // namespace effmodel::hopf
