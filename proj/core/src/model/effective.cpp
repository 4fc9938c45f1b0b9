#include "effmodel/model/effective.hpp"

#include <map>

#include "effmodel/error.hpp"
#include "effmodel/witt/witt2.hpp"

namespace effmodel::model {

namespace {

std::int32_t i32(std::int64_t v) { return static_cast<std::int32_t>(v); }

std::string digits_of(const std::string& name) {
  auto cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  return name.substr(cut);
}

}  // namespace

std::vector<std::string> CoverBuild::change_of_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    out.push_back(model.fiber()[i] + " = " + kside.variable(i).shifted(i32(shifts[i])).to_string());
  }
  return out;
}

CoverBuild build_torsor_cover(std::uint32_t p, std::int64_t m1, std::int64_t m2,
                              const std::vector<std::int64_t>& shifts) {
  auto kside = torsor_equations(p, m1, m2);
  auto model = substitute_model(kside, shifts);
  if (!model.integral_model()) {
    throw VerificationFailure("change of variables does not give an integral model",
                              model.equations()[0] + "; " + model.equations()[1]);
  }
  if (!recovers_kside(model, kside, shifts)) {
    throw VerificationFailure("model equations do not give back the torsor equations");
  }

  auto group = hopf::make_zp2(p);
  auto one = BaseElement::constant(p, 1);
  // Translation by (u1, u2) in Witt coordinates, transported to Z = pi^s T.
  auto ring = ring::Ring::make(p, {"Z1", "Z2", "w", "u1", "u2"});
  witt::WittPair t{MPoly::variable(ring, "Z1").shifted(i32(-shifts[0])),
                   MPoly::variable(ring, "Z2").shifted(i32(-shifts[1]))};
  witt::WittPair u{MPoly::variable(ring, "u1"), MPoly::variable(ring, "u2")};
  auto moved = witt::w2_add(one, t, u);
  std::vector<MPoly> images{moved.first.shifted(i32(shifts[0])),
                            moved.second.shifted(i32(shifts[1]))};
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i].is_integral()) {
      throw VerificationFailure("the group action does not extend to the model",
                                model.fiber()[i] + " -> " + images[i].to_string());
    }
  }
  Coaction action(group, model, images);

  // Back on the K-side the images must be Witt translation.
  auto kring = ring::Ring::make(p, {"T1", "T2", "w", "u1", "u2"});
  std::vector<MPoly> back{MPoly::variable(kring, "T1").shifted(i32(shifts[0])),
                          MPoly::variable(kring, "T2").shifted(i32(shifts[1])),
                          MPoly::variable(kring, "w"), MPoly::variable(kring, "u1"),
                          MPoly::variable(kring, "u2")};
  witt::WittPair kt{MPoly::variable(kring, "T1"), MPoly::variable(kring, "T2")};
  witt::WittPair ku{MPoly::variable(kring, "u1"), MPoly::variable(kring, "u2")};
  auto translation = witt::w2_add(one, kt, ku);
  for (std::size_t i = 0; i < 2; ++i) {
    // Unnormalized images: the translation formula holds before reduction.
    auto k = ring::substitute(images[i], back, kring).shifted(i32(-shifts[i]));
    auto expected = i == 0 ? translation.first : translation.second;
    if (k != expected) {
      throw VerificationFailure("action is not Witt translation on the generic fiber",
                                (k - expected).to_string());
    }
  }
  if (auto r = check_coaction(action); !r) {
    throw VerificationFailure("coaction axiom fails at " + r.generator, r.residual);
  }
  return {p, std::move(kside), shifts, std::move(model), std::move(action)};
}

std::vector<MPoly> expected_model_rhs(const ConductorSpec& spec, const RingPtr& ring) {
  const auto p = spec.p;
  const std::int64_t pp = p;
  auto z1 = MPoly::variable(ring, "Z1"), z2 = MPoly::variable(ring, "Z2"),
       w = MPoly::variable(ring, "w");
  if (spec.regime == Regime::A) {
    return {z1 + w, z2.shifted(i32(pp - 1)) + w - witt::cocycle(z1.pow(p), -z1).shifted(i32(pp))};
  }
  const auto n1 = spec.n1, mt = spec.m1_tilde;
  MPoly sum(ring);
  for (std::uint32_t k = 1; k < p; ++k) {
    auto term = z1.pow(static_cast<std::uint64_t>(p) * k) * (-z1).pow(p - k);
    sum += term.scaled(BaseElement::pi_power(p, i32(pp * n1 * (pp - 1) * (pp - 1 - k)),
                                             witt::witt_binom(p, k)));
  }
  return {z1.shifted(i32((pp - 1) * pp * n1)) + w,
          z2.shifted(i32((pp - 1) * mt)) + w.shifted(i32(pp * mt)) - sum};
}

CoverBuild build_cover(const ConductorSpec& spec) {
  std::vector<std::int64_t> shifts =
      spec.regime == Regime::A
          ? std::vector<std::int64_t>{0, 1}
          : std::vector<std::int64_t>{static_cast<std::int64_t>(spec.p) * spec.n1, spec.m1_tilde};
  auto build = build_torsor_cover(spec.p, spec.m1, spec.m2, shifts);
  auto expected = expected_model_rhs(spec, build.model.ring());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (build.model.rhs()[i] != expected[i]) {
      throw VerificationFailure("model equation for " + build.model.fiber()[i] +
                                    " differs from the closed form of regime " +
                                    regime_name(spec.regime),
                                (build.model.rhs()[i] - expected[i]).to_string());
    }
  }
  return build;
}

namespace {

using Basis = std::vector<std::vector<std::int32_t>>;

ring::Row to_row(const HopfPresentation& h, const std::map<std::vector<std::int32_t>, std::size_t>& index,
                 const MPoly& x) {
  ring::Row row(index.size(), BaseElement::zero(h.p()));
  for (const auto& t : x.terms()) {
    std::vector<std::int32_t> key(t.mono.exps.begin(), t.mono.exps.begin() + h.size());
    auto it = index.find(key);
    if (it == index.end()) throw DomainError("element not in normal form: " + x.to_string());
    row[it->second] += BaseElement::pi_power(h.p(), t.mono.pi, t.coeff);
  }
  return row;
}

MPoly from_row(const HopfPresentation& h, const Basis& basis, const ring::Row& row) {
  MPoly out(h.ring());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!row[k].is_zero()) out += MPoly::monomial(h.ring(), basis[k], row[k]);
  }
  return out;
}

}  // namespace

SubHopf generated_sub_hopf(const HopfPresentation& ambient, const std::vector<MPoly>& elements,
                           const std::string& stem) {
  const auto p = ambient.p();
  const auto n = ambient.size();
  const auto basis = ambient.monomial_basis();
  std::map<std::vector<std::int32_t>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;

  std::vector<ring::Row> rows{to_row(ambient, index, MPoly::constant(ambient.ring(), 1))};
  for (const auto& e : elements) {
    rows.push_back(to_row(ambient, index, ambient.relations().normal_form(e.embed(ambient.ring()))));
  }
  auto lattice = ring::Lattice::reduce(basis.size(), p, rows);

  const auto cap = basis.size();
  bool closed = false;
  for (std::size_t round = 0; round < cap && !closed; ++round) {
    std::vector<MPoly> polys;
    for (const auto& r : lattice.rows()) polys.push_back(from_row(ambient, basis, r));
    auto next_rows = lattice.rows();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      for (std::size_t j = i; j < polys.size(); ++j) {
        next_rows.push_back(to_row(ambient, index, ambient.relations().normal_form(polys[i] * polys[j])));
      }
    }
    auto next = ring::Lattice::reduce(basis.size(), p, std::move(next_rows));
    closed = next == lattice;
    lattice = std::move(next);
  }
  if (!closed) {
    throw VerificationFailure("multiplicative saturation did not close within " +
                              std::to_string(cap) + " rounds");
  }
  if (lattice.rank() != basis.size()) {
    throw VerificationFailure("coefficient subalgebra has rank " + std::to_string(lattice.rank()) +
                              " < " + std::to_string(basis.size()) +
                              "; the action is not faithful on the generic fiber");
  }

  const auto bound = static_cast<std::int32_t>(lattice.pivot_valuation_sum());
  std::vector<std::int32_t> exps(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::int32_t e = 0; e <= bound && exps[i] < 0; ++e) {
      if (lattice.contains(to_row(ambient, index, ambient.generator(i).shifted(e)))) exps[i] = e;
    }
    if (exps[i] < 0) throw VerificationFailure("no multiple of " + ambient.generators()[i] + " in the subalgebra");
  }
  std::vector<ring::Row> monomial_rows;
  for (const auto& a : basis) {
    std::int32_t v = 0;
    for (std::size_t i = 0; i < n; ++i) v += exps[i] * a[i];
    monomial_rows.push_back(to_row(ambient, index, MPoly::monomial(ambient.ring(), a, BaseElement::pi_power(p, v))));
  }
  if (!(ring::Lattice::reduce(basis.size(), p, monomial_rows) == lattice)) {
    throw VerificationFailure("coefficient subalgebra is not spanned by monomials in scaled generators");
  }

  std::vector<std::string> names;
  for (const auto& g : ambient.generators()) names.push_back(stem + digits_of(g));
  std::vector<std::string> doubled_names;
  for (const char* side : {"L", "R"}) {
    for (const auto& nm : names) doubled_names.push_back(hopf::tensor_name(nm, side));
  }
  auto doubled = ring::Ring::make(p, doubled_names);
  // uL_j -> pi^-e_j vL_j, uR_j -> pi^-e_j vR_j
  std::vector<MPoly> down;
  for (const char* side : {"L", "R"}) {
    for (std::size_t j = 0; j < n; ++j) {
      down.push_back(MPoly::variable(doubled, hopf::tensor_name(names[j], side)).shifted(-exps[j]));
    }
  }
  std::vector<BaseElement> constants, counit;
  std::vector<MPoly> comul, domination;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = ring::substitute(ambient.comul()[i].shifted(exps[i]), down, doubled);
    if (!d.is_integral()) {
      throw VerificationFailure("coefficient subalgebra is not a sub-Hopf-algebra",
                                "Delta(" + names[i] + ") = " + d.to_string());
    }
    comul.push_back(std::move(d));
    constants.push_back(ambient.relation_constants()[i].shifted(static_cast<std::int32_t>(p - 1) * exps[i]));
    counit.push_back(ambient.counit()[i].shifted(exps[i]));
    domination.push_back(ambient.generator(i).shifted(exps[i]));
  }
  HopfPresentation group(p, names, constants, comul, counit);
  auto axioms = hopf::check_axioms(group);
  for (const auto* c : {&axioms.coassoc, &axioms.counit, &axioms.relations, &axioms.antipode}) {
    if (!c->ok) {
      throw VerificationFailure("induced presentation fails a Hopf axiom at " + c->generator,
                                c->residual);
    }
  }
  return {std::move(group), std::move(domination), std::move(exps), std::move(lattice)};
}

EffectiveModel effective_model(const Coaction& c) {
  auto sub = generated_sub_hopf(c.group(), coaction_coefficients(c));
  // Express the action through v_i = pi^(e_i) u_i.
  std::vector<MPoly> up;
  for (std::size_t i = 0; i < sub.group.size(); ++i) {
    up.push_back(sub.group.generator(i).shifted(-sub.exponents[i]));
  }
  auto coaction = rewrite_group(c, sub.group, up);
  if (!coaction.is_integral()) {
    throw VerificationFailure("action of the effective model is not integral",
                              coaction.describe()[0] + "; " + coaction.describe().back());
  }
  if (auto r = check_coaction(coaction); !r) {
    throw VerificationFailure("effective model coaction fails at " + r.generator, r.residual);
  }
  return {std::move(sub), std::move(coaction)};
}

CheckResult check_domination(const Coaction& c, const Coaction& cg,
                             const std::vector<MPoly>& domination) {
  auto pulled = rewrite_group(cg, c.group(), domination);
  for (std::size_t i = 0; i < c.images().size(); ++i) {
    auto got = pulled.images()[i].embed(c.ring());
    if (got != c.images()[i]) {
      return {false, c.cover().fiber()[i], (got - c.images()[i]).to_string()};
    }
  }
  return {};
}

SubgroupModel subgroup_effective_model(const Coaction& c, const SubHopf& effective,
                                       const std::vector<std::size_t>& killed) {
  const auto& g = c.group();
  auto h = hopf::quotient(g, killed);
  std::vector<MPoly> restrict_images;
  for (std::size_t j = 0; j < g.size(); ++j) {
    bool dead = std::find(killed.begin(), killed.end(), j) != killed.end();
    restrict_images.push_back(dead ? MPoly(h.ring()) : MPoly::variable(h.ring(), g.generators()[j]));
  }
  std::vector<MPoly> images;
  for (const auto& d : effective.domination) {
    auto x = h.relations().normal_form(ring::substitute(d, restrict_images, h.ring()));
    if (!x.is_zero()) images.push_back(std::move(x));
  }
  auto sub = generated_sub_hopf(h, images);
  bool connected = true;
  for (const auto& cst : sub.group.relation_constants()) {
    auto v = cst.valuation();
    connected = connected && (!v || *v > 0);
  }
  return {std::move(sub.group), std::move(sub.domination), connected};
}

}  // namespace effmodel::model
