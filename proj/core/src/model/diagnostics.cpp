#include "effmodel/model/diagnostics.hpp"

#include <cctype>
#include <map>

#include "effmodel/error.hpp"
#include "effmodel/ring/frac_linalg.hpp"

namespace effmodel::model {

std::vector<std::string> Stabilizer::ideal_strings() const {
  std::vector<std::string> out;
  for (const auto& g : ideal) out.push_back(g.to_string());
  return out;
}

namespace {

std::string lowered(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

using ring::Monomial;
using Exps = std::vector<std::int32_t>;

Exps slice(const Monomial& m, std::size_t from, std::size_t to) {
  return Exps(m.exps.begin() + static_cast<std::ptrdiff_t>(from),
              m.exps.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

Stabilizer stabilizer(const Coaction& ck) {
  const auto& g = ck.group();
  const auto& cover = ck.cover();
  const auto p = g.p();
  const auto n = g.size();
  // Ring: group generators, then z_i, then w.
  std::vector<std::string> names = g.generators();
  std::vector<std::string> point_names;
  for (const auto& f : cover.fiber()) point_names.push_back(lowered(f));
  auto point = cover.renamed(point_names);
  for (const auto& nm : point.ring()->names()) names.push_back(nm);
  auto r = ring::Ring::make(p, names);
  std::vector<ring::RewriteSystem::Rule> rules;
  for (std::size_t i = 0; i < n; ++i) {
    rules.push_back({i, MPoly::variable(r, i).scaled(g.relation_constants()[i])});
  }
  for (std::size_t i = 0; i < point.size(); ++i) {
    rules.push_back({r->require(point_names[i]), point.rhs()[i].embed(r)});
  }
  ring::RewriteSystem rs(r, std::move(rules));

  std::map<std::string, std::string> to_point;
  for (std::size_t i = 0; i < cover.size(); ++i) to_point[cover.fiber()[i]] = point_names[i];
  Stabilizer out{{}, 0};
  for (std::size_t i = 0; i < ck.images().size(); ++i) {
    auto eq = rs.normal_form(ck.images()[i].renamed(r, to_point) - MPoly::variable(r, point_names[i]));
    if (!eq.is_zero()) out.ideal.push_back(std::move(eq));
  }

  // Span of {g m} over the function field, in coordinates of the group's
  // monomial basis.
  const auto basis = g.monomial_basis();
  std::map<Exps, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  const auto& cring = point.ring();
  std::vector<ring::SparseRow> rows;
  for (const auto& gen : out.ideal) {
    for (const auto& a : basis) {
      auto prod = rs.normal_form(gen * MPoly::monomial(r, a, BaseElement::constant(p, 1)));
      std::map<std::size_t, std::vector<MPoly::Term>> cols;
      for (const auto& t : prod.terms()) {
        MPoly::Term ct{{}, t.coeff};
        ct.mono.pi = t.mono.pi;
        for (std::size_t j = 0; j < cring->size(); ++j) ct.mono.exps[j] = t.mono.exps[n + j];
        cols[index.at(slice(t.mono, 0, n))].push_back(ct);
      }
      ring::SparseRow row;
      for (auto& [col, terms] : cols) {
        auto entry = MPoly::from_terms(cring, std::move(terms));
        if (!entry.is_zero()) row.insert_or_assign(col, std::move(entry));
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  ring::FracElimination elim(cring, &point.relations());
  out.order = basis.size() - elim.rank(std::move(rows));
  return out;
}

bool faithfulness_check(const Coaction& ck) {
  const auto& g = ck.group();
  const auto p = g.p();
  const auto basis = g.monomial_basis();
  std::map<Exps, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  std::vector<ring::Row> rows;
  for (const auto& q : coaction_coefficients(ck)) {
    auto gen = q - MPoly::constant(g.ring(), g.counit_of(q));
    for (const auto& a : basis) {
      auto prod = g.relations().normal_form(gen * MPoly::monomial(g.ring(), a, BaseElement::constant(p, 1)));
      ring::Row row(basis.size(), BaseElement::zero(p));
      for (const auto& t : prod.terms()) {
        row[index.at(slice(t.mono, 0, g.size()))] += BaseElement::pi_power(p, t.mono.pi, t.coeff);
      }
      rows.push_back(std::move(row));
    }
  }
  auto ideal = ring::Lattice::reduce(basis.size(), p, std::move(rows));
  return ideal.rank() == basis.size() - 1;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Torsor: return "Torsor";
    case Verdict::FaithfulNotFree: return "FaithfulNotFree";
    case Verdict::NotFaithful: return "NotFaithful";
  }
  return "NotFaithful";
}

Verdict torsor_verdict(bool faithful, std::size_t stabilizer_order) {
  if (!faithful) return Verdict::NotFaithful;
  return stabilizer_order == 1 ? Verdict::Torsor : Verdict::FaithfulNotFree;
}

ring::Lattice invariant_lattice(const Coaction& c, int degree_bound) {
  const auto& cover = c.cover();
  const auto p = cover.p();
  const auto nf = cover.size();
  const auto w_index = cover.base_index();
  const auto total = c.ring()->size();
  // Fiber monomials X^a with a_i < p.
  std::vector<Exps> fiber_basis;
  {
    Exps e(nf, 0);
    while (true) {
      fiber_basis.push_back(e);
      std::size_t k = nf;
      while (k > 0 && ++e[k - 1] == static_cast<std::int32_t>(p)) e[--k] = 0;
      if (k == 0) break;
    }
  }
  const auto m = fiber_basis.size();
  const auto dim = static_cast<std::size_t>(degree_bound + 1) * m;

  // Phi(X^a) = mu(X^a) - X^a.
  std::vector<MPoly> phi;
  for (const auto& a : fiber_basis) {
    Exps full(total, 0);
    std::copy(a.begin(), a.end(), full.begin());
    auto xa = MPoly::monomial(cover.ring(), Exps(a.begin(), a.end()), BaseElement::constant(p, 1));
    phi.push_back(c.apply(xa) - xa.embed(c.ring()));
  }

  // Kernel over K(w): columns are the monomials in everything but w.
  auto wring = ring::Ring::make(p, {"w"});
  std::map<Exps, std::size_t> columns;
  std::vector<ring::SparseRow> rows;
  for (const auto& f : phi) {
    std::map<std::size_t, std::vector<MPoly::Term>> cols;
    for (const auto& t : f.terms()) {
      Exps key = slice(t.mono, 0, total);
      key[w_index] = 0;
      auto [it, fresh] = columns.try_emplace(key, columns.size());
      MPoly::Term wt{{}, t.coeff};
      wt.mono.pi = t.mono.pi;
      wt.mono.exps[0] = t.mono.exps[w_index];
      cols[it->second].push_back(wt);
    }
    ring::SparseRow row;
    for (auto& [col, terms] : cols) row.insert_or_assign(col, MPoly::from_terms(wring, std::move(terms)));
    rows.push_back(std::move(row));
  }
  ring::FracElimination elim(wring, nullptr);
  std::vector<bool> support(m, false);
  for (const auto& k : elim.left_kernel(rows)) {
    for (const auto& [idx, x] : k) support[idx] = true;
  }

  // Exact kernel over R on the rows w^c X^a with a in the support.
  std::vector<std::size_t> coords;
  std::map<Exps, std::size_t> full_columns;
  std::vector<std::vector<std::pair<std::size_t, BaseElement>>> sparse;
  for (int cdeg = 0; cdeg <= degree_bound; ++cdeg) {
    for (std::size_t a = 0; a < m; ++a) {
      if (!support[a]) continue;
      coords.push_back(static_cast<std::size_t>(cdeg) * m + a);
      std::map<std::size_t, BaseElement> entries;
      for (const auto& t : phi[a].terms()) {
        Exps key = slice(t.mono, 0, total);
        key[w_index] += cdeg;
        auto [it, fresh] = full_columns.try_emplace(key, full_columns.size());
        entries[it->second] += BaseElement::pi_power(p, t.mono.pi, t.coeff);
      }
      sparse.emplace_back(entries.begin(), entries.end());
    }
  }
  std::vector<ring::Row> matrix;
  for (const auto& s : sparse) {
    ring::Row row(full_columns.size(), BaseElement::zero(p));
    for (const auto& [col, x] : s) row[col] = x;
    matrix.push_back(std::move(row));
  }
  auto kernel = ring::lattice_kernel(p, matrix, full_columns.size());
  std::vector<ring::Row> embedded;
  for (const auto& k : kernel.rows()) {
    ring::Row row(dim, BaseElement::zero(p));
    for (std::size_t i = 0; i < coords.size(); ++i) row[coords[i]] = k[i];
    embedded.push_back(std::move(row));
  }
  return ring::Lattice::reduce(dim, p, std::move(embedded));
}

bool invariants_check(const Coaction& c, const Coaction& cg, int degree_bound) {
  auto lg = invariant_lattice(c, degree_bound);
  auto lgg = invariant_lattice(cg, degree_bound);
  if (!(lg == lgg)) return false;
  const auto m = lg.dim() / static_cast<std::size_t>(degree_bound + 1);
  for (int cdeg = 0; cdeg <= degree_bound; ++cdeg) {
    ring::Row wc(lg.dim(), BaseElement::zero(c.cover().p()));
    wc[static_cast<std::size_t>(cdeg) * m] = BaseElement::constant(c.cover().p(), 1);
    if (!lg.contains(wc) || !lgg.contains(wc)) return false;
  }
  return true;
}

}  // namespace effmodel::model
