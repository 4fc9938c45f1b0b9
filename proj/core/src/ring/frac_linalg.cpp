#include "effmodel/ring/frac_linalg.hpp"

#include <limits>

namespace effmodel::ring {

namespace {

bool is_unit_constant(const MPoly& x) {
  return x.size() == 1 && x.terms()[0].mono.is_constant();
}

bool has_main(const SparseRow& r, std::size_t limit) {
  return !r.empty() && r.begin()->first < limit;
}

}  // namespace

FracElimination::Result FracElimination::eliminate(std::vector<SparseRow> rows,
                                                   std::size_t limit) const {
  std::vector<SparseRow> work;
  Result out{0, {}};
  for (auto& r : rows) {
    for (auto it = r.begin(); it != r.end();) {
      it->second = norm(it->second);
      it = it->second.is_zero() ? r.erase(it) : std::next(it);
    }
    if (has_main(r, limit)) {
      work.push_back(std::move(r));
    } else if (!r.empty()) {
      out.leftover.push_back(std::move(r));
    }
  }
  while (!work.empty()) {
    // Leftmost column still present; pivot preference: unit constant, then
    // fewest terms.
    std::size_t col = std::numeric_limits<std::size_t>::max();
    for (const auto& r : work) col = std::min(col, r.begin()->first);
    std::size_t best = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      auto it = work[i].find(col);
      if (it == work[i].end()) continue;
      if (best == work.size()) {
        best = i;
        continue;
      }
      const auto& cur = work[best].at(col);
      bool unit_i = is_unit_constant(it->second), unit_b = is_unit_constant(cur);
      if ((unit_i && !unit_b) || (unit_i == unit_b && it->second.size() < cur.size())) best = i;
    }
    SparseRow pr = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    ++out.rank;
    const MPoly a = pr.at(col);
    const bool unit = is_unit_constant(a);
    BaseElement a_inv;
    if (unit) a_inv = BaseElement::constant(a.p(), 1).divided_by_monomial(a.as_base());
    std::vector<SparseRow> next;
    for (auto& r : work) {
      auto it = r.find(col);
      if (it != r.end()) {
        const MPoly b = it->second;
        SparseRow updated;
        if (unit) {
          auto t = b.scaled(a_inv);
          updated = r;
          for (const auto& [c, x] : pr) {
            auto v = norm(updated.count(c) ? updated.at(c) - t * x : -(t * x));
            if (v.is_zero()) updated.erase(c); else updated.insert_or_assign(c, std::move(v));
          }
        } else {
          for (const auto& [c, x] : r) {
            auto v = norm(a * x);
            if (!v.is_zero()) updated.insert_or_assign(c, std::move(v));
          }
          for (const auto& [c, x] : pr) {
            auto v = norm(updated.count(c) ? updated.at(c) - b * x : -(b * x));
            if (v.is_zero()) updated.erase(c); else updated.insert_or_assign(c, std::move(v));
          }
        }
        updated.erase(col);
        r = std::move(updated);
      }
      if (has_main(r, limit)) {
        next.push_back(std::move(r));
      } else if (!r.empty()) {
        out.leftover.push_back(std::move(r));
      }
    }
    work = std::move(next);
  }
  return out;
}

std::size_t FracElimination::rank(std::vector<SparseRow> rows) const {
  return eliminate(std::move(rows), std::numeric_limits<std::size_t>::max()).rank;
}

std::vector<SparseRow> FracElimination::left_kernel(const std::vector<SparseRow>& rows) const {
  std::size_t limit = 0;
  for (const auto& r : rows) {
    if (!r.empty()) limit = std::max(limit, r.rbegin()->first + 1);
  }
  std::vector<SparseRow> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto r = rows[i];
    r.insert_or_assign(limit + i, MPoly::constant(ring_, 1));
    aug.push_back(std::move(r));
  }
  auto res = eliminate(std::move(aug), limit);
  std::vector<SparseRow> kernel;
  for (auto& r : res.leftover) {
    SparseRow k;
    for (auto& [c, x] : r) k.insert_or_assign(c - limit, std::move(x));
    kernel.push_back(std::move(k));
  }
  return kernel;
}

}  // namespace effmodel::ring
