#include "effmodel/ring/lattice.hpp"

#include <algorithm>

#include "effmodel/error.hpp"

namespace effmodel::ring {

namespace {

bool is_zero_row(const Row& r, std::size_t limit) {
  return std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(limit),
                     [](const BaseElement& x) { return x.is_zero(); });
}

void axpy(Row& target, const BaseElement& t, const Row& source) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!source[i].is_zero()) target[i] -= t * source[i];
  }
}

void scale(Row& r, const BaseElement& u) {
  for (auto& x : r) {
    if (!x.is_zero()) x = u * x;
  }
}

// Clear column `col` of `target` using pivot row `pr` whose pivot has
// valuation v <= valuation(target[col]).
void eliminate(Row& target, const Row& pr, std::size_t col) {
  const auto& a = pr[col];
  const auto& b = target[col];
  if (b.is_zero()) return;
  if (a.is_monomial()) {
    axpy(target, b.divided_by_monomial(a), pr);
    return;
  }
  const auto v = *a.valuation();
  auto unit = a.shifted(-v);
  auto t = b.shifted(-v);
  scale(target, unit);
  axpy(target, t, pr);
}

struct Echelon {
  std::vector<Row> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<Row> leftover;  // rows whose first `limit` entries vanished
};

Echelon echelonize(std::uint32_t p, std::vector<Row> rows, std::size_t limit) {
  Echelon out;
  std::vector<Row> work;
  for (auto& r : rows) {
    for (const auto& x : r) {
      if (!x.is_integral()) throw DomainError("denominators not cleared");
    }
    if (!is_zero_row(r, r.size())) work.push_back(std::move(r));
  }
  for (std::size_t col = 0; col < limit && !work.empty(); ++col) {
    std::size_t best = work.size();
    std::int32_t best_val = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      auto v = work[i][col].valuation();
      if (v && (best == work.size() || *v < best_val ||
                (*v == best_val && work[i][col].is_monomial() &&
                 !work[best][col].is_monomial()))) {
        best = i;
        best_val = *v;
      }
    }
    if (best == work.size()) continue;
    Row pr = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    if (pr[col].is_monomial()) {
      auto c = BaseElement::constant(p, pr[col].terms()[0].coeff);
      scale(pr, BaseElement::constant(p, 1).divided_by_monomial(c));
    }
    std::vector<Row> next;
    next.reserve(work.size());
    for (auto& r : work) {
      eliminate(r, pr, col);
      if (is_zero_row(r, limit)) {
        if (!is_zero_row(r, r.size())) out.leftover.push_back(std::move(r));
      } else {
        next.push_back(std::move(r));
      }
    }
    work = std::move(next);
    out.pivot_rows.push_back(std::move(pr));
    out.pivot_cols.push_back(col);
  }
  for (auto& r : work) out.leftover.push_back(std::move(r));

  // Reduce entries above monomial pivots to pi-degree below the pivot's.
  for (std::size_t i = 0; i < out.pivot_rows.size(); ++i) {
    const auto col = out.pivot_cols[i];
    const auto& piv = out.pivot_rows[i][col];
    if (!piv.is_monomial()) continue;
    const auto v = *piv.valuation();
    for (std::size_t j = 0; j < i; ++j) {
      auto high = out.pivot_rows[j][col].part_from(v);
      if (!high.is_zero()) axpy(out.pivot_rows[j], high.shifted(-v), out.pivot_rows[i]);
    }
  }
  return out;
}

}  // namespace

Lattice Lattice::reduce(std::size_t dim, std::uint32_t p, std::vector<Row> rows) {
  for (const auto& r : rows) {
    if (r.size() != dim) throw DomainError("lattice row of wrong length");
  }
  auto e = echelonize(p, std::move(rows), dim);
  Lattice l(dim, p);
  l.rows_ = std::move(e.pivot_rows);
  l.pivots_ = std::move(e.pivot_cols);
  return l;
}

bool Lattice::contains(const Row& v) const {
  if (v.size() != dim_) throw DomainError("query vector of wrong length");
  Row q = v;
  for (auto& x : q) {
    if (!x.is_integral()) return false;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto col = pivots_[i];
    if (q[col].is_zero()) continue;
    if (*q[col].valuation() < *rows_[i][col].valuation()) return false;
    eliminate(q, rows_[i], col);
  }
  return is_zero_row(q, q.size());
}

bool Lattice::contains(const Lattice& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Row& r) { return contains(r); });
}

Lattice Lattice::plus(const Lattice& other) const {
  auto rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return reduce(dim_, p_, std::move(rows));
}

Lattice Lattice::with(const Row& v) const {
  auto rows = rows_;
  rows.push_back(v);
  return reduce(dim_, p_, std::move(rows));
}

std::int64_t Lattice::pivot_valuation_sum() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) s += *rows_[i][pivots_[i]].valuation();
  return s;
}

Lattice lattice_kernel(std::uint32_t p, const std::vector<Row>& matrix, std::size_t columns) {
  const auto n = matrix.size();
  std::vector<Row> augmented;
  augmented.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != columns) throw DomainError("kernel matrix row of wrong length");
    Row r = matrix[i];
    r.resize(columns + n, BaseElement::zero(p));
    r[columns + i] = BaseElement::constant(p, 1);
    augmented.push_back(std::move(r));
  }
  auto e = echelonize(p, std::move(augmented), columns);
  std::vector<Row> kernel;
  for (auto& r : e.leftover) kernel.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(columns), r.end());
  return Lattice::reduce(n, p, std::move(kernel));
}

}  // namespace effmodel::ring
