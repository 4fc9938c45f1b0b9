#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "effmodel/ring/base_element.hpp"

namespace effmodel::ring {

using Row = std::vector<BaseElement>;

/// Finitely generated R-submodule of R^dim, R the local ring of F_p[pi] at pi,
/// kept in echelon form.
///
/// Pivots are chosen by minimal pi-valuation per column. A pivot whose unit
/// part is a constant is scaled to exactly pi^v and the entries above it are
/// reduced to pi-degree < v, which is the Hermite normal form over R.
class Lattice {
 public:
  /// Throws DomainError("denominators not cleared") on a non-integral entry.
  static Lattice reduce(std::size_t dim, std::uint32_t p, std::vector<Row> rows);
  static Lattice zero(std::size_t dim, std::uint32_t p) { return reduce(dim, p, {}); }

  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t p() const noexcept { return p_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  /// Exact R-linear membership. Non-integral vectors are never members.
  bool contains(const Row& v) const;
  bool contains(const Lattice& other) const;
  Lattice plus(const Lattice& other) const;
  Lattice with(const Row& v) const;
  /// Sum of pivot valuations; the length of R^rank / L on the pivot columns.
  std::int64_t pivot_valuation_sum() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.contains(b) && b.contains(a);
  }

 private:
  Lattice(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p) {}

  std::size_t dim_;
  std::uint32_t p_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

inline Lattice lattice_reduce(std::size_t dim, std::uint32_t p, std::vector<Row> rows) {
  return Lattice::reduce(dim, p, std::move(rows));
}

inline bool lattice_contains(const Lattice& l, const Row& v) { return l.contains(v); }

/// Left kernel {x in R^rows : x * M = 0} of an integral matrix with
/// `columns` columns.
Lattice lattice_kernel(std::uint32_t p, const std::vector<Row>& matrix, std::size_t columns);

}  // namespace effmodel::ring
