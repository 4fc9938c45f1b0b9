#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "effmodel/ring/mpoly.hpp"
#include "effmodel/ring/rewrite.hpp"

namespace effmodel::ring {

/// Sparse row: column index -> nonzero entry.
using SparseRow = std::map<std::size_t, MPoly>;

/// Linear algebra over the fraction field of D = ring / rs, where D must be
/// a domain (not checked: the caller vouches for it). Elimination is
/// fraction-free; pivots of the form c * pi^e are inverted exactly, other
/// pivots are cross-multiplied.
class FracElimination {
 public:
  /// `rs` may be null (no relations). Entries are normalized by rs.
  FracElimination(RingPtr ring, const RewriteSystem* rs) : ring_(std::move(ring)), rs_(rs) {}

  std::size_t rank(std::vector<SparseRow> rows) const;
  /// Basis of {x : x * M = 0} over Frac(D), as rows of length M.size() with
  /// entries in D.
  std::vector<SparseRow> left_kernel(const std::vector<SparseRow>& rows) const;

 private:
  struct Result {
    std::size_t rank;
    std::vector<SparseRow> leftover;
  };
  Result eliminate(std::vector<SparseRow> rows, std::size_t limit) const;
  MPoly norm(const MPoly& x) const { return rs_ ? rs_->normal_form(x) : x; }

  RingPtr ring_;
  const RewriteSystem* rs_;
};

}  // namespace effmodel::ring
