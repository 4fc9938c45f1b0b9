#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "effmodel/model/coaction.hpp"
#include "effmodel/ring/lattice.hpp"

namespace effmodel::model {

struct Stabilizer {
  /// Ideal generators, in the ring of the group generators, the generic
  /// point coordinates z_i (lower-cased fiber names) and w.
  std::vector<MPoly> ideal;
  /// Rank of the quotient Hopf algebra over the function field.
  std::size_t order;

  std::vector<std::string> ideal_strings() const;
};

/// Stabilizer of the generic point of the special fiber under a coaction
/// over the residue field: the ideal generated by image(Z_i)(z) - z_i, and
/// the rank of the quotient over the fraction field of
/// k[z, w] / (cover equations), which is assumed to be a domain.
Stabilizer stabilizer(const Coaction& ck);

/// The ideal generated by {q - counit(q)} over the coaction coefficients q
/// equals the augmentation ideal (same k-dimension p^n - 1).
bool faithfulness_check(const Coaction& ck);

enum class Verdict { Torsor, FaithfulNotFree, NotFaithful };
std::string verdict_name(Verdict v);
Verdict torsor_verdict(bool faithful, std::size_t stabilizer_order);

/// Invariant elements of degree <= d in w, as an R-lattice on the basis
/// w^c X^a (c <= d, a_i < p), index c * p^n + index(a).
ring::Lattice invariant_lattice(const Coaction& c, int degree_bound);

/// The invariant lattices of both coactions agree and contain w^c for
/// every c <= d.
bool invariants_check(const Coaction& c, const Coaction& cg, int degree_bound);

}  // namespace effmodel::model
