#pragma once

#include <optional>
#include <vector>

#include "greenscan/representation.hpp"

namespace greenscan {

struct Submodule {
  VertexSubspaces spaces;  // canonical column bases
  IntVector dims;
};

struct SubmoduleBudget {
  std::size_t max_submodules = 4000;
  std::size_t certify_max_total_dim = 8;
  std::size_t certify_max_subspaces = 20000;
};

/// Submodules generated from a finite grid of vectors, closed under sums.
/// `complete` means the list of dimension vectors is certified to be the full
/// set of dimension vectors of submodules (by agreement with a full search over
/// F_2 or F_3); the list itself is a sample of the lattice.
struct SubmoduleLattice {
  std::vector<Submodule> submodules;  // sorted by dims, then entries; contains 0 and M
  bool complete = false;
  bool certified_by_finite_field = false;
  int certifying_prime = 0;
  std::size_t finite_field_count = 0;
};

SubmoduleLattice submodules(const Representation& m, const SubmoduleBudget& budget = {});

/// Dimension vectors of all submodules of the reduction of m modulo p, by exhaustive
/// search. Empty optional when m does not reduce mod p or the search exceeds budget.
struct FiniteFieldResult {
  std::vector<IntVector> dims;  // sorted, distinct
  std::size_t lattice_size = 0;
};
std::optional<FiniteFieldResult> finite_field_submodule_dims(const Representation& m, int p, std::size_t max_subspaces);

}  // namespace greenscan
