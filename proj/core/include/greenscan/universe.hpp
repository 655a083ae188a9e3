#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greenscan/representation.hpp"

namespace greenscan {

struct UniverseBounds {
  int dim_cap = 6;                      // per vertex
  std::size_t max_modules = 400;
  std::size_t per_dimension_vector = 4;  // non-isomorphic modules kept per dimension vector
  int random_extensions = 3;            // random classes tried per extension group
  std::uint64_t seed = 0x5EED;
};

/// Absolutely indecomposable modules found by extension search
/// 0 -> X -> E -> S(i) -> 0, with X a found module or a sum of two.
struct Universe {
  std::vector<Representation> modules;  // sorted by total dimension, then dimension vector
  int dim_cap = 0;
  /// No count cap was hit. Even then the search is only exhaustive for
  /// representation-finite algebras whose indecomposables arise this way.
  bool saturated = false;
  std::string bound_label() const;
};

Universe enumerate_indecomposables(const AlgebraPtr& algebra, const UniverseBounds& bounds = {});

/// Indecomposable tau-rigid modules with every dimension at most dim_bound,
/// found as cokernels of generic maps P1 -> P0 over a box of g-vectors;
/// distinct entries have distinct g-vectors. Projectives are always included.
struct TauRigidCatalog {
  std::vector<Representation> modules;  // sorted by g-vector
  std::vector<IntVector> g_vectors;
  int dim_bound = 0;
  std::size_t presentations_tried = 0;
  std::string bound_label() const;
};

TauRigidCatalog enumerate_indec_tau_rigid(const AlgebraPtr& algebra, int dim_bound, std::uint64_t seed = 0x7A0);

/// True when hom(m, tau m) = 0.
bool is_tau_rigid_module(const Representation& m);

/// "S(i)", "P(i)" or "I(i)" when m is isomorphic to one of these (checked in
/// that order, or projectives first), otherwise "M" followed by the dimension vector.
std::string standard_name(const Representation& m, bool projective_first = false);

}  // namespace greenscan
