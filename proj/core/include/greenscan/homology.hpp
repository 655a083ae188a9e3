#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "greenscan/representation.hpp"

namespace greenscan {

/// Minimal projective presentation P1 -> P0 -> M -> 0.
/// components[r][c] is the element q of A (paths p0[c] -> p1[r]) describing the
/// map P(p1[r]) -> P(p0[c]), e ↦ q.
struct Presentation {
  std::vector<int> p0;
  std::vector<int> p1;
  std::vector<std::vector<Element>> components;
  std::vector<RationalVector> top_generators;  // image of the P0 generators in M
  IntVector p0_multiplicities;
  IntVector p1_multiplicities;
};

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
/// dim Hom via the presentation of m (small linear system).
std::size_t hom_dim(const Representation& m, const Representation& n);
/// dim Hom via the full intertwiner system; independent route for cross-checks.
std::size_t hom_dim_direct(const Representation& m, const Representation& n);

Presentation min_projective_presentation(const Representation& m);
/// The presentation as a morphism between direct sums of projectives.
struct PresentationMaps {
  Representation p1;
  Representation p0;
  Morphism map;
};
PresentationMaps presentation_maps(const Representation& m);
/// The map between sums of projectives described by components (same layout as Presentation).
PresentationMaps projective_map(const AlgebraPtr& alg, const std::vector<int>& p1, const std::vector<int>& p0,
                                const std::vector<std::vector<Element>>& components);
/// No component has a nonzero coefficient on a trivial path.
bool presentation_is_minimal(const Presentation& p, const Algebra& a);

IntVector g_vector(const Representation& m);
IntVector top_vector(const Representation& m);
/// Radical as subspaces: sum of images of all arrows.
VertexSubspaces radical_spaces(const Representation& m);

Representation tau(const Representation& m);
bool is_projective(const Representation& m);

struct Subobject {
  Representation object;
  Morphism inclusion;
  VertexSubspaces spaces;
};
/// Trace of m in n: sum of images of all maps m -> n.
Subobject trace(const Representation& m, const Representation& n);
/// Whether n is generated by m, i.e. trace(m, n) = n.
bool in_fac(const Representation& m, const Representation& n);

struct Approximation {
  Representation source;  // M^k
  Morphism map;           // M^k -> X
  Representation cokernel;
};
/// Minimal right add(m)-approximation of x and its cokernel.
Approximation right_approximation(const Representation& x, const Representation& m);

struct EndInfo {
  std::vector<Matrix> basis;  // total matrices of a basis of End(M)
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t top_dim() const { return dim - radical_dim; }
};
EndInfo end_info(const Representation& m);
bool is_brick(const Representation& m);
/// End(M)/rad = k: indecomposable over every field extension.
bool is_absolutely_indecomposable(const Representation& m);

struct Summand {
  Representation module;
  int multiplicity = 1;
  bool non_absolutely_indecomposable = false;
};
struct Decomposition {
  std::vector<Summand> summands;
  bool flagged = false;  // some summand could not be split and has End/rad != k
};
/// Fitting splitting with seeded pseudo-random endomorphisms (seed 0xA17).
Decomposition decompose(const Representation& m);
bool is_indecomposable(const Representation& m);

bool is_isomorphic(const Representation& a, const Representation& b);

/// Total-space vectors of M as columns of matrices over each vertex.
Matrix total_map_matrix(const Representation& m, int arrow);

inline constexpr std::uint64_t kDecompositionSeed = 0xA17;

}  // namespace greenscan
