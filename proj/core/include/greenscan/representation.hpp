#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greenscan/algebra.hpp"
#include "greenscan/matrix.hpp"

namespace greenscan {

struct RepCache;

/// Finite-dimensional representation: one space per vertex and one matrix per
/// arrow (shape dim(target) x dim(source), acting on columns). Immutable; copies
/// share data and the lazily filled cache of derived invariants.
class Representation {
 public:
  Representation() = default;
  /// Validates shapes and relations; throws InputError on violation.
  Representation(AlgebraPtr algebra, IntVector dims, std::vector<Matrix> maps, std::string name = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  const Algebra& alg() const { return *algebra_; }
  const IntVector& dims() const { return dims_; }
  std::size_t dim(int vertex) const { return static_cast<std::size_t>(dims_[static_cast<std::size_t>(vertex)]); }
  std::size_t total_dim() const { return total_; }
  std::size_t offset(int vertex) const { return offsets_[static_cast<std::size_t>(vertex)]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& map(int arrow) const { return maps_[static_cast<std::size_t>(arrow)]; }
  const std::string& name() const { return name_; }
  Representation renamed(std::string name) const;
  bool is_zero() const { return total_ == 0; }
  bool valid() const { return algebra_ != nullptr; }

  /// Action of a path (first arrow first): dim(target) x dim(source).
  Matrix path_action(const Path& path, int source) const;
  /// Action of basis element b of A.
  const Matrix& basis_action(int b) const;
  /// Action of an element supported on paths s -> t.
  Matrix element_action(const Element& x, int s, int t) const;

  RepCache& cache() const { return *cache_; }

 private:
  AlgebraPtr algebra_;
  IntVector dims_;
  std::vector<Matrix> maps_;
  std::string name_;
  std::size_t total_ = 0;
  std::vector<std::size_t> offsets_;
  std::shared_ptr<std::vector<Matrix>> basis_actions_;
  std::shared_ptr<RepCache> cache_;
};

/// Vertexwise linear map M -> N commuting with all arrows.
struct Morphism {
  std::vector<Matrix> blocks;  // blocks[v]: dim N_v x dim M_v

  bool is_zero() const;
  Morphism compose_after(const Morphism& first) const;  // (*this) o first
  Matrix total(const Representation& source, const Representation& target) const;
  Morphism operator+(const Morphism& o) const;
  Morphism operator*(const Rational& s) const;
};

bool is_morphism(const Morphism& f, const Representation& source, const Representation& target);
Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& source, const Representation& target);

Representation zero_representation(const AlgebraPtr& algebra);
Representation simple(const AlgebraPtr& algebra, int vertex);
/// P(i): basis paths starting at i, arrows acting by right concatenation.
Representation projective(const AlgebraPtr& algebra, int vertex);
/// I(i): vertexwise dual of the paths ending at i.
Representation injective(const AlgebraPtr& algebra, int vertex);
Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);
Representation power(const Representation& m, int k);

/// Subspace per vertex (columns = basis, canonical RREF form when produced here).
using VertexSubspaces = std::vector<Matrix>;

bool is_invariant(const Representation& m, const VertexSubspaces& sub);
/// Restriction to an invariant family of subspaces, with its inclusion.
std::pair<Representation, Morphism> subrepresentation(const Representation& m, const VertexSubspaces& sub);
/// Quotient by an invariant family of subspaces, with the projection.
std::pair<Representation, Morphism> quotient(const Representation& m, const VertexSubspaces& sub);

VertexSubspaces image_spaces(const Morphism& f, const Representation& source, const Representation& target);
VertexSubspaces kernel_spaces(const Morphism& f, const Representation& source);
/// Smallest subrepresentation containing the given vectors at the given vertex.
VertexSubspaces generated_subspaces(const Representation& m, int vertex, const Matrix& vectors);
VertexSubspaces sum_spaces(const VertexSubspaces& a, const VertexSubspaces& b);
VertexSubspaces zero_spaces(const Representation& m);
VertexSubspaces full_spaces(const Representation& m);
IntVector dimension_vector(const VertexSubspaces& s);

std::pair<Representation, Morphism> cokernel(const Morphism& f, const Representation& source, const Representation& target);
std::pair<Representation, Morphism> kernel(const Morphism& f, const Representation& source);

/// Module file format: `module <name> over <algebra>`, `dim <v> = <k>`, `map <arrow> = [[..],..]`.
Representation parse_module(std::string_view text, const AlgebraPtr& algebra);
Representation load_module(const std::string& filename, const AlgebraPtr& algebra);
std::string emit_module(const Representation& m);

std::string dims_string(const IntVector& dims);

}  // namespace greenscan
