#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greenscan/matrix.hpp"
#include "greenscan/rational.hpp"

namespace greenscan {

/// Arrow indices, first arrow first ("a*b" = {a, b}).
using Path = std::vector<int>;

/// Sparse element of A in basis coordinates: (basis index, coefficient), sorted by index.
using Element = std::vector<std::pair<int, Rational>>;

struct Arrow {
  std::string label;
  int source = 0;  // internal vertex index
  int target = 0;
};

struct RelationTerm {
  Rational coefficient;
  Path path;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct BasisPath {
  Path arrows;
  int source = 0;
  int target = 0;
  std::size_t length() const { return arrows.size(); }
};

struct AlgebraLimits {
  std::size_t max_path_length = 64;
  std::size_t max_paths = 200000;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A = kQ/I over the rationals with a finite path basis. Internal vertex
/// indices are 0..n-1 in declaration order; user-facing ids are kept for IO.
class Algebra {
 public:
  static AlgebraPtr create(std::string name, std::vector<long> vertex_ids, std::vector<Arrow> arrows,
                           std::vector<Relation> relations, const AlgebraLimits& limits = {});

  const std::string& name() const { return name_; }
  int n() const { return static_cast<int>(vertex_ids_.size()); }
  const std::vector<long>& vertex_ids() const { return vertex_ids_; }
  long vertex_id(int index) const { return vertex_ids_.at(static_cast<std::size_t>(index)); }
  /// Internal index of a user vertex id; throws InputError when unknown.
  int vertex_index(long id) const;
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_index(std::string_view label) const;  // -1 when unknown
  const std::vector<Relation>& relations() const { return relations_; }

  std::size_t total_dim() const { return basis_.size(); }
  const std::vector<BasisPath>& basis() const { return basis_; }
  /// Basis indices of paths from s to t, in basis order.
  const std::vector<int>& basis_between(int s, int t) const { return between_[static_cast<std::size_t>(s * n() + t)]; }
  int trivial_path(int vertex) const { return trivial_[static_cast<std::size_t>(vertex)]; }
  /// Longest basis path length + 1: every path of this length is zero in A.
  std::size_t nilpotency_index() const { return nil_index_; }

  /// Residue of an arbitrary path in basis coordinates (empty = zero).
  Element reduce(const Path& path) const;
  /// Product of basis elements b1 * b2 (first b1, then b2).
  const Element& product(int b1, int b2) const;
  Element multiply(const Element& x, const Element& y) const;

  std::string path_label(const Path& path, int source) const;
  std::string basis_label(int b) const;
  std::string describe() const;

 private:
  Algebra() = default;
  void compute_basis(const AlgebraLimits& limits);
  Element reduce_path_internal(const Path& path, int source) const;

  std::string name_;
  std::vector<long> vertex_ids_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;

  std::vector<BasisPath> basis_;
  std::vector<std::vector<int>> between_;
  std::vector<int> trivial_;
  std::size_t nil_index_ = 1;
  std::map<std::pair<int, Path>, Element> normal_forms_;  // keyed by (source, arrows)
  std::vector<Element> products_;                          // basis_.size()^2, row-major
};

/// Parses the line-oriented algebra format; throws ParseError / InputError /
/// BoundExhausted (infinite or oversized algebra).
AlgebraPtr parse_algebra(std::string_view text, const AlgebraLimits& limits = {});
AlgebraPtr load_algebra(const std::string& filename, const AlgebraLimits& limits = {});
std::string emit_algebra(const Algebra& algebra);

}  // namespace greenscan
