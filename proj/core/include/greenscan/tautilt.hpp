#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "greenscan/homology.hpp"
#include "greenscan/universe.hpp"

namespace greenscan {

struct TauBounds {
  int dim_bound = 6;           // per-vertex dimension of catalog modules
  std::size_t node_cap = 10000;
  std::size_t max_len = 64;    // maximal green sequence length cap
  std::size_t max_chains = 100000;
  std::uint64_t seed = 0x7A0;
};

/// A tau-rigid pair: catalog indices of M's summands and vertices of P, both sorted.
struct TauPair {
  std::vector<std::size_t> m;
  std::vector<int> p;
  std::size_t size() const { return m.size() + p.size(); }
  friend bool operator==(const TauPair& a, const TauPair& b) { return a.m == b.m && a.p == b.p; }
  friend bool operator<(const TauPair& a, const TauPair& b) { return a.m != b.m ? a.m < b.m : a.p < b.p; }
};

/// Catalog of indecomposable tau-rigid modules plus memo tables for the
/// pairwise tests used by completion and Fac comparison. Thread-safe.
class TauContext {
 public:
  TauContext(AlgebraPtr algebra, const TauBounds& bounds = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  int n() const { return algebra_->n(); }
  const TauBounds& bounds() const { return bounds_; }
  const TauRigidCatalog& catalog() const { return catalog_; }
  const Representation& module(std::size_t i) const { return catalog_.modules[i]; }
  const IntVector& g(std::size_t i) const { return catalog_.g_vectors[i]; }
  /// Catalog index of a tau-rigid indecomposable (looked up by g-vector).
  std::optional<std::size_t> index_of(const Representation& m) const;

  /// hom(X_i, tau X_j) = 0 and hom(X_j, tau X_i) = 0.
  bool compatible(std::size_t i, std::size_t j) const;
  /// X_j in Fac(sum of X_i for i in gens).
  bool generated_by(const std::vector<std::size_t>& gens, std::size_t j) const;

  TauPair projectives_pair() const;  // (A, 0)
  TauPair shifted_pair() const;      // (0, A)

 private:
  AlgebraPtr algebra_;
  TauBounds bounds_;
  TauRigidCatalog catalog_;
  std::map<IntVector, std::size_t> by_g_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, bool> compatible_;
  mutable std::map<std::pair<std::vector<std::size_t>, std::size_t>, bool> fac_;
};

/// Columns g^{M_i} followed by -e_j for the P summands.
std::vector<IntVector> g_matrix(const TauContext& ctx, const TauPair& pair);
/// Sum of all columns of the g-matrix.
IntVector g_vector_pair(const TauContext& ctx, const TauPair& pair);
std::vector<Representation> pair_modules(const TauContext& ctx, const TauPair& pair);
/// "(P(1)+S(1), 0)" style label with vertex ids.
std::string describe(const TauContext& ctx, const TauPair& pair);
/// Canonical key: sorted g-matrix columns.
std::vector<IntVector> pair_key(const TauContext& ctx, const TauPair& pair);

struct RigidityCertificate {
  bool rigid = true;
  std::string reason;                 // which condition failed
  std::optional<Morphism> witness;    // nonzero map M_i -> tau M_j or P(v) -> M_i
};
/// Tests hom(M, tau M) = 0 and hom(P, M) = 0 for arbitrary summand lists.
RigidityCertificate is_tau_rigid(const std::vector<Representation>& m, const std::vector<int>& p);

/// Fac(a.M) ⊆ Fac(b.M).
bool fac_contained(const TauContext& ctx, const TauPair& a, const TauPair& b);

/// The two tau-tilting completions of an almost complete pair. Throws
/// BoundExhausted when fewer than two are found in the catalog and
/// InvariantViolation when more than two are found.
std::vector<TauPair> complete_almost(const TauContext& ctx, const TauPair& almost);

struct Mutation {
  TauPair result;
  Representation wall_brick;  // cokernel of the right approximation of the exchanged module
  bool result_is_larger = false;  // Fac(result) ⊋ Fac(input)
};
/// Mutation at summand position k (M summands first, then P). Throws BoundExhausted.
Mutation mutate(const TauContext& ctx, const TauPair& pair, std::size_t k);

struct ExchangeEdge {
  std::size_t from = 0;  // larger Fac
  std::size_t to = 0;    // smaller Fac
  Representation brick;
};
struct ExchangeStub {
  std::size_t node = 0;
  std::size_t position = 0;
  std::string reason;
};
struct ExchangeGraph {
  std::vector<TauPair> nodes;
  std::vector<ExchangeEdge> edges;
  std::vector<ExchangeStub> stubs;
  bool complete = false;  // no stubs: every node has all n mutations inside the graph
  std::size_t node_cap = 0;
  int dim_bound = 0;
  std::optional<std::size_t> top;     // (A, 0)
  std::optional<std::size_t> bottom;  // (0, A)
  std::vector<std::size_t> neighbors(std::size_t v) const;
};

ExchangeGraph exchange_graph(const TauContext& ctx);

struct MgsChains {
  std::vector<std::vector<std::size_t>> chains;  // node ids from (0,A) up to (A,0)
  bool complete = false;  // graph complete and no cap interfered
  bool length_capped = false;
  bool count_capped = false;
};
/// Directed paths from (0,A) to (A,0) against the edge orientation, of length at most max_len.
MgsChains enumerate_mgs(const ExchangeGraph& graph, std::size_t max_len, std::size_t max_chains = 100000);

/// Universe modules lying in Fac M (trace of M in N is N).
std::vector<bool> fac_membership(const TauContext& ctx, const TauPair& pair, const std::vector<Representation>& universe);

}  // namespace greenscan
