#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greenscan/green_path.hpp"
#include "greenscan/stability.hpp"
#include "greenscan/tautilt.hpp"

namespace greenscan {

/// Open positive span of linearly independent integer generators.
struct Cone {
  std::vector<IntVector> generators;
  /// Coordinates of theta in the generator basis (none if not full rank).
  std::optional<RationalVector> coordinates(const RationalVector& theta) const;
  bool contains(const RationalVector& theta) const;  // strict interior
  RationalVector barycenter() const;                  // sum of generators
};

struct ChamberWall {
  std::size_t position = 0;  // summand position in the pair
  Representation brick;
  IntVector normal;          // [brick]
  int sign = 0;              // sign of theta([brick]) on the chamber
  bool in_fac = false;       // brick in Fac M
};

struct ChamberRecord {
  TauPair pair;
  Cone cone;
  std::vector<ChamberWall> walls;
  /// Positive-sign bricks lie in Fac M and negative-sign bricks do not.
  bool sign_partition_ok() const;
};

ChamberRecord chamber_of(const TauContext& ctx, const TauPair& pair);

enum class WallStatus { Certified, HyperplaneOnly };
const char* to_string(WallStatus s);

struct WallSample {
  RationalVector theta;
  StabilityClass cls = StabilityClass::Inconclusive;
};

struct WallCertificate {
  Representation brick;
  IntVector normal;
  WallStatus status = WallStatus::HyperplaneOnly;
  std::vector<WallSample> support;  // base point followed by n-1 perturbations, all stable
  std::vector<WallSample> rejected; // hyperplane points where the brick is not semistable
  /// Rank 2 only: the two rays of the line, direction (d2,-d1) first.
  std::vector<std::pair<RationalVector, StabilityClass>> rays;
};

/// Exhibits an open piece of the hyperplane theta([N]) = 0 on which N is
/// theta-stable. samples bounds the number of candidate base points tried.
WallCertificate wall_certificate(const Representation& brick, std::size_t samples = 200);

struct CrossingEntry {
  std::size_t index = 0;  // into the universe
  Rational time;
};

struct PathValidation {
  bool pass = false;
  std::vector<CrossingEntry> table;      // sorted by time, then index
  std::optional<std::size_t> offender;   // first universe index failing
  std::vector<Rational> offender_roots;
  bool offender_degenerate = false;
};

PathValidation validate_path(const GreenPath& path, const std::vector<Representation>& universe);

struct PathMgs {
  bool refused = false;
  std::string reason_code;  // NOT_GREEN_PATH, NOT_DISCRETE, BOUND_EXHAUSTED, UNALIGNED
  std::string detail;
  PathValidation validation;
  MgsExtraction extraction;
  std::vector<TauPair> chain;              // increasing Fac: (0,A) first
  std::vector<bool> cone_checked;          // the sample point of step k lies in the cone of chain[k]
};

/// Induced stability of the path, its torsion chain and the aligned tau-tilting pairs.
PathMgs mgs_from_path(const TauContext& ctx, const ExchangeGraph& graph, const GreenPath& path,
                      const std::vector<Representation>& universe);

/// Piecewise-linear path through perturbed chamber barycenters of an
/// increasing chain; verified by a round trip. Throws InvariantViolation.
GreenPath path_from_mgs(const TauContext& ctx, const ExchangeGraph& graph, const std::vector<TauPair>& chain,
                        const std::vector<Representation>& universe);

/// Bricks of the enumerated indecomposables (the default path universe).
std::vector<Representation> brick_universe(const Universe& u);

struct RankTwoWall {
  IntVector ray;
  Representation brick;
};
/// Rays shared by adjacent chambers, counterclockwise starting from (0,1).
std::vector<RankTwoWall> rank_two_wall_cycle(const std::vector<ChamberRecord>& chambers);

struct MarkovWitness {
  int simple_vertex = 0;   // S(simple_vertex) is crossed first
  IntVector dims;
  RationalVector theta;    // 1 - 2 e_i, on the far side of the wall of S(i)
  StabilityClass king = StabilityClass::Inconclusive;
  GreenPath path;          // (1,...,1) -> theta -> (-1,...,-1)
  Rational simple_time;
  Rational witness_time;
  bool simple_first = false;  // no catalog module crosses before S(i)
  StabilityClass path_class = StabilityClass::Inconclusive;
  Representation module;
  bool certified() const {
    return king == StabilityClass::Stable && path_class == StabilityClass::Stable && simple_first;
  }
};

struct MarkovReport {
  std::vector<int> triple;  // vertices x, y, z with double arrows y=>x, x=>z, z=>y
  std::vector<MarkovWitness> witnesses;
  std::size_t graph_nodes = 0;
  std::size_t graph_edges = 0;
  std::size_t graph_stubs = 0;
  bool graph_complete = false;
  std::size_t chains_found = 0;
  std::size_t max_len = 0;
  bool all_certified() const;
};

/// Finds the doubled three-cycle syntactically (throws InputError when absent).
std::vector<int> find_markov_triple(const Algebra& a);
MarkovReport markov_witness(const TauContext& ctx, const ExchangeGraph& graph, std::size_t max_len);

struct ConjectureProbe {
  std::size_t samples = 0;
  std::size_t in_chamber = 0;    // sample points inside some tau-tilting cone
  std::size_t on_wall = 0;       // on the hyperplane of a universe brick
  std::size_t uncovered = 0;     // neither
  std::size_t face_pairs = 0;    // node pairs sharing n-1 g-columns
  std::size_t face_pairs_without_edge = 0;
  std::vector<RationalVector> uncovered_examples;
};
/// Samples a grid and compares with the explored chambers. Reports only.
ConjectureProbe probe_conjectures(const ExchangeGraph& graph, const TauContext& ctx,
                                  const std::vector<Representation>& universe, int grid = 8);

}  // namespace greenscan
