#include "greenscan/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "greenscan/errors.hpp"
#include "greenscan/homology.hpp"

namespace greenscan {

namespace {

RationalVector ones(std::size_t n, long v = 1) { return RationalVector(n, Rational(v)); }

std::string vec_string(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_display_string(v[i]);
  os << ')';
  return os.str();
}

}  // namespace

std::optional<RationalVector> Cone::coordinates(const RationalVector& theta) const {
  if (generators.empty() || generators.size() != theta.size()) return std::nullopt;
  std::vector<RationalVector> cols;
  for (const auto& g : generators) cols.push_back(to_rational(g));
  const Matrix a = Matrix::from_columns(theta.size(), cols);
  if (rank(a) != theta.size()) return std::nullopt;
  const auto x = solve(a, Matrix::from_columns(theta.size(), {theta}));
  if (!x) return std::nullopt;
  return x->column(0);
}

bool Cone::contains(const RationalVector& theta) const {
  const auto c = coordinates(theta);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x > 0; });
}

RationalVector Cone::barycenter() const {
  RationalVector out(generators.empty() ? 0 : generators.front().size());
  for (const auto& g : generators)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += g[i];
  return out;
}

bool ChamberRecord::sign_partition_ok() const {
  return std::all_of(walls.begin(), walls.end(), [](const ChamberWall& w) { return (w.sign > 0) == w.in_fac; });
}

ChamberRecord chamber_of(const TauContext& ctx, const TauPair& pair) {
  if (static_cast<int>(pair.size()) != ctx.n()) throw InputError("chamber_of needs a tau-tilting pair");
  ChamberRecord rec;
  rec.pair = pair;
  rec.cone.generators = g_matrix(ctx, pair);
  const RationalVector bary = rec.cone.barycenter();
  const auto mods = pair_modules(ctx, pair);
  const Representation m = mods.empty() ? zero_representation(ctx.algebra()) : direct_sum(mods);
  for (std::size_t k = 0; k < pair.size(); ++k) {
    Mutation mu = mutate(ctx, pair, k);
    ChamberWall w;
    w.position = k;
    w.normal = mu.wall_brick.dims();
    w.sign = sgn(dot(bary, w.normal));
    w.in_fac = !m.is_zero() && in_fac(m, mu.wall_brick);
    w.brick = std::move(mu.wall_brick);
    rec.walls.push_back(std::move(w));
  }
  return rec;
}

const char* to_string(WallStatus s) { return s == WallStatus::Certified ? "certified" : "hyperplane-only"; }

WallCertificate wall_certificate(const Representation& brick, std::size_t samples) {
  WallCertificate cert;
  cert.brick = brick;
  cert.normal = brick.dims();
  const std::size_t n = cert.normal.size();
  const RationalVector d = to_rational(cert.normal);
  const Rational dd = dot(d, d);
  if (dd == 0) throw InputError("wall_certificate needs a nonzero module");

  auto project = [&](RationalVector v) {
    const Rational c = dot(v, d) / dd;
    for (std::size_t i = 0; i < n; ++i) v[i] -= c * d[i];
    return v;
  };
  auto record_rejected = [&](const RationalVector& theta, StabilityClass cls) {
    if (cert.rejected.size() < 8) cert.rejected.push_back({theta, cls});
  };

  if (n == 2) {
    for (int s : {1, -1}) {
      RationalVector r{Rational(s * cert.normal[1]), Rational(-s * cert.normal[0])};
      cert.rays.emplace_back(r, theta_classify(r, brick).cls);
    }
  }

  // Candidate base points: projections of small integer vectors, by growing box.
  std::vector<RationalVector> candidates;
  if (n == 1) {
    candidates.push_back(RationalVector(1));
  } else {
    std::set<RationalVector> seen;
    for (long box = 1; box <= 3 && candidates.size() < samples; ++box) {
      std::vector<long> v(n, -box);
      while (true) {
        long norm = 0;
        for (long x : v) norm = std::max(norm, std::labs(x));
        if (norm == box) {
          RationalVector p = project(RationalVector(v.begin(), v.end()));
          // normalize to a canonical positive multiple
          Rational scale = 0;
          for (const auto& x : p)
            if (x != 0) { scale = abs(x); break; }
          if (scale != 0) {
            for (auto& x : p) x /= scale;
            if (seen.insert(p).second) candidates.push_back(p);
          }
        }
        std::size_t i = 0;
        while (i < n && v[i] == box) v[i++] = -box;
        if (i == n) break;
        ++v[i];
      }
    }
    if (candidates.size() > samples) candidates.resize(samples);
  }

  std::optional<RationalVector> base;
  for (const auto& theta : candidates) {
    const auto cls = theta_classify(theta, brick).cls;
    if (cls == StabilityClass::Stable) {
      base = theta;
      cert.support.push_back({theta, cls});
      break;
    }
    if (cls == StabilityClass::Unstable) record_rejected(theta, cls);
  }
  if (!base) return cert;

  // Perturb along a basis of the hyperplane; stability is open inside it.
  Matrix row(1, n);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = d[i];
  const Matrix h = nullspace(row);
  for (std::size_t j = 0; j < h.cols(); ++j) {
    bool found = false;
    Rational delta(1, 2);
    for (int k = 0; k < 30 && !found; ++k, delta /= 2) {
      RationalVector theta = *base;
      for (std::size_t i = 0; i < n; ++i) theta[i] += delta * h(i, j);
      const auto cls = theta_classify(theta, brick).cls;
      if (cls == StabilityClass::Stable) {
        cert.support.push_back({theta, cls});
        found = true;
      }
    }
    if (!found) return cert;
  }
  cert.status = WallStatus::Certified;
  return cert;
}

PathValidation validate_path(const GreenPath& path, const std::vector<Representation>& universe) {
  PathValidation out;
  out.pass = true;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const RhoProfile p = rho_profile(path, universe[i].dims());
    if (!p.single_crossing()) {
      if (out.pass) {
        out.offender = i;
        out.offender_roots = p.roots;
        out.offender_degenerate = p.degenerate;
      }
      out.pass = false;
      continue;
    }
    out.table.push_back({i, p.roots.front()});
  }
  std::stable_sort(out.table.begin(), out.table.end(),
                   [](const CrossingEntry& a, const CrossingEntry& b) { return a.time < b.time; });
  return out;
}

PathMgs mgs_from_path(const TauContext& ctx, const ExchangeGraph& graph, const GreenPath& path,
                      const std::vector<Representation>& universe) {
  PathMgs out;
  out.validation = validate_path(path, universe);
  if (!out.validation.pass) {
    out.refused = true;
    out.reason_code = "NOT_GREEN_PATH";
    out.detail = "module " + universe[*out.validation.offender].name() + " " +
                 dims_string(universe[*out.validation.offender].dims()) + " has " +
                 (out.validation.offender_degenerate ? std::string("a degenerate segment")
                                                     : std::to_string(out.validation.offender_roots.size()) + " roots");
    return out;
  }
  out.extraction = extract_mgs(StabilitySpec::path(path), universe);
  if (out.extraction.refused) {
    out.refused = true;
    out.reason_code = out.extraction.reason_code;
    out.detail = out.extraction.detail;
    return out;
  }

  const auto& phases = out.extraction.phases;
  const std::size_t m = phases.size();
  for (std::size_t k = 0; k <= m; ++k) {
    const Rational hi = k == 0 ? Rational(1) : phases[k - 1].time();
    const Rational lo = k == m ? Rational(0) : phases[k].time();
    const RationalVector theta = path.at((hi + lo) / 2);
    const auto& members = out.extraction.chain[k].members;
    std::vector<bool> expected(universe.size(), false);
    for (auto i : members) expected[i] = true;

    std::optional<std::size_t> node;
    bool by_cone = false;
    for (std::size_t v = 0; v < graph.nodes.size() && !node; ++v) {
      Cone c{g_matrix(ctx, graph.nodes[v])};
      if (c.contains(theta)) {
        node = v;
        by_cone = true;
      }
    }
    if (!node) {
      for (std::size_t v = 0; v < graph.nodes.size() && !node; ++v)
        if (fac_membership(ctx, graph.nodes[v], universe) == expected) node = v;
    }
    if (!node) {
      out.refused = true;
      out.reason_code = "BOUND_EXHAUSTED";
      out.detail = "no explored chamber matches the torsion class at " + vec_string(theta);
      out.chain.clear();
      out.cone_checked.clear();
      return out;
    }
    if (by_cone && fac_membership(ctx, graph.nodes[*node], universe) != expected) {
      out.refused = true;
      out.reason_code = "UNALIGNED";
      out.detail = "torsion class at " + vec_string(theta) + " differs from Fac of " + describe(ctx, graph.nodes[*node]);
      return out;
    }
    out.chain.push_back(graph.nodes[*node]);
    out.cone_checked.push_back(by_cone);
  }
  return out;
}

GreenPath path_from_mgs(const TauContext& ctx, const ExchangeGraph& graph, const std::vector<TauPair>& chain,
                        const std::vector<Representation>& universe) {
  if (chain.size() < 2) throw InputError("a green chain has at least two pairs");
  const std::size_t n = static_cast<std::size_t>(ctx.n());
  const std::size_t len = chain.size() - 1;
  Rational eps = 1;
  for (const auto& pair : chain) {
    const Cone c{g_matrix(ctx, pair)};
    const RationalVector bary = c.barycenter();
    std::optional<Rational> best;
    Rational rho = 1;
    for (int k = 0; k <= 40; ++k, rho /= 2) {
      RationalVector q = bary;
      for (auto& x : q) x -= rho;
      if (c.contains(q)) {
        best = rho;
        break;
      }
    }
    if (!best) throw InvariantViolation("no dyadic perturbation stays inside the cone of " + describe(ctx, pair));
    eps = std::min(eps, *best);
  }
  std::vector<RationalVector> points;
  for (std::size_t k = 0; k <= len; ++k) {
    RationalVector q = Cone{g_matrix(ctx, chain[len - k])}.barycenter();
    const Rational shift = eps * Rational(static_cast<long>(k), static_cast<long>(len));
    for (auto& x : q) x -= shift;
    points.push_back(std::move(q));
  }
  if (points.back() != ones(n, -1)) points.push_back(ones(n, -1));
  GreenPath path = GreenPath::uniform(std::move(points));

  const PathMgs back = mgs_from_path(ctx, graph, path, universe);
  if (back.refused) throw InvariantViolation("round trip refused: " + back.reason_code + " " + back.detail);
  if (back.chain != chain) throw InvariantViolation("round trip returned a different chain for path " + path.to_string());
  return path;
}

std::vector<Representation> brick_universe(const Universe& u) {
  std::vector<Representation> out;
  for (const auto& m : u.modules)
    if (is_brick(m)) out.push_back(m);
  return out;
}

std::vector<RankTwoWall> rank_two_wall_cycle(const std::vector<ChamberRecord>& chambers) {
  std::map<IntVector, Representation> rays;
  for (const auto& c : chambers) {
    if (c.cone.generators.size() != 2) throw InputError("rank_two_wall_cycle needs rank 2 chambers");
    for (const auto& w : c.walls) {
      const IntVector& ray = c.cone.generators[1 - w.position];
      auto [it, inserted] = rays.emplace(ray, w.brick);
      if (!inserted && it->second.dims() != w.brick.dims())
        throw InvariantViolation("two wall bricks on the ray " + dims_string(ray));
    }
  }
  auto half = [](const IntVector& v) { return (v[0] < 0 || (v[0] == 0 && v[1] > 0)) ? 0 : 1; };
  std::vector<RankTwoWall> out;
  for (auto& [ray, brick] : rays) out.push_back({ray, brick});
  std::sort(out.begin(), out.end(), [&](const RankTwoWall& a, const RankTwoWall& b) {
    const int ha = half(a.ray), hb = half(b.ray);
    if (ha != hb) return ha < hb;
    return a.ray[0] * b.ray[1] - a.ray[1] * b.ray[0] > 0;
  });
  return out;
}

bool MarkovReport::all_certified() const {
  return witnesses.size() == 3 &&
         std::all_of(witnesses.begin(), witnesses.end(), [](const MarkovWitness& w) { return w.certified(); });
}

std::vector<int> find_markov_triple(const Algebra& a) {
  const int n = a.n();
  std::vector<std::vector<int>> count(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& arr : a.arrows()) ++count[static_cast<std::size_t>(arr.source)][static_cast<std::size_t>(arr.target)];
  auto c = [&](int s, int t) { return count[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (c(y, x) >= 2 && c(x, z) >= 2 && c(z, y) >= 2) return {x, y, z};
      }
  throw InputError("the algebra has no doubled three-cycle subquiver");
}

namespace {

/// Both arrows of the first doubled pair s => t act as 1, everything else 0.
Representation kronecker_brick(const AlgebraPtr& alg, int s, int t) {
  IntVector dims(static_cast<std::size_t>(alg->n()), 0);
  dims[static_cast<std::size_t>(s)] = 1;
  dims[static_cast<std::size_t>(t)] = 1;
  std::vector<Matrix> maps;
  int used = 0;
  for (const auto& arr : alg->arrows()) {
    Matrix mtx(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]),
               static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]));
    if (arr.source == s && arr.target == t && used < 2) {
      mtx(0, 0) = 1;
      ++used;
    }
    maps.push_back(std::move(mtx));
  }
  return Representation(alg, dims, std::move(maps), "Q" + dims_string(dims));
}

}  // namespace

MarkovReport markov_witness(const TauContext& ctx, const ExchangeGraph& graph, std::size_t max_len) {
  const auto& alg = ctx.algebra();
  MarkovReport rep;
  rep.triple = find_markov_triple(*alg);
  const int x = rep.triple[0], y = rep.triple[1], z = rep.triple[2];
  const std::size_t n = static_cast<std::size_t>(alg->n());
  // Crossing S(i) first makes the brick on (predecessor of i) => i stable.
  const std::vector<std::pair<int, int>> plan = {{x, y}, {y, z}, {z, x}};
  for (const auto& [i, pred] : plan) {
    MarkovWitness w;
    w.simple_vertex = i;
    w.module = kronecker_brick(alg, pred, i);
    w.dims = w.module.dims();
    w.theta = ones(n);
    w.theta[static_cast<std::size_t>(i)] = -1;
    w.king = theta_classify(w.theta, w.module).cls;
    w.path = GreenPath::uniform({ones(n), w.theta, ones(n, -1)});
    const StabilitySpec spec = StabilitySpec::path(w.path);
    IntVector e(n, 0);
    e[static_cast<std::size_t>(i)] = 1;
    w.simple_time = *crossing_time(w.path, e);
    w.witness_time = *crossing_time(w.path, w.dims);
    w.simple_first = true;
    for (const auto& mod : ctx.catalog().modules) {
      const auto t = crossing_time(w.path, mod.dims());
      if (!t || *t < w.simple_time) w.simple_first = false;
    }
    w.path_class = classify(spec, w.module).cls;
    rep.witnesses.push_back(std::move(w));
  }
  rep.graph_nodes = graph.nodes.size();
  rep.graph_edges = graph.edges.size();
  rep.graph_stubs = graph.stubs.size();
  rep.graph_complete = graph.complete;
  rep.max_len = max_len;
  rep.chains_found = enumerate_mgs(graph, max_len).chains.size();
  return rep;
}

ConjectureProbe probe_conjectures(const ExchangeGraph& graph, const TauContext& ctx,
                                  const std::vector<Representation>& universe, int grid) {
  ConjectureProbe out;
  const std::size_t n = static_cast<std::size_t>(ctx.n());
  std::vector<Cone> cones;
  for (const auto& node : graph.nodes) cones.push_back(Cone{g_matrix(ctx, node)});

  // grid points with coordinates k/grid in [-1, 1], skipping the origin
  std::vector<long> v(n, -grid);
  while (true) {
    if (std::any_of(v.begin(), v.end(), [](long a) { return a != 0; })) {
      RationalVector theta;
      for (long a : v) theta.emplace_back(Rational(a, grid));
      for (auto& t : theta) t.canonicalize();
      ++out.samples;
      bool wall = false;
      for (const auto& u : universe)
        if (dot(theta, u.dims()) == 0) wall = true;
      if (wall) {
        ++out.on_wall;
      } else if (std::any_of(cones.begin(), cones.end(), [&](const Cone& c) { return c.contains(theta); })) {
        ++out.in_chamber;
      } else {
        ++out.uncovered;
        if (out.uncovered_examples.size() < 8) out.uncovered_examples.push_back(theta);
      }
    }
    std::size_t i = 0;
    while (i < n && v[i] == grid) v[i++] = -grid;
    if (i == n) break;
    ++v[i];
  }

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : graph.edges) edges.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
  std::vector<std::vector<IntVector>> keys;
  for (const auto& node : graph.nodes) keys.push_back(pair_key(ctx, node));
  for (std::size_t a = 0; a < keys.size(); ++a)
    for (std::size_t b = a + 1; b < keys.size(); ++b) {
      std::vector<IntVector> common;
      std::set_intersection(keys[a].begin(), keys[a].end(), keys[b].begin(), keys[b].end(), std::back_inserter(common));
      if (common.size() + 1 != n) continue;
      ++out.face_pairs;
      if (!edges.count({a, b})) ++out.face_pairs_without_edge;
    }
  return out;
}

}  // namespace greenscan
