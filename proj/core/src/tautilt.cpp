#include "greenscan/tautilt.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "greenscan/errors.hpp"
#include "greenscan/parallel.hpp"

namespace greenscan {

namespace {

struct Removed {
  TauPair almost;
  bool was_module = true;
  std::size_t module = 0;
  int vertex = 0;
};

Removed remove_at(const TauPair& pair, std::size_t k) {
  Removed r;
  r.almost = pair;
  if (k < pair.m.size()) {
    r.module = pair.m[k];
    r.almost.m.erase(r.almost.m.begin() + static_cast<long>(k));
  } else if (k < pair.size()) {
    r.was_module = false;
    r.vertex = pair.p[k - pair.m.size()];
    r.almost.p.erase(r.almost.p.begin() + static_cast<long>(k - pair.m.size()));
  } else {
    throw InputError("summand position " + std::to_string(k) + " out of range");
  }
  return r;
}

// Position of the summand of `full` that is missing from `almost`.
std::size_t added_position(const TauPair& full, const TauPair& almost) {
  for (std::size_t k = 0; k < full.m.size(); ++k)
    if (!std::binary_search(almost.m.begin(), almost.m.end(), full.m[k])) return k;
  for (std::size_t k = 0; k < full.p.size(); ++k)
    if (!std::binary_search(almost.p.begin(), almost.p.end(), full.p[k])) return full.m.size() + k;
  throw InvariantViolation("completion does not add a summand");
}

}  // namespace

TauContext::TauContext(AlgebraPtr algebra, const TauBounds& bounds)
    : algebra_(std::move(algebra)), bounds_(bounds), catalog_(enumerate_indec_tau_rigid(algebra_, bounds.dim_bound, bounds.seed)) {
  for (std::size_t i = 0; i < catalog_.g_vectors.size(); ++i) by_g_[catalog_.g_vectors[i]] = i;
}

std::optional<std::size_t> TauContext::index_of(const Representation& m) const {
  const auto it = by_g_.find(g_vector(m));
  if (it == by_g_.end()) return std::nullopt;
  if (!is_isomorphic(catalog_.modules[it->second], m)) return std::nullopt;
  return it->second;
}

bool TauContext::compatible(std::size_t i, std::size_t j) const {
  const auto key = std::minmax(i, j);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = compatible_.find(key);
    if (it != compatible_.end()) return it->second;
  }
  auto vanishes = [&](std::size_t a, std::size_t b) {
    const Representation t = tau(module(b));
    return t.is_zero() || hom_dim(module(a), t) == 0;
  };
  const bool ok = vanishes(i, j) && vanishes(j, i);
  std::lock_guard<std::mutex> lock(mutex_);
  compatible_[key] = ok;
  return ok;
}

bool TauContext::generated_by(const std::vector<std::size_t>& gens, std::size_t j) const {
  if (std::find(gens.begin(), gens.end(), j) != gens.end()) return true;
  if (gens.empty()) return false;
  auto key = std::make_pair(gens, j);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = fac_.find(key);
    if (it != fac_.end()) return it->second;
  }
  std::vector<Representation> parts;
  for (std::size_t i : gens) parts.push_back(module(i));
  const bool ok = in_fac(direct_sum(parts), module(j));
  std::lock_guard<std::mutex> lock(mutex_);
  fac_[std::move(key)] = ok;
  return ok;
}

TauPair TauContext::projectives_pair() const {
  TauPair t;
  for (int v = 0; v < n(); ++v) {
    IntVector e(static_cast<std::size_t>(n()), 0);
    e[static_cast<std::size_t>(v)] = 1;
    t.m.push_back(by_g_.at(e));
  }
  std::sort(t.m.begin(), t.m.end());
  return t;
}

TauPair TauContext::shifted_pair() const {
  TauPair t;
  for (int v = 0; v < n(); ++v) t.p.push_back(v);
  return t;
}

std::vector<IntVector> g_matrix(const TauContext& ctx, const TauPair& pair) {
  std::vector<IntVector> cols;
  for (std::size_t i : pair.m) cols.push_back(ctx.g(i));
  for (int v : pair.p) {
    IntVector e(static_cast<std::size_t>(ctx.n()), 0);
    e[static_cast<std::size_t>(v)] = -1;
    cols.push_back(e);
  }
  return cols;
}

IntVector g_vector_pair(const TauContext& ctx, const TauPair& pair) {
  IntVector s(static_cast<std::size_t>(ctx.n()), 0);
  for (const auto& c : g_matrix(ctx, pair))
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += c[i];
  return s;
}

std::vector<Representation> pair_modules(const TauContext& ctx, const TauPair& pair) {
  std::vector<Representation> out;
  for (std::size_t i : pair.m) out.push_back(ctx.module(i));
  return out;
}

std::string describe(const TauContext& ctx, const TauPair& pair) {
  std::ostringstream os;
  os << '(';
  std::vector<std::string> names;
  for (auto i : pair.m) names.push_back(ctx.module(i).name());
  std::sort(names.begin(), names.end());
  if (names.empty()) os << '0';
  for (std::size_t k = 0; k < names.size(); ++k) os << (k ? "+" : "") << names[k];
  os << ", ";
  if (pair.p.empty()) os << '0';
  for (std::size_t k = 0; k < pair.p.size(); ++k) os << (k ? "+" : "") << "P(" << ctx.algebra()->vertex_id(pair.p[k]) << ')';
  os << ')';
  return os.str();
}

std::vector<IntVector> pair_key(const TauContext& ctx, const TauPair& pair) {
  auto cols = g_matrix(ctx, pair);
  std::sort(cols.begin(), cols.end());
  return cols;
}

RigidityCertificate is_tau_rigid(const std::vector<Representation>& m, const std::vector<int>& p) {
  RigidityCertificate cert;
  for (std::size_t j = 0; j < m.size(); ++j) {
    const Representation t = tau(m[j]);
    if (t.is_zero()) continue;
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto basis = hom_basis(m[i], t);
      if (!basis.empty()) {
        cert.rigid = false;
        cert.reason = "Hom(M" + std::to_string(i + 1) + ", tau M" + std::to_string(j + 1) + ") is nonzero";
        cert.witness = basis.front();
        return cert;
      }
    }
  }
  for (int v : p) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].dim(v) == 0) continue;
      const AlgebraPtr& a = m[i].algebra();
      auto basis = hom_basis(projective(a, v), m[i]);
      cert.rigid = false;
      cert.reason = "Hom(P(" + std::to_string(a->vertex_id(v)) + "), M" + std::to_string(i + 1) + ") is nonzero";
      cert.witness = basis.front();
      return cert;
    }
  }
  return cert;
}

bool fac_contained(const TauContext& ctx, const TauPair& a, const TauPair& b) {
  for (std::size_t j : a.m)
    if (!ctx.generated_by(b.m, j)) return false;
  return true;
}

std::vector<TauPair> complete_almost(const TauContext& ctx, const TauPair& almost) {
  const int n = ctx.n();
  if (static_cast<int>(almost.size()) != n - 1) throw InputError("an almost complete pair has n - 1 summands");
  std::vector<TauPair> out;
  for (std::size_t y = 0; y < ctx.catalog().modules.size(); ++y) {
    if (std::binary_search(almost.m.begin(), almost.m.end(), y)) continue;
    const Representation& my = ctx.module(y);
    bool ok = true;
    for (int v : almost.p) ok = ok && my.dim(v) == 0;
    for (std::size_t x : almost.m) ok = ok && ctx.compatible(x, y);
    if (!ok) continue;
    TauPair t = almost;
    t.m.insert(std::upper_bound(t.m.begin(), t.m.end(), y), y);
    out.push_back(std::move(t));
  }
  for (int v = 0; v < n; ++v) {
    if (std::binary_search(almost.p.begin(), almost.p.end(), v)) continue;
    bool ok = true;
    for (std::size_t x : almost.m) ok = ok && ctx.module(x).dim(v) == 0;
    if (!ok) continue;
    TauPair t = almost;
    t.p.insert(std::upper_bound(t.p.begin(), t.p.end(), v), v);
    out.push_back(std::move(t));
  }
  if (out.size() < 2)
    throw BoundExhausted("almost complete pair " + describe(ctx, almost) + " has " + std::to_string(out.size()) +
                         " completion(s) among " + ctx.catalog().bound_label());
  if (out.size() > 2)
    throw InvariantViolation("almost complete pair " + describe(ctx, almost) + " has " + std::to_string(out.size()) + " completions");
  return out;
}

Mutation mutate(const TauContext& ctx, const TauPair& pair, std::size_t k) {
  const Removed r = remove_at(pair, k);
  const auto completions = complete_almost(ctx, r.almost);
  Mutation mu;
  if (completions[0] == pair) {
    mu.result = completions[1];
  } else if (completions[1] == pair) {
    mu.result = completions[0];
  } else {
    throw InvariantViolation(describe(ctx, pair) + " is not a completion of its own almost complete part");
  }
  const bool up = fac_contained(ctx, pair, mu.result);
  const bool down = fac_contained(ctx, mu.result, pair);
  if (up == down) throw InvariantViolation("mutation of " + describe(ctx, pair) + " does not change Fac strictly");
  mu.result_is_larger = up;
  const TauPair& larger = up ? mu.result : pair;
  const std::size_t pos = added_position(larger, r.almost);
  if (pos >= larger.m.size()) throw InvariantViolation("the larger completion exchanges a projective of the P side");
  const Representation& x = ctx.module(larger.m[pos]);
  const auto rest = pair_modules(ctx, r.almost);
  mu.wall_brick = rest.empty() ? x : right_approximation(x, direct_sum(rest)).cokernel;
  mu.wall_brick = mu.wall_brick.renamed(standard_name(mu.wall_brick));
  return mu;
}

std::vector<std::size_t> ExchangeGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges) {
    if (e.from == v) out.push_back(e.to);
    if (e.to == v) out.push_back(e.from);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExchangeGraph exchange_graph(const TauContext& ctx) {
  ExchangeGraph g;
  g.node_cap = ctx.bounds().node_cap;
  g.dim_bound = ctx.bounds().dim_bound;
  std::map<std::vector<IntVector>, std::size_t> ids;
  std::deque<std::size_t> queue;
  std::set<std::pair<std::size_t, std::size_t>> done, edge_keys;
  auto add = [&](const TauPair& t) -> std::optional<std::size_t> {
    auto key = pair_key(ctx, t);
    const auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (g.nodes.size() >= g.node_cap) return std::nullopt;
    const std::size_t id = g.nodes.size();
    ids.emplace(std::move(key), id);
    g.nodes.push_back(t);
    queue.push_back(id);
    return id;
  };
  g.top = add(ctx.projectives_pair());
  g.bottom = add(ctx.shifted_pair());
  const auto n = static_cast<std::size_t>(ctx.n());
  struct Job {
    std::size_t v = 0, k = 0;
    std::optional<Mutation> mu;
    std::string error;
  };
  while (!queue.empty()) {
    // Mutate a whole BFS wave concurrently, then merge in queue order.
    std::vector<Job> jobs;
    for (auto v : queue)
      for (std::size_t k = 0; k < n; ++k)
        if (!done.count({v, k})) jobs.push_back({v, k, std::nullopt, {}});
    queue.clear();
    parallel_for(jobs.size(), [&](std::size_t i) {
      try {
        jobs[i].mu = mutate(ctx, g.nodes[jobs[i].v], jobs[i].k);
      } catch (const BoundExhausted& e) {
        jobs[i].error = e.what();
      }
    });
    for (auto& job : jobs) {
      const std::size_t v = job.v, k = job.k;
      if (done.count({v, k})) continue;
      done.insert({v, k});
      if (!job.mu) {
        g.stubs.push_back({v, k, job.error});
        continue;
      }
      Mutation& mu = *job.mu;
      const auto w = add(mu.result);
      if (!w) {
        g.stubs.push_back({v, k, "node cap " + std::to_string(g.node_cap) + " reached"});
        continue;
      }
      done.insert({*w, added_position(mu.result, remove_at(g.nodes[v], k).almost)});
      const auto key = std::minmax(v, *w);
      if (edge_keys.insert(key).second) {
        ExchangeEdge e;
        e.from = mu.result_is_larger ? *w : v;
        e.to = mu.result_is_larger ? v : *w;
        e.brick = std::move(mu.wall_brick);
        g.edges.push_back(std::move(e));
      }
    }
  }
  g.complete = g.stubs.empty();
  return g;
}

MgsChains enumerate_mgs(const ExchangeGraph& graph, std::size_t max_len, std::size_t max_chains) {
  MgsChains out;
  if (!graph.top || !graph.bottom) return out;
  const std::size_t nn = graph.nodes.size();
  std::vector<std::vector<std::size_t>> up(nn), down(nn);
  for (const auto& e : graph.edges) {
    up[e.to].push_back(e.from);
    down[e.from].push_back(e.to);
  }
  for (auto& u : up) std::sort(u.begin(), u.end());
  // distance to the top along upward edges, for pruning
  const std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(nn, inf);
  std::deque<std::size_t> queue{*graph.top};
  dist[*graph.top] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : down[v])
      if (dist[w] == inf) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  std::vector<std::size_t> path{*graph.bottom};
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (out.count_capped) return;
    if (v == *graph.top) {
      if (out.chains.size() >= max_chains) {
        out.count_capped = true;
        return;
      }
      out.chains.push_back(path);
      return;
    }
    for (std::size_t w : up[v]) {
      if (dist[w] == inf) continue;
      if (path.size() + dist[w] > max_len) {
        out.length_capped = true;
        continue;
      }
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  if (dist[*graph.bottom] != inf) dfs(dfs, *graph.bottom);
  std::sort(out.chains.begin(), out.chains.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.complete = graph.complete && !out.length_capped && !out.count_capped;
  return out;
}

std::vector<bool> fac_membership(const TauContext& ctx, const TauPair& pair, const std::vector<Representation>& universe) {
  std::vector<bool> out(universe.size(), false);
  if (pair.m.empty()) return out;
  const Representation gen = direct_sum(pair_modules(ctx, pair));
  for (std::size_t i = 0; i < universe.size(); ++i) out[i] = in_fac(gen, universe[i]);
  return out;
}

}  // namespace greenscan
