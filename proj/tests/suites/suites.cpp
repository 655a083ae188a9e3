#include "suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "greenscan/errors.hpp"
#include "greenscan/geometry.hpp"
#include "greenscan/homology.hpp"
#include "greenscan/stability.hpp"
#include "greenscan/tautilt.hpp"
#include "greenscan/universe.hpp"
#include "greenscan/zoo.hpp"

using namespace greenscan;

namespace suites {

void SuiteResult::check(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (messages.size() < 8) messages.push_back(what);
}

void SuiteResult::merge(const SuiteResult& other) {
  cases += other.cases;
  failures += other.failures;
  skipped += other.skipped;
  for (const auto& m : other.messages)
    if (messages.size() < 8) messages.push_back(other.name + ": " + m);
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << name << ": " << cases << " cases, " << failures << " failures";
  if (skipped) os << ", " << skipped << " skipped";
  for (const auto& m : messages) os << "\n    " << m;
  return os.str();
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
  const long den = uniform(rng, 1, max_den);
  return Rational(uniform(rng, lo * den, hi * den), den);
}

StabilitySpec random_charge(Rng& rng, std::size_t n) {
  CentralCharge z;
  for (std::size_t i = 0; i < n; ++i) {
    z.a.push_back(random_rational(rng, -5, 5, 3));
    z.b.emplace_back(uniform(rng, 1, 5));
  }
  return StabilitySpec::charge(z);
}

/// Breakpoints with every coordinate strictly decreasing, so every nonzero
/// dimension vector crosses exactly once.
GreenPath random_monotone_path(Rng& rng, std::size_t n) {
  const std::size_t inner = static_cast<std::size_t>(uniform(rng, 1, 3));
  std::vector<RationalVector> points(inner + 2, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::set<Rational, std::greater<>> values;
    while (values.size() < inner) values.insert(Rational(uniform(rng, -11, 11), 12));
    points.front()[i] = 1;
    points.back()[i] = -1;
    std::size_t k = 1;
    for (const auto& v : values) points[k++][i] = v;
  }
  return GreenPath::uniform(points);
}

GreenPath random_free_path(Rng& rng, std::size_t n) {
  const std::size_t inner = static_cast<std::size_t>(uniform(rng, 1, 3));
  std::vector<RationalVector> points;
  points.emplace_back(n, Rational(1));
  for (std::size_t k = 0; k < inner; ++k) {
    RationalVector p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng, -2, 2, 2));
    points.push_back(p);
  }
  points.emplace_back(n, Rational(-1));
  return GreenPath::uniform(points);
}

/// Direct sum of one to three universe modules, total dimension at most max_dim.
Representation random_sum(Rng& rng, const std::vector<Representation>& universe, std::size_t max_dim) {
  std::vector<Representation> small;
  for (const auto& m : universe)
    if (m.total_dim() <= max_dim) small.push_back(m);
  const long parts = uniform(rng, 1, 3);
  std::vector<Representation> chosen;
  std::size_t total = 0;
  for (long k = 0; k < parts; ++k) {
    const auto& m = small[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(small.size()) - 1))];
    if (!chosen.empty() && total + m.total_dim() > max_dim) break;
    chosen.push_back(m);
    total += m.total_dim();
  }
  return chosen.size() == 1 ? chosen.front() : direct_sum(chosen);
}

bool semistable(StabilityClass c) { return c == StabilityClass::Stable || c == StabilityClass::Semistable; }

std::string where(const Fixture& f, const Representation& m) { return f.label + " " + dims_string(m.dims()); }

std::vector<IntVector> factor_dims(const HNFiltration& hn) {
  std::vector<IntVector> out;
  for (const auto& f : hn.factors) out.push_back(f.dims());
  return out;
}

}  // namespace

std::vector<Fixture> property_fixtures(std::uint64_t seed) {
  std::vector<std::pair<std::string, AlgebraPtr>> algebras{
      {"A2", zoo::a2()},
      {"A3", parse_algebra(zoo::linear_a_text(3))},
      {"kronecker", zoo::kronecker()},
  };
  for (std::uint64_t k = 0; k < 2; ++k) {
    const std::uint64_t s = seed + k;
    algebras.emplace_back("tree" + std::to_string(s), parse_algebra(zoo::random_tree_text(s, 3 + static_cast<int>(k))));
    algebras.emplace_back("nakayama" + std::to_string(s), parse_algebra(zoo::random_nakayama_text(s, 3)));
  }
  std::vector<Fixture> out;
  for (auto& [label, a] : algebras) {
    UniverseBounds b;
    b.dim_cap = label == "kronecker" ? 3 : 4;
    out.push_back({label, a, enumerate_indecomposables(a, b).modules});
  }
  return out;
}

std::vector<std::pair<std::string, AlgebraPtr>> random_tau_finite_algebras(std::uint64_t seed, std::size_t count) {
  std::vector<std::pair<std::string, AlgebraPtr>> out;
  for (std::uint64_t s = seed; out.size() < count && s < seed + 64; ++s) {
    const bool tree = s % 2 == 0;
    const std::string text = tree ? zoo::random_tree_text(s, 3 + static_cast<int>(s / 2 % 2)) : zoo::random_nakayama_text(s, 3);
    auto a = parse_algebra(text);
    TauBounds b;
    b.node_cap = 500;
    TauContext ctx(a, b);
    if (!exchange_graph(ctx).complete) continue;
    out.emplace_back(a->name(), a);
  }
  return out;
}

Representation scrambled(const Representation& m, std::uint64_t seed) {
  Rng rng(seed);
  const Algebra& a = m.alg();
  std::vector<Matrix> change, inverse;
  for (int v = 0; v < a.n(); ++v) {
    const std::size_t d = m.dim(v);
    for (;;) {
      Matrix g(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = uniform(rng, -2, 2);
      if (d && determinant(g) == 0) continue;
      change.push_back(g);
      inverse.push_back(d ? *solve(g, Matrix::identity(d)) : g);
      break;
    }
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    maps.push_back(change[static_cast<std::size_t>(arr.target)] * m.map(static_cast<int>(k)) *
                   inverse[static_cast<std::size_t>(arr.source)]);
  }
  return Representation(m.algebra(), m.dims(), maps, m.name());
}

SuiteResult see_saw(const std::vector<Fixture>& fixtures, std::uint64_t seed, std::size_t modules) {
  SuiteResult r{"see-saw"};
  Rng rng(seed);
  for (std::size_t it = 0; it < modules; ++it) {
    const Fixture& f = fixtures[it % fixtures.size()];
    const std::size_t n = static_cast<std::size_t>(f.algebra->n());
    const Representation m = scrambled(random_sum(rng, f.universe, 5), rng());
    const std::vector<StabilitySpec> specs{random_charge(rng, n), random_charge(rng, n),
                                           StabilitySpec::path(random_monotone_path(rng, n))};
    const auto lattice = submodules(m);
    for (const auto& sub : lattice.submodules) {
      if (sub.dims == m.dims() || std::all_of(sub.dims.begin(), sub.dims.end(), [](long x) { return x == 0; })) continue;
      const Representation q = quotient(m, sub.spaces).first;
      IntVector expect = m.dims();
      for (std::size_t v = 0; v < n; ++v) expect[v] -= sub.dims[v];
      r.check(q.dims() == expect, "quotient dims of " + where(f, m));
      for (const auto& spec : specs) {
        const PhaseValue pl = spec.phase(sub.dims), pm = spec.phase(m), pq = spec.phase(q);
        const int ways = int(pl < pm && pm < pq) + int(pl == pm && pm == pq) + int(pl > pm && pm > pq);
        r.check(ways == 1, "trichotomy for " + where(f, m) + " sub " + dims_string(sub.dims) + " " + spec.describe());
      }
    }
  }
  return r;
}

SuiteResult hn_uniqueness(const std::vector<Fixture>& fixtures, std::uint64_t seed, std::size_t modules) {
  SuiteResult r{"hn"};
  Rng rng(seed);
  for (std::size_t it = 0; it < modules; ++it) {
    const Fixture& f = fixtures[it % fixtures.size()];
    const std::size_t n = static_cast<std::size_t>(f.algebra->n());
    const Representation m = random_sum(rng, f.universe, 6);
    const StabilitySpec spec = it % 3 == 2 ? StabilitySpec::path(random_monotone_path(rng, n)) : random_charge(rng, n);
    try {
      const HNFiltration hn = hn_filtration(spec, m);
      for (std::size_t k = 1; k < hn.phases.size(); ++k)
        r.check(hn.phases[k] < hn.phases[k - 1], "phases not decreasing for " + where(f, m));
      IntVector total(n, 0);
      for (const auto& factor : hn.factors) {
        for (std::size_t v = 0; v < n; ++v) total[v] += factor.dims()[v];
        const auto c = classify(spec, factor).cls;
        if (c == StabilityClass::Inconclusive) {
          ++r.skipped;
          continue;
        }
        r.check(semistable(c), "factor " + dims_string(factor.dims()) + " of " + where(f, m) + " not semistable");
      }
      r.check(total == m.dims(), "factors do not add up for " + where(f, m));
      const HNFiltration again = hn_filtration(spec, scrambled(m, rng()));
      r.check(factor_dims(again) == factor_dims(hn) && again.phases == hn.phases,
              "factor sequence changed under a change of basis for " + where(f, m) + " " + spec.describe());
    } catch (const BoundExhausted&) {
      ++r.skipped;
    }
  }
  return r;
}

SuiteResult hom_vanishing(const std::vector<Fixture>& fixtures, std::uint64_t seed, std::size_t charges) {
  SuiteResult r{"hom-vanishing"};
  Rng rng(seed);
  for (const auto& f : fixtures) {
    const std::size_t n = static_cast<std::size_t>(f.algebra->n());
    for (std::size_t c = 0; c < charges; ++c) {
      const StabilitySpec spec = random_charge(rng, n);
      std::vector<std::size_t> ss;
      std::vector<StabilityClass> cls(f.universe.size());
      for (std::size_t i = 0; i < f.universe.size(); ++i) {
        cls[i] = classify(spec, f.universe[i]).cls;
        if (cls[i] == StabilityClass::Inconclusive) ++r.skipped;
        if (semistable(cls[i])) ss.push_back(i);
        if (cls[i] == StabilityClass::Stable)
          r.check(hom_dim(f.universe[i], f.universe[i]) == 1, "stable non-brick " + where(f, f.universe[i]));
      }
      for (auto i : ss)
        for (auto j : ss) {
          if (i == j) continue;
          const auto& x = f.universe[i];
          const auto& y = f.universe[j];
          const PhaseValue px = spec.phase(x), py = spec.phase(y);
          if (px > py) {
            r.check(hom_dim(x, y) == 0, "hom from higher phase " + where(f, x) + " -> " + dims_string(y.dims()));
          } else if (px == py && cls[i] == StabilityClass::Stable && cls[j] == StabilityClass::Stable) {
            r.check(hom_dim(x, y) == 0, "hom between equal-phase stables " + where(f, x) + " -> " + dims_string(y.dims()));
          }
        }
    }
  }
  return r;
}

SuiteResult torsion_orthogonality(const std::vector<Fixture>& fixtures, std::uint64_t seed, std::size_t charges) {
  SuiteResult r{"torsion-orthogonality"};
  Rng rng(seed);
  for (const auto& f : fixtures) {
    const std::size_t n = static_cast<std::size_t>(f.algebra->n());
    const std::size_t size = f.universe.size();
    for (std::size_t c = 0; c < charges; ++c) {
      const StabilitySpec spec = random_charge(rng, n);
      auto pick = [&] { return spec.phase(f.universe[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(size) - 1))]); };
      PhaseValue p = pick(), q = pick();
      if (q < p) std::swap(p, q);
      std::vector<TorsionSide> at_p(size), at_q(size);
      for (std::size_t i = 0; i < size; ++i) {
        at_p[i] = torsion_membership(spec, p, f.universe[i]);
        at_q[i] = torsion_membership(spec, q, f.universe[i]);
        // p <= q: T_q inside T_p and F_p inside F_q
        r.check(at_q[i] != TorsionSide::InT || at_p[i] == TorsionSide::InT, "T not monotone at " + where(f, f.universe[i]));
        r.check(at_p[i] != TorsionSide::InF || at_q[i] == TorsionSide::InF, "F not monotone at " + where(f, f.universe[i]));
      }
      for (const auto* side : {&at_p, &at_q})
        for (std::size_t i = 0; i < size; ++i) {
          if ((*side)[i] != TorsionSide::InT) continue;
          for (std::size_t j = 0; j < size; ++j)
            if ((*side)[j] == TorsionSide::InF)
              r.check(hom_dim(f.universe[i], f.universe[j]) == 0,
                      "hom(T, F) nonzero " + where(f, f.universe[i]) + " -> " + dims_string(f.universe[j].dims()));
        }
    }
  }
  return r;
}

SuiteResult unimodularity(const std::vector<Fixture>& fixtures) {
  SuiteResult r{"unimodularity"};
  for (const auto& f : fixtures) {
    TauBounds b;
    b.dim_bound = 4;
    b.node_cap = 60;
    TauContext ctx(f.algebra, b);
    const auto graph = exchange_graph(ctx);
    const std::size_t n = static_cast<std::size_t>(f.algebra->n());
    for (const auto& node : graph.nodes) {
      std::vector<RationalVector> cols;
      for (const auto& c : g_matrix(ctx, node)) cols.push_back(to_rational(c));
      const Rational det = determinant(Matrix::from_columns(n, cols));
      r.check(det == 1 || det == -1, f.label + " " + describe(ctx, node) + " has determinant " + to_fraction_string(det));
    }
  }
  return r;
}

SuiteResult darkside(const std::vector<Fixture>& fixtures, std::uint64_t seed, std::size_t paths) {
  SuiteResult r{"darkside"};
  Rng rng(seed);
  for (std::size_t k = 0; k < paths; ++k) {
    const Fixture& f = fixtures[k % fixtures.size()];
    const std::size_t n = static_cast<std::size_t>(f.algebra->n());
    GreenPath path = random_monotone_path(rng, n);
    if (k % 2) {
      // a free path when one passes validation, else the monotone one
      for (int attempt = 0; attempt < 40; ++attempt) {
        GreenPath candidate = random_free_path(rng, n);
        if (validate_path(candidate, f.universe).pass) {
          path = candidate;
          break;
        }
      }
    }
    r.check(validate_path(path, f.universe).pass, f.label + " path " + path.to_string() + " failed validation");
    std::vector<Rational> times = path.times();
    for (int s = 0; s < 6; ++s) times.push_back(random_rational(rng, 0, 1, 97));
    for (const auto& m : f.universe) {
      const auto tm = crossing_time(path, m.dims());
      r.check(tm.has_value(), "no crossing time for " + where(f, m));
      if (!tm) continue;
      r.check(rho(path, m.dims(), *tm) == 0, "rho nonzero at the crossing of " + where(f, m));
      for (const auto& t : times) {
        const bool negative = rho(path, m.dims(), t) < 0;
        r.check(negative == (t > *tm), "sign at t=" + to_fraction_string(t) + " for " + where(f, m) + " on " + path.to_string());
      }
    }
  }
  return r;
}

SuiteResult ar_formula(const std::string& label, const AlgebraPtr& algebra, int dim_cap) {
  SuiteResult r{"ar-formula " + label};
  TauBounds b;
  b.dim_bound = dim_cap;
  TauContext ctx(algebra, b);
  UniverseBounds ub;
  ub.dim_cap = dim_cap;
  const auto universe = enumerate_indecomposables(algebra, ub).modules;
  const std::size_t n = static_cast<std::size_t>(algebra->n());
  auto pairing = [&](const IntVector& g, const Representation& x) {
    long s = 0;
    for (std::size_t v = 0; v < n; ++v) s += g[v] * x.dims()[v];
    return s;
  };
  for (std::size_t i = 0; i < ctx.catalog().modules.size(); ++i) {
    const Representation& m = ctx.module(i);
    const Representation tm = tau(m);
    for (const auto& x : universe) {
      const long rhs = static_cast<long>(hom_dim(m, x)) - (tm.is_zero() ? 0L : static_cast<long>(hom_dim(x, tm)));
      r.check(pairing(ctx.g(i), x) == rhs, "module form " + m.name() + " against " + x.name());
    }
  }
  const auto graph = exchange_graph(ctx);
  for (const auto& node : graph.nodes) {
    const auto parts = pair_modules(ctx, node);
    std::vector<Representation> ps;
    for (int v : node.p) ps.push_back(projective(algebra, v));
    const IntVector g = g_vector_pair(ctx, node);
    const std::optional<Representation> m = parts.empty() ? std::nullopt : std::optional(direct_sum(parts));
    const std::optional<Representation> tm = m ? std::optional(tau(*m)) : std::nullopt;
    const std::optional<Representation> p = ps.empty() ? std::nullopt : std::optional(direct_sum(ps));
    for (const auto& x : universe) {
      long rhs = 0;
      if (m) rhs += static_cast<long>(hom_dim(*m, x));
      if (tm && !tm->is_zero()) rhs -= static_cast<long>(hom_dim(x, *tm));
      if (p) rhs -= static_cast<long>(hom_dim(*p, x));
      r.check(pairing(g, x) == rhs, "pair form " + describe(ctx, node) + " against " + x.name());
    }
  }
  return r;
}

SuiteResult semistable_coherence(const std::string& label, const AlgebraPtr& algebra, int dim_cap) {
  SuiteResult r{"semistable-coherence " + label};
  TauBounds b;
  b.dim_bound = dim_cap;
  TauContext ctx(algebra, b);
  const auto graph = exchange_graph(ctx);
  r.check(graph.complete, "exchange graph of " + label + " did not close");
  UniverseBounds ub;
  ub.dim_cap = dim_cap;
  const auto universe = enumerate_indecomposables(algebra, ub).modules;
  std::set<TauPair> almost;
  for (const auto& node : graph.nodes) {
    for (std::size_t k = 0; k < node.m.size(); ++k) {
      TauPair a = node;
      a.m.erase(a.m.begin() + static_cast<long>(k));
      almost.insert(a);
    }
    for (std::size_t k = 0; k < node.p.size(); ++k) {
      TauPair a = node;
      a.p.erase(a.p.begin() + static_cast<long>(k));
      almost.insert(a);
    }
  }
  for (const auto& a : almost) {
    const auto probe = semistable_category_probe(pair_modules(ctx, a), a.p, {}, universe);
    for (const auto& e : probe.entries)
      r.check(e.agrees && e.theta_class != StabilityClass::Inconclusive,
              describe(ctx, a) + " disagrees on " + universe[e.index].name());
    r.check(static_cast<long>(probe.stable_count) == probe.expected_stable_count,
            describe(ctx, a) + " has " + std::to_string(probe.stable_count) + " stables");
  }
  return r;
}

}  // namespace suites
