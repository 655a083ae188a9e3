#include "greenscan/universe.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "greenscan/errors.hpp"
#include "greenscan/homology.hpp"

namespace greenscan {

namespace {

long total_of(const IntVector& v) {
  long t = 0;
  for (long x : v) t += x;
  return t;
}

std::size_t complexity(const Representation& m) {
  std::size_t c = 0;
  for (const auto& a : m.maps())
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (sgn(a(r, k)) != 0) c += 1 + mpz_sizeinbase(a(r, k).get_num_mpz_t(), 2) + mpz_sizeinbase(a(r, k).get_den_mpz_t(), 2);
  return c;
}

struct ExtensionSpace {
  std::vector<int> outs;                // arrows leaving the vertex
  std::vector<std::size_t> offsets;     // unknown offset of c_a for each out arrow
  std::size_t unknowns = 0;
  Matrix classes;                       // columns: cocycles spanning a complement of the coboundaries
};

// Cocycles c = (c_a) for arrows a leaving vertex i, c_a in X_{t(a)}, such that the
// relations starting at i kill the new vector; modulo c_a = X_a x.
ExtensionSpace extension_space(const Representation& x, int i) {
  const Algebra& a = x.alg();
  ExtensionSpace es;
  std::vector<std::size_t> offset_of(a.arrows().size(), 0);
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    if (a.arrows()[k].source != i) continue;
    es.outs.push_back(static_cast<int>(k));
    es.offsets.push_back(es.unknowns);
    offset_of[k] = es.unknowns;
    es.unknowns += x.dim(a.arrows()[k].target);
  }
  if (es.unknowns == 0) {
    es.classes = Matrix(0, 0);
    return es;
  }
  std::vector<Matrix> rows;
  for (const auto& rel : a.relations()) {
    const Path& lead = rel.terms.front().path;
    if (a.arrows()[static_cast<std::size_t>(lead.front())].source != i) continue;
    const int rel_target = a.arrows()[static_cast<std::size_t>(lead.back())].target;
    Matrix block(x.dim(rel_target), es.unknowns);
    for (const auto& term : rel.terms) {
      const int first = term.path.front();
      const Path rest(term.path.begin() + 1, term.path.end());
      const int mid = a.arrows()[static_cast<std::size_t>(first)].target;
      const Matrix act = x.path_action(rest, mid);
      const std::size_t off = offset_of[static_cast<std::size_t>(first)];
      for (std::size_t r = 0; r < act.rows(); ++r)
        for (std::size_t c = 0; c < act.cols(); ++c) block(r, off + c) += term.coefficient * act(r, c);
    }
    rows.push_back(std::move(block));
  }
  Matrix z = Matrix::identity(es.unknowns);
  if (!rows.empty()) {
    Matrix cons = rows.front();
    for (std::size_t k = 1; k < rows.size(); ++k) cons = vstack(cons, rows[k]);
    z = nullspace(cons);
  }
  Matrix b(es.unknowns, x.dim(i));
  for (std::size_t k = 0; k < es.outs.size(); ++k) {
    const Matrix& xa = x.map(es.outs[k]);
    for (std::size_t r = 0; r < xa.rows(); ++r)
      for (std::size_t c = 0; c < xa.cols(); ++c) b(es.offsets[k] + r, c) = xa(r, c);
  }
  Matrix span = column_space(b);
  std::size_t rk = span.cols();
  std::vector<Matrix> chosen;
  for (std::size_t c = 0; c < z.cols(); ++c) {
    Matrix trial = hstack(span, z.columns(c, 1));
    const std::size_t r2 = rank(trial);
    if (r2 > rk) {
      span = trial;
      rk = r2;
      chosen.push_back(z.columns(c, 1));
    }
  }
  es.classes = Matrix(es.unknowns, 0);
  for (const auto& c : chosen) es.classes = hstack(es.classes, c);
  return es;
}

Representation extend(const Representation& x, int i, const ExtensionSpace& es, const Matrix& cocycle) {
  const Algebra& a = x.alg();
  IntVector dims = x.dims();
  dims[static_cast<std::size_t>(i)] += 1;
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    Matrix m(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]),
             static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]));
    const Matrix& xa = x.map(static_cast<int>(k));
    for (std::size_t r = 0; r < xa.rows(); ++r)
      for (std::size_t c = 0; c < xa.cols(); ++c) m(r, c) = xa(r, c);
    if (arr.source == i) {
      const auto pos = static_cast<std::size_t>(std::find(es.outs.begin(), es.outs.end(), static_cast<int>(k)) - es.outs.begin());
      const std::size_t newcol = x.dim(i);
      for (std::size_t r = 0; r < x.dim(arr.target); ++r) m(r, newcol) = cocycle(es.offsets[pos] + r, 0);
    }
    maps.push_back(std::move(m));
  }
  return Representation(x.algebra(), std::move(dims), std::move(maps));
}

class UniverseBuilder {
 public:
  UniverseBuilder(const AlgebraPtr& alg, const UniverseBounds& b) : alg_(alg), bounds_(b), rng_(b.seed) {}

  Universe run() {
    const int n = alg_->n();
    for (int v = 0; v < n; ++v) offer(simple(alg_, v));
    const long max_total = static_cast<long>(n) * bounds_.dim_cap;
    for (long level = 2; level <= max_total && !full(); ++level) {
      std::vector<Representation> sources;
      for (const auto& m : found_)
        if (static_cast<long>(m.total_dim()) == level - 1) sources.push_back(m);
      for (std::size_t p = 0; p < found_.size(); ++p)
        for (std::size_t q = p; q < found_.size(); ++q)
          if (static_cast<long>(found_[p].total_dim() + found_[q].total_dim()) == level - 1)
            sources.push_back(direct_sum(found_[p], found_[q]));
      for (const auto& x : sources) {
        for (int i = 0; i < n && !full(); ++i) {
          if (static_cast<long>(x.dim(i)) + 1 > bounds_.dim_cap) continue;
          extend_from(x, i);
        }
        if (full()) break;
      }
    }
    Universe u;
    u.dim_cap = bounds_.dim_cap;
    u.saturated = !capped_;
    u.modules = found_;
    std::stable_sort(u.modules.begin(), u.modules.end(), [](const Representation& a, const Representation& b) {
      if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
      return a.dims() < b.dims();
    });
    return u;
  }

 private:
  bool full() const { return found_.size() >= bounds_.max_modules; }

  void extend_from(const Representation& x, int i) {
    const ExtensionSpace es = extension_space(x, i);
    const std::size_t k = es.classes.cols();
    if (k == 0) return;
    for (std::size_t c = 0; c < k; ++c) offer(extend(x, i, es, es.classes.columns(c, 1)));
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < bounds_.random_extensions && k > 1; ++t) {
      Matrix w(k, 1);
      bool nonzero = false;
      for (std::size_t c = 0; c < k; ++c) {
        w(c, 0) = coef(rng_);
        nonzero = nonzero || sgn(w(c, 0)) != 0;
      }
      if (!nonzero) continue;
      offer(extend(x, i, es, es.classes * w));
    }
  }

  void offer(const Representation& e) {
    if (full()) {
      capped_ = true;
      return;
    }
    if (!is_absolutely_indecomposable(e)) return;
    auto& bucket = by_dims_[e.dims()];
    for (std::size_t idx : bucket)
      if (is_isomorphic(found_[idx], e)) {
        // keep the simpler basis; later extension classes are read off from it
        if (complexity(e) < complexity(found_[idx])) found_[idx] = e.renamed(found_[idx].name());
        return;
      }
    if (bucket.size() >= bounds_.per_dimension_vector) {
      capped_ = true;
      return;
    }
    bucket.push_back(found_.size());
    found_.push_back(e.renamed(standard_name(e)));
  }

  AlgebraPtr alg_;
  UniverseBounds bounds_;
  std::mt19937_64 rng_;
  std::vector<Representation> found_;
  std::map<IntVector, std::vector<std::size_t>> by_dims_;
  bool capped_ = false;
};

struct BoxSearch {
  AlgebraPtr alg;
  int bound;
  std::mt19937_64 rng;
  std::vector<IntVector> pdims;      // dims of P(i)
  std::map<IntVector, Representation> found;
  std::vector<std::pair<IntVector, IntVector>> pending;  // (P0, P1) multiplicities
  std::map<std::pair<IntVector, IntVector>, bool> compatible_;
  std::size_t tried = 0;

  // Smaller presentations first, so that the summands of a decomposable
  // cokernel are already in `found` when it comes up.
  void run() {
    IntVector c0(static_cast<std::size_t>(alg->n()), 0);
    assign_top(c0, 0);
    auto size = [](const std::pair<IntVector, IntVector>& c) { return total_of(c.first) + total_of(c.second); };
    std::stable_sort(pending.begin(), pending.end(), [&](const auto& a, const auto& b) { return size(a) < size(b); });
    for (const auto& [top, syz] : pending) try_vector(top, syz);
  }

  static bool rigid_pair(const Representation& x, const Representation& y) {
    const Representation tx = tau(x), ty = tau(y);
    return (ty.is_zero() || hom_dim(x, ty) == 0) && (tx.is_zero() || hom_dim(y, tx) == 0);
  }

  bool found_compatible(const IntVector& a, const IntVector& b) {
    const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = compatible_.find(key);
    if (it == compatible_.end()) it = compatible_.emplace(key, rigid_pair(found.at(a), found.at(b))).first;
    return it->second;
  }

  // Tau-rigid modules are determined by their g-vectors, so a tau-rigid m is
  // decomposable as soon as g is a positive integer combination of g-vectors of
  // pairwise compatible catalog modules compatible with m.
  bool splits_over_found(const Representation& m, const IntVector& g) {
    std::vector<IntVector> cand;
    for (const auto& [h, x] : found)
      if (rigid_pair(m, x)) cand.push_back(h);
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
      if (!chosen.empty() && positive_combination(cand, chosen, g)) return true;
      if (chosen.size() == static_cast<std::size_t>(alg->n())) return false;
      for (std::size_t i = from; i < cand.size(); ++i) {
        bool ok = true;
        for (std::size_t j : chosen) ok = ok && found_compatible(cand[i], cand[j]);
        if (!ok) continue;
        chosen.push_back(i);
        if (dfs(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    return dfs(0);
  }

  static bool positive_combination(const std::vector<IntVector>& cand, const std::vector<std::size_t>& chosen,
                                   const IntVector& g) {
    const std::size_t n = g.size();
    Matrix a(n, chosen.size()), b(n, 1);
    for (std::size_t r = 0; r < n; ++r) {
      b(r, 0) = g[r];
      for (std::size_t c = 0; c < chosen.size(); ++c) a(r, c) = cand[chosen[c]][r];
    }
    const auto x = solve(a, b);
    if (!x) return false;
    Rational total = 0;
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      const Rational& q = (*x)(c, 0);
      if (q <= 0 || q.get_den() != 1) return false;
      total += q;
    }
    return total >= 2;
  }

  Element random_radical_element(int from, int to, long range) {
    // element of e_from A e_to with no trivial-path part
    std::uniform_int_distribution<long> coef(-range, range);
    Element x;
    for (int b : alg->basis_between(from, to)) {
      if (alg->basis()[static_cast<std::size_t>(b)].arrows.empty()) continue;
      long c = 0;
      while (c == 0) c = coef(rng);
      x.emplace_back(b, Rational(c));
    }
    std::sort(x.begin(), x.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return x;
  }

  void try_vector(const IntVector& c0, const IntVector& c1) {
    const int n = alg->n();
    std::vector<int> p0, p1;
    for (int v = 0; v < n; ++v) {
      for (long k = 0; k < c0[static_cast<std::size_t>(v)]; ++k) p0.push_back(v);
      for (long k = 0; k < c1[static_cast<std::size_t>(v)]; ++k) p1.push_back(v);
    }
    if (p0.empty()) return;
    if (p1.empty() && p0.size() > 1) return;  // a sum of projectives
    ++tried;
    IntVector g(c0.size());
    for (std::size_t v = 0; v < g.size(); ++v) g[v] = c0[v] - c1[v];
    // g-vectors of tau-rigid indecomposables are primitive (part of a Z-basis)
    long content = 0;
    for (long x : g) content = std::gcd(content, std::abs(x));
    if (content != 1) return;
    // A tau-rigid cokernel with the right g-vector is the generic one whatever
    // the coefficients, so small ones are tried first and keep End cheap.
    for (long range : {9L, 1000000L}) {
      auto m = tau_rigid_cokernel(p0, p1, g, range);
      if (!m) continue;
      if (hom_dim(*m, *m) > 1 && splits_over_found(*m, g)) return;
      if (is_absolutely_indecomposable(*m)) found.emplace(g, m->renamed(standard_name(*m, true)));
      return;
    }
  }

  std::optional<Representation> tau_rigid_cokernel(const std::vector<int>& p0, const std::vector<int>& p1,
                                                   const IntVector& g, long range) {
    std::vector<std::vector<Element>> comp(p1.size(), std::vector<Element>(p0.size()));
    for (std::size_t r = 0; r < p1.size(); ++r)
      for (std::size_t c = 0; c < p0.size(); ++c) comp[r][c] = random_radical_element(p0[c], p1[r], range);
    const PresentationMaps pm = projective_map(alg, p1, p0, comp);
    for (int v = 0; v < alg->n(); ++v) {
      const long d = static_cast<long>(pm.p0.dim(v)) - static_cast<long>(rank(pm.map.blocks[static_cast<std::size_t>(v)]));
      if (d > bound) return std::nullopt;
    }
    Representation m = cokernel(pm.map, pm.p1, pm.p0).first;
    if (g_vector(m) != g || !is_tau_rigid_module(m)) return std::nullopt;
    return m;
  }

  // Assign P0 multiplicities vertex by vertex, then P1 multiplicities on the rest.
  void assign_top(IntVector& c0, int v) {
    const int n = alg->n();
    if (v == n) {
      IntVector p0dims(static_cast<std::size_t>(n), 0), rad(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        for (int w = 0; w < n; ++w) {
          p0dims[static_cast<std::size_t>(w)] += c0[static_cast<std::size_t>(i)] * pdims[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)];
          rad[static_cast<std::size_t>(w)] += c0[static_cast<std::size_t>(i)] * (pdims[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)] - (i == w ? 1 : 0));
        }
      if (total_of(c0) == 0) return;
      IntVector c1(static_cast<std::size_t>(n), 0);
      assign_bottom(c0, c1, p0dims, rad, 0);
      return;
    }
    for (long k = 0; k <= bound; ++k) {
      c0[static_cast<std::size_t>(v)] = k;
      assign_top(c0, v + 1);
    }
    c0[static_cast<std::size_t>(v)] = 0;
  }

  void assign_bottom(const IntVector& c0, IntVector& c1, const IntVector& p0dims, const IntVector& rad, int v) {
    const int n = alg->n();
    if (v == n) {
      // lower bound for the cokernel dimensions
      for (int w = 0; w < n; ++w) {
        long p1d = 0;
        for (int j = 0; j < n; ++j) p1d += c1[static_cast<std::size_t>(j)] * pdims[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)];
        const long low = std::max(c0[static_cast<std::size_t>(w)], p0dims[static_cast<std::size_t>(w)] - p1d);
        if (low > bound) return;
      }
      pending.emplace_back(c0, c1);
      return;
    }
    const auto sv = static_cast<std::size_t>(v);
    const long limit = c0[sv] > 0 ? 0 : rad[sv];
    for (long k = 0; k <= limit; ++k) {
      c1[sv] = k;
      assign_bottom(c0, c1, p0dims, rad, v + 1);
    }
    c1[sv] = 0;
  }
};

}  // namespace

std::string Universe::bound_label() const {
  std::ostringstream os;
  os << "indecomposables by extension search, dim <= " << dim_cap << " per vertex"
     << (saturated ? "" : ", count cap reached");
  return os.str();
}

std::string TauRigidCatalog::bound_label() const {
  std::ostringstream os;
  os << "tau-rigid indecomposables with dim <= " << dim_bound << " per vertex";
  return os.str();
}

Universe enumerate_indecomposables(const AlgebraPtr& algebra, const UniverseBounds& bounds) {
  if (bounds.dim_cap < 1) throw InputError("dimension cap must be positive");
  return UniverseBuilder(algebra, bounds).run();
}

bool is_tau_rigid_module(const Representation& m) {
  if (m.is_zero()) return true;
  const Representation t = tau(m);
  return t.is_zero() || hom_dim(m, t) == 0;
}

TauRigidCatalog enumerate_indec_tau_rigid(const AlgebraPtr& algebra, int dim_bound, std::uint64_t seed) {
  if (dim_bound < 1) throw InputError("dimension bound must be positive");
  BoxSearch box{algebra, dim_bound, std::mt19937_64(seed), {}, {}, {}, {}, 0};
  for (int i = 0; i < algebra->n(); ++i) box.pdims.push_back(projective(algebra, i).dims());
  box.run();
  for (int i = 0; i < algebra->n(); ++i) {
    IntVector g(static_cast<std::size_t>(algebra->n()), 0);
    g[static_cast<std::size_t>(i)] = 1;
    if (!box.found.count(g)) {
      const Representation p = projective(algebra, i);
      box.found.emplace(g, p.renamed(standard_name(p, true)));
    }
  }
  TauRigidCatalog cat;
  cat.dim_bound = dim_bound;
  cat.presentations_tried = box.tried;
  for (auto& [g, m] : box.found) {
    cat.g_vectors.push_back(g);
    cat.modules.push_back(m);
  }
  return cat;
}

std::string standard_name(const Representation& m, bool projective_first) {
  const AlgebraPtr& a = m.algebra();
  const int n = a->n();
  auto label = [&](char c, int v) {
    std::ostringstream os;
    os << c << '(' << a->vertex_id(v) << ')';
    return os.str();
  };
  auto as_projective = [&]() -> std::string {
    for (int v = 0; v < n; ++v) {
      const Representation p = projective(a, v);
      if (p.dims() == m.dims() && is_isomorphic(p, m)) return label('P', v);
    }
    return {};
  };
  if (projective_first) {
    if (auto s = as_projective(); !s.empty()) return s;
  }
  for (int v = 0; v < n; ++v) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(v)] = 1;
    if (m.dims() == e) return label('S', v);
  }
  if (auto s = as_projective(); !s.empty()) return s;
  for (int v = 0; v < n; ++v) {
    const Representation q = injective(a, v);
    if (q.dims() == m.dims() && is_isomorphic(q, m)) return label('I', v);
  }
  return "M" + dims_string(m.dims());
}

}  // namespace greenscan
