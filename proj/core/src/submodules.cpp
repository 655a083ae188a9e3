#include "greenscan/submodules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>

#include "greenscan/homology.hpp"
#include "rep_cache.hpp"

namespace greenscan {

namespace {

// ---------------------------------------------------------------- over F_p

using FpMatrix = std::vector<std::vector<int>>;  // rows x cols

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return 0;
}

std::optional<int> reduce_mod(const Rational& q, int p) {
  mpz_class den = q.get_den() % p;
  if (den == 0) return std::nullopt;
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  return static_cast<int>((num.get_si() * inv_mod(static_cast<int>(den.get_si()), p)) % p);
}

/// Row-reduced basis (rows are basis vectors) of a subspace of F_p^d.
struct FpSpace {
  std::vector<std::vector<int>> rows;
  bool operator<(const FpSpace& o) const { return rows < o.rows; }
  bool operator==(const FpSpace& o) const { return rows == o.rows; }
};

FpSpace fp_span(std::vector<std::vector<int>> vecs, std::size_t d, int p) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < d && r < vecs.size(); ++col) {
    std::size_t piv = r;
    while (piv < vecs.size() && vecs[piv][col] == 0) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[piv], vecs[r]);
    const int inv = inv_mod(vecs[r][col], p);
    for (auto& x : vecs[r]) x = (x * inv) % p;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i == r || vecs[i][col] == 0) continue;
      const int f = vecs[i][col];
      for (std::size_t c = 0; c < d; ++c) vecs[i][c] = ((vecs[i][c] - f * vecs[r][c]) % p + p) % p;
    }
    ++r;
  }
  vecs.resize(r);
  return {vecs};
}

std::vector<int> fp_apply(const FpMatrix& m, const std::vector<int>& x, int p) {
  std::vector<int> y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += m[i][j] * x[j];
    y[i] = s % p;
  }
  return y;
}

}  // namespace

std::optional<FiniteFieldResult> finite_field_submodule_dims(const Representation& m, int p, std::size_t max_subspaces) {
  const Algebra& a = m.alg();
  const int n = a.n();
  // basis path actions mod p
  std::vector<FpMatrix> actions(a.total_dim());
  for (std::size_t b = 0; b < a.total_dim(); ++b) {
    const Matrix& x = m.basis_action(static_cast<int>(b));
    FpMatrix fm(x.rows(), std::vector<int>(x.cols(), 0));
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) {
        auto r = reduce_mod(x(i, j), p);
        if (!r) return std::nullopt;
        fm[i][j] = *r;
      }
    actions[b] = std::move(fm);
  }
  using Lattice = std::vector<FpSpace>;  // one space per vertex
  auto cyclic = [&](int v, const std::vector<int>& x) {
    Lattice out(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) {
      std::vector<std::vector<int>> vecs;
      for (int b : a.basis_between(v, w)) vecs.push_back(fp_apply(actions[static_cast<std::size_t>(b)], x, p));
      out[static_cast<std::size_t>(w)] = fp_span(std::move(vecs), m.dim(w), p);
    }
    return out;
  };
  // projective points at each vertex
  std::vector<Lattice> generators;
  {
    std::set<Lattice> seen;
    for (int v = 0; v < n; ++v) {
      const std::size_t d = m.dim(v);
      std::vector<int> x(d, 0);
      std::size_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= static_cast<std::size_t>(p);
      for (std::size_t code = 1; code < count; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
          x[i] = static_cast<int>(c % static_cast<std::size_t>(p));
          c /= static_cast<std::size_t>(p);
        }
        // leading nonzero coordinate equal to 1
        std::size_t lead = 0;
        while (x[lead] == 0) ++lead;
        if (x[lead] != 1) continue;
        Lattice g = cyclic(v, x);
        if (seen.insert(g).second) generators.push_back(std::move(g));
      }
    }
  }
  auto join = [&](const Lattice& l, const Lattice& r) {
    Lattice out(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) {
      auto vecs = l[static_cast<std::size_t>(w)].rows;
      vecs.insert(vecs.end(), r[static_cast<std::size_t>(w)].rows.begin(), r[static_cast<std::size_t>(w)].rows.end());
      out[static_cast<std::size_t>(w)] = fp_span(std::move(vecs), m.dim(w), p);
    }
    return out;
  };
  std::set<Lattice> lattice;
  std::deque<Lattice> queue;
  Lattice zero(static_cast<std::size_t>(n));
  lattice.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Lattice l = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Lattice s = join(l, g);
      if (lattice.insert(s).second) {
        if (lattice.size() > max_subspaces) return std::nullopt;
        queue.push_back(std::move(s));
      }
    }
  }
  std::set<IntVector> dims;
  for (const auto& l : lattice) {
    IntVector d;
    for (const auto& s : l) d.push_back(static_cast<long>(s.rows.size()));
    dims.insert(d);
  }
  return FiniteFieldResult{{dims.begin(), dims.end()}, lattice.size()};
}

namespace {

SubmoduleLattice compute_lattice(const Representation& m, const SubmoduleBudget& budget) {
  const Algebra& a = m.alg();
  SubmoduleLattice out;
  std::set<VertexSubspaces> cyclic_set;
  std::vector<VertexSubspaces> cyclic;
  auto add_gen = [&](VertexSubspaces s) {
    if (cyclic_set.insert(s).second) cyclic.push_back(std::move(s));
  };
  for (int v = 0; v < a.n(); ++v) {
    const std::size_t d = m.dim(v);
    for (std::size_t i = 0; i < d; ++i) {
      Matrix x(d, 1);
      x(i, 0) = 1;
      add_gen(generated_subspaces(m, v, x));
      for (std::size_t j = i + 1; j < d; ++j) {
        for (int sign : {1, -1}) {
          Matrix y(d, 1);
          y(i, 0) = 1;
          y(j, 0) = sign;
          add_gen(generated_subspaces(m, v, y));
        }
      }
    }
  }
  // images and kernels of endomorphisms enrich the grid
  for (const auto& f : hom_basis(m, m)) {
    VertexSubspaces img = image_spaces(f, m, m);
    VertexSubspaces ker = kernel_spaces(f, m);
    for (auto* s : {&img, &ker}) {
      for (int v = 0; v < a.n(); ++v) {
        const Matrix& b = (*s)[static_cast<std::size_t>(v)];
        for (std::size_t c = 0; c < b.cols(); ++c) {
          Matrix x(b.rows(), 1);
          for (std::size_t r = 0; r < b.rows(); ++r) x(r, 0) = b(r, c);
          add_gen(generated_subspaces(m, v, x));
        }
      }
    }
  }
  std::set<VertexSubspaces> lattice;
  std::deque<VertexSubspaces> queue;
  VertexSubspaces zero = zero_spaces(m);
  lattice.insert(zero);
  queue.push_back(zero);
  bool over_budget = false;
  while (!queue.empty() && !over_budget) {
    VertexSubspaces l = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : cyclic) {
      VertexSubspaces s = sum_spaces(l, g);
      if (lattice.insert(s).second) {
        if (lattice.size() > budget.max_submodules) {
          over_budget = true;
          break;
        }
        queue.push_back(std::move(s));
      }
    }
  }
  lattice.insert(full_spaces(m));
  for (const auto& s : lattice) out.submodules.push_back({s, dimension_vector(s)});
  std::sort(out.submodules.begin(), out.submodules.end(), [](const Submodule& x, const Submodule& y) {
    if (x.dims != y.dims) return x.dims < y.dims;
    return x.spaces < y.spaces;
  });
  if (over_budget) return out;

  std::set<IntVector> grid_dims;
  for (const auto& s : out.submodules) grid_dims.insert(s.dims);
  if (m.total_dim() <= 1) {
    out.complete = true;
    return out;
  }
  if (m.total_dim() > budget.certify_max_total_dim) return out;
  // Every Q-submodule reduces to an F_p-submodule of the same dimension vector,
  // so grid ⊆ Q ⊆ F_p; equality with F_p pins the full set of dimension vectors.
  for (int p : {2, 3, 5, 7}) {
    auto res = finite_field_submodule_dims(m, p, budget.certify_max_subspaces);
    if (!res) continue;
    if (std::set<IntVector>(res->dims.begin(), res->dims.end()) == grid_dims) {
      out.complete = true;
      out.certified_by_finite_field = true;
      out.certifying_prime = p;
      out.finite_field_count = res->lattice_size;
      return out;
    }
  }
  return out;
}

}  // namespace

SubmoduleLattice submodules(const Representation& m, const SubmoduleBudget& budget) {
  RepCache& cache = m.cache();
  std::lock_guard<std::recursive_mutex> lock(cache.mutex);
  if (!cache.lattice) cache.lattice = compute_lattice(m, budget);
  return *cache.lattice;
}

}  // namespace greenscan
