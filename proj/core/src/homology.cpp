#include "greenscan/homology.hpp"

#include <algorithm>
#include <mutex>
#include <random>

#include "greenscan/errors.hpp"
#include "rep_cache.hpp"

namespace greenscan {

namespace {

struct HomSystem {
  Matrix equations;
  std::vector<std::size_t> offsets;  // start of the block for each vertex in the unknown vector
  std::size_t unknowns = 0;
};

HomSystem hom_system(const Representation& m, const Representation& n) {
  const Algebra& a = m.alg();
  HomSystem sys;
  for (int v = 0; v < a.n(); ++v) {
    sys.offsets.push_back(sys.unknowns);
    sys.unknowns += n.dim(v) * m.dim(v);
  }
  std::size_t rows = 0;
  for (const auto& arr : a.arrows()) rows += n.dim(arr.target) * m.dim(arr.source);
  sys.equations = Matrix(rows, sys.unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    const Matrix& ma = m.map(static_cast<int>(k));
    const Matrix& na = n.map(static_cast<int>(k));
    const std::size_t ns = n.dim(arr.source), nt = n.dim(arr.target);
    const std::size_t ms = m.dim(arr.source), mt = m.dim(arr.target);
    const std::size_t off_s = sys.offsets[static_cast<std::size_t>(arr.source)];
    const std::size_t off_t = sys.offsets[static_cast<std::size_t>(arr.target)];
    // (f_t M_a - N_a f_s)(i, j) = 0
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t j = 0; j < ms; ++j) {
        for (std::size_t k2 = 0; k2 < mt; ++k2)
          if (sgn(ma(k2, j)) != 0) sys.equations(row, off_t + i * mt + k2) += ma(k2, j);
        for (std::size_t l = 0; l < ns; ++l)
          if (sgn(na(i, l)) != 0) sys.equations(row, off_s + l * ms + j) -= na(i, l);
        ++row;
      }
    }
  }
  return sys;
}

Morphism morphism_from_vector(const Representation& m, const Representation& n, const HomSystem& sys,
                              const Matrix& vecs, std::size_t col) {
  Morphism f;
  for (int v = 0; v < m.alg().n(); ++v) {
    Matrix b(n.dim(v), m.dim(v));
    const std::size_t off = sys.offsets[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < n.dim(v); ++i)
      for (std::size_t j = 0; j < m.dim(v); ++j) b(i, j) = vecs(off + i * m.dim(v) + j, col);
    f.blocks.push_back(std::move(b));
  }
  return f;
}

Rational trace_of(const Matrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(b(k, i)) != 0) t += a(i, k) * b(k, i);
  return t;
}

Presentation compute_presentation(const Representation& m) {
  const Algebra& a = m.alg();
  const AlgebraPtr& alg = m.algebra();
  Presentation pres;
  pres.p0_multiplicities.assign(static_cast<std::size_t>(a.n()), 0);
  pres.p1_multiplicities.assign(static_cast<std::size_t>(a.n()), 0);

  const VertexSubspaces rad = radical_spaces(m);
  for (int v = 0; v < a.n(); ++v) {
    const Matrix gens = complement_basis(rad[static_cast<std::size_t>(v)].cols() ? rad[static_cast<std::size_t>(v)]
                                                                                   : Matrix(m.dim(v), 0));
    for (std::size_t k = 0; k < gens.cols(); ++k) {
      pres.p0.push_back(v);
      pres.top_generators.push_back(gens.column(k));
      ++pres.p0_multiplicities[static_cast<std::size_t>(v)];
    }
  }
  if (pres.p0.empty()) return pres;

  std::vector<Representation> parts;
  for (int v : pres.p0) parts.push_back(projective(alg, v));
  const Representation p0 = direct_sum(parts);

  // projective cover P0 -> M
  Morphism cover;
  for (int w = 0; w < a.n(); ++w) {
    Matrix block(m.dim(w), p0.dim(w));
    std::size_t col = 0;
    for (std::size_t c = 0; c < pres.p0.size(); ++c) {
      for (int b : a.basis_between(pres.p0[c], w)) {
        const RationalVector img = m.basis_action(b) * pres.top_generators[c];
        for (std::size_t r = 0; r < img.size(); ++r) block(r, col) = img[r];
        ++col;
      }
    }
    cover.blocks.push_back(std::move(block));
  }
  const VertexSubspaces kspaces = kernel_spaces(cover, p0);
  const auto [k, kinc] = subrepresentation(p0, kspaces);
  const VertexSubspaces krad = radical_spaces(k);
  for (int u = 0; u < a.n(); ++u) {
    const auto su = static_cast<std::size_t>(u);
    const Matrix gens = complement_basis(krad[su].cols() ? krad[su] : Matrix(k.dim(u), 0));
    for (std::size_t g = 0; g < gens.cols(); ++g) {
      const RationalVector y = kinc.blocks[su] * gens.column(g);
      std::vector<Element> row(pres.p0.size());
      std::size_t pos = 0;
      for (std::size_t c = 0; c < pres.p0.size(); ++c) {
        for (int b : a.basis_between(pres.p0[c], u)) {
          if (sgn(y[pos]) != 0) row[c].push_back({b, y[pos]});
          ++pos;
        }
      }
      pres.p1.push_back(u);
      pres.components.push_back(std::move(row));
      ++pres.p1_multiplicities[su];
    }
  }
  if (!presentation_is_minimal(pres, a)) throw InvariantViolation("projective presentation is not minimal");
  return pres;
}

}  // namespace

VertexSubspaces radical_spaces(const Representation& m) {
  const Algebra& a = m.alg();
  VertexSubspaces out = zero_spaces(m);
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto t = static_cast<std::size_t>(a.arrows()[k].target);
    const Matrix& x = m.map(static_cast<int>(k));
    if (x.cols() == 0 || x.rows() == 0) continue;
    out[t] = hstack(out[t], x);
  }
  for (std::size_t v = 0; v < out.size(); ++v)
    if (out[v].cols()) out[v] = column_space(out[v]);
  return out;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  const HomSystem sys = hom_system(m, n);
  if (sys.unknowns == 0) return {};
  const Matrix k = nullspace(sys.equations);
  std::vector<Morphism> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(morphism_from_vector(m, n, sys, k, c));
  return out;
}

std::size_t hom_dim_direct(const Representation& m, const Representation& n) {
  const HomSystem sys = hom_system(m, n);
  if (sys.unknowns == 0) return 0;
  return sys.unknowns - fast_rank(sys.equations);
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  const Presentation& p = min_projective_presentation(m);
  const Algebra& a = m.alg();
  std::vector<std::size_t> col_off, row_off;
  std::size_t cols = 0, rows = 0;
  for (int v : p.p0) {
    col_off.push_back(cols);
    cols += n.dim(v);
  }
  for (int v : p.p1) {
    row_off.push_back(rows);
    rows += n.dim(v);
  }
  if (cols == 0) return 0;
  if (rows == 0) return cols;
  Matrix sys(rows, cols);
  for (std::size_t r = 0; r < p.p1.size(); ++r) {
    for (std::size_t c = 0; c < p.p0.size(); ++c) {
      const Element& q = p.components[r][c];
      if (q.empty()) continue;
      const Matrix block = n.element_action(q, p.p0[c], p.p1[r]);
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) sys(row_off[r] + i, col_off[c] + j) = block(i, j);
    }
  }
  (void)a;
  return cols - fast_rank(sys);
}

Presentation min_projective_presentation(const Representation& m) {
  RepCache& cache = m.cache();
  std::lock_guard<std::recursive_mutex> lock(cache.mutex);
  if (!cache.presentation) cache.presentation = compute_presentation(m);
  return *cache.presentation;
}

bool presentation_is_minimal(const Presentation& p, const Algebra& a) {
  for (std::size_t r = 0; r < p.p1.size(); ++r)
    for (std::size_t c = 0; c < p.p0.size(); ++c)
      for (const auto& [b, coef] : p.components[r][c])
        if (a.basis()[static_cast<std::size_t>(b)].arrows.empty() && sgn(coef) != 0) return false;
  return true;
}

PresentationMaps presentation_maps(const Representation& m) {
  const Presentation& p = min_projective_presentation(m);
  return projective_map(m.algebra(), p.p1, p.p0, p.components);
}

PresentationMaps projective_map(const AlgebraPtr& alg, const std::vector<int>& p1, const std::vector<int>& p0,
                                const std::vector<std::vector<Element>>& components) {
  const Algebra& a = *alg;
  std::vector<Representation> p0s, p1s;
  for (int v : p0) p0s.push_back(projective(alg, v));
  for (int v : p1) p1s.push_back(projective(alg, v));
  PresentationMaps out{p1s.empty() ? zero_representation(alg) : direct_sum(p1s),
                       p0s.empty() ? zero_representation(alg) : direct_sum(p0s), {}};
  for (int w = 0; w < a.n(); ++w) {
    Matrix block(out.p0.dim(w), out.p1.dim(w));
    std::size_t col = 0;
    for (std::size_t r = 0; r < p1.size(); ++r) {
      const auto& src_paths = a.basis_between(p1[r], w);
      for (int pb : src_paths) {
        std::size_t row = 0;
        for (std::size_t c = 0; c < p0.size(); ++c) {
          const auto& tgt_paths = a.basis_between(p0[c], w);
          // e_{p1[r]} * path |-> q * path
          const Element img = a.multiply(components[r][c], Element{{pb, Rational(1)}});
          for (const auto& [b, coef] : img) {
            const auto it = std::find(tgt_paths.begin(), tgt_paths.end(), b);
            block(row + static_cast<std::size_t>(it - tgt_paths.begin()), col) += coef;
          }
          row += tgt_paths.size();
        }
        ++col;
      }
    }
    out.map.blocks.push_back(std::move(block));
  }
  return out;
}

IntVector g_vector(const Representation& m) {
  const Presentation& p = min_projective_presentation(m);
  IntVector g(p.p0_multiplicities.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = p.p0_multiplicities[i] - p.p1_multiplicities[i];
  return g;
}

IntVector top_vector(const Representation& m) { return min_projective_presentation(m).p0_multiplicities; }

bool is_projective(const Representation& m) { return min_projective_presentation(m).p1.empty(); }

Representation tau(const Representation& m) {
  RepCache& cache = m.cache();
  std::lock_guard<std::recursive_mutex> lock(cache.mutex);
  if (cache.tau) return *cache.tau;
  const Presentation& p = min_projective_presentation(m);
  const AlgebraPtr& alg = m.algebra();
  const Algebra& a = *alg;
  if (p.p1.empty()) {
    cache.tau = std::make_unique<Representation>(zero_representation(alg).renamed("0"));
    return *cache.tau;
  }
  std::vector<Representation> i1, i0;
  for (int v : p.p1) i1.push_back(injective(alg, v));
  for (int v : p.p0) i0.push_back(injective(alg, v));
  const Representation ni1 = direct_sum(i1);
  const Representation ni0 = direct_sum(i0);
  // nu(q): I(j) -> I(i) for q in paths i -> j, at vertex k: f |-> (p |-> f(p*q))
  Morphism nu;
  for (int k = 0; k < a.n(); ++k) {
    Matrix block(ni0.dim(k), ni1.dim(k));
    std::size_t col0 = 0;
    for (std::size_t r = 0; r < p.p1.size(); ++r) {
      const auto& kj = a.basis_between(k, p.p1[r]);
      std::size_t row0 = 0;
      for (std::size_t c = 0; c < p.p0.size(); ++c) {
        const auto& ki = a.basis_between(k, p.p0[c]);
        const Element& q = p.components[r][c];
        if (!q.empty()) {
          for (std::size_t x = 0; x < ki.size(); ++x) {
            const Element prod = a.multiply(Element{{ki[x], Rational(1)}}, q);
            for (const auto& [b, coef] : prod) {
              const auto it = std::find(kj.begin(), kj.end(), b);
              // R(y, x) = coef; nu block = R^T
              block(row0 + x, col0 + static_cast<std::size_t>(it - kj.begin())) += coef;
            }
          }
        }
        row0 += ki.size();
      }
      col0 += kj.size();
    }
    nu.blocks.push_back(std::move(block));
  }
  auto [t, inc] = kernel(nu, ni1);
  (void)inc;
  cache.tau = std::make_unique<Representation>(t.renamed("tau " + (m.name().empty() ? dims_string(m.dims()) : m.name())));
  return *cache.tau;
}

Subobject trace(const Representation& m, const Representation& n) {
  VertexSubspaces spaces = zero_spaces(n);
  if (!m.is_zero() && !n.is_zero()) {
    for (const auto& f : hom_basis(m, n)) {
      VertexSubspaces img = image_spaces(f, m, n);
      spaces = sum_spaces(spaces, img);
    }
  }
  auto [obj, inc] = subrepresentation(n, spaces);
  return {obj, inc, spaces};
}

bool in_fac(const Representation& m, const Representation& n) {
  if (n.is_zero()) return true;
  if (m.is_zero()) return false;
  return trace(m, n).object.dims() == n.dims();
}

Approximation right_approximation(const Representation& x, const Representation& m) {
  const AlgebraPtr& alg = x.algebra();
  std::vector<Morphism> chosen;
  VertexSubspaces image = zero_spaces(x);
  std::size_t image_dim = 0;
  if (!m.is_zero() && !x.is_zero()) {
    for (const auto& f : hom_basis(m, x)) {
      VertexSubspaces next = sum_spaces(image, image_spaces(f, m, x));
      std::size_t d = 0;
      for (const auto& s : next) d += s.cols();
      if (d > image_dim) {
        chosen.push_back(f);
        image = std::move(next);
        image_dim = d;
      }
    }
  }
  Approximation out;
  out.source = chosen.empty() ? zero_representation(alg) : power(m, static_cast<int>(chosen.size()));
  for (int v = 0; v < alg->n(); ++v) {
    Matrix block(x.dim(v), 0);
    for (const auto& f : chosen) block = hstack(block, f.blocks[static_cast<std::size_t>(v)]);
    if (block.cols() == 0) block = Matrix(x.dim(v), out.source.dim(v));
    out.map.blocks.push_back(std::move(block));
  }
  out.cokernel = quotient(x, image).first.renamed("coker");
  return out;
}

EndInfo end_info(const Representation& m) {
  RepCache& cache = m.cache();
  std::lock_guard<std::recursive_mutex> lock(cache.mutex);
  if (cache.end) return *cache.end;
  EndInfo info;
  for (const auto& f : hom_basis(m, m)) info.basis.push_back(f.total(m, m));
  info.dim = info.basis.size();
  Matrix gram(info.dim, info.dim);
  for (std::size_t i = 0; i < info.dim; ++i)
    for (std::size_t j = i; j < info.dim; ++j) gram(i, j) = gram(j, i) = trace_of_product(info.basis[i], info.basis[j]);
  info.radical_dim = info.dim - rank(gram);
  cache.end = std::move(info);
  return *cache.end;
}

bool is_brick(const Representation& m) { return !m.is_zero() && hom_dim(m, m) == 1; }

namespace {

/// phi - (tr phi / d) is nilpotent whenever End(m) is local with top Q, so a
/// failure rules out absolute indecomposability without the trace form.
bool scalar_plus_nilpotent(const Representation& m) {
  const auto basis = hom_basis(m, m);
  const std::size_t d = m.total_dim();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> coef(-97, 97);
  Matrix phi(d, d);
  for (const auto& f : basis) phi = phi + f.total(m, m) * Rational(coef(rng));
  Rational tr = 0;
  for (std::size_t i = 0; i < d; ++i) tr += phi(i, i);
  Matrix x = phi - Matrix::identity(d) * (tr / Rational(static_cast<long>(d)));
  for (std::size_t p = 1; p < d; p *= 2) x = x * x;
  return x.is_zero();
}

}  // namespace

bool is_absolutely_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  if (hom_dim(m, m) == 1) return true;  // bricks; avoids the End basis
  if (!scalar_plus_nilpotent(m)) return false;
  return end_info(m).top_dim() == 1;
}

namespace {

/// rank-stable power of a square matrix
Matrix stable_power(const Matrix& x) {
  Matrix p = x;
  std::size_t r = rank(p);
  for (;;) {
    if (r == 0) return p;
    Matrix q = p * x;
    const std::size_t rq = rank(q);
    if (rq == r) return p;
    p = std::move(q);
    r = rq;
  }
}

struct Split {
  VertexSubspaces first;
  VertexSubspaces second;
};

std::optional<Split> fitting_split(const Representation& m, const Matrix& phi) {
  const Matrix p = stable_power(phi);
  const std::size_t r = rank(p);
  if (r == 0 || r == m.total_dim()) return std::nullopt;
  Split s;
  for (int v = 0; v < m.alg().n(); ++v) {
    const std::size_t d = m.dim(v), off = m.offset(v);
    Matrix block(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) block(i, j) = p(off + i, off + j);
    if (d == 0) {
      s.first.emplace_back(0, 0);
      s.second.emplace_back(0, 0);
      continue;
    }
    Matrix k = nullspace(block);
    s.first.push_back(k.cols() ? column_space(k) : Matrix(d, 0));
    Matrix im = column_space(block);
    s.second.push_back(im.cols() ? im : Matrix(d, 0));
  }
  return s;
}

std::optional<Split> find_split(const Representation& m, std::mt19937_64& rng) {
  const EndInfo& info = end_info(m);
  if (info.top_dim() <= 1) return std::nullopt;
  const std::size_t d = m.total_dim();
  const Matrix id = Matrix::identity(d);
  const long lambdas[] = {0, 1, -1, 2, -2};
  auto try_element = [&](const Matrix& phi) -> std::optional<Split> {
    for (long l : lambdas) {
      if (auto s = fitting_split(m, l == 0 ? phi : phi - id * Rational(l))) return s;
    }
    return std::nullopt;
  };
  for (const auto& b : info.basis)
    if (auto s = try_element(b)) return s;
  std::uniform_int_distribution<int> coin(-1, 1);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Matrix phi(d, d);
    for (const auto& b : info.basis) {
      const int c = coin(rng);
      if (c) phi = phi + b * Rational(c);
    }
    if (auto s = try_element(phi)) return s;
  }
  // elements killing a vector are singular; a non-nilpotent one splits at 0
  std::uniform_int_distribution<int> small(-3, 3);
  for (std::size_t attempt = 0; attempt < d + 8; ++attempt) {
    RationalVector x(d);
    if (attempt < d) {
      x[attempt] = 1;
    } else {
      for (auto& e : x) e = small(rng);
    }
    Matrix images(d, info.dim);
    for (std::size_t k = 0; k < info.dim; ++k) {
      const RationalVector y = info.basis[k] * x;
      for (std::size_t r = 0; r < d; ++r) images(r, k) = y[r];
    }
    const Matrix ann = nullspace(images);
    if (ann.cols() == 0) continue;
    for (int round = 0; round < 3; ++round) {
      Matrix phi(d, d);
      for (std::size_t c = 0; c < ann.cols(); ++c) {
        const int w = round == 0 ? 1 : small(rng);
        if (!w) continue;
        for (std::size_t k = 0; k < info.dim; ++k)
          if (sgn(ann(k, c)) != 0) phi = phi + info.basis[k] * (ann(k, c) * w);
      }
      if (auto s = fitting_split(m, phi)) return s;
    }
  }
  return std::nullopt;
}

void split_recursive(const Representation& m, std::mt19937_64& rng, std::vector<Summand>& out, bool& flagged) {
  if (m.is_zero()) return;
  auto s = find_split(m, rng);
  if (!s) {
    Summand sm{m, 1, end_info(m).top_dim() > 1};
    if (sm.non_absolutely_indecomposable) flagged = true;
    out.push_back(std::move(sm));
    return;
  }
  for (int v = 0; v < m.alg().n(); ++v) {
    const auto sv = static_cast<std::size_t>(v);
    if (s->first[sv].cols() + s->second[sv].cols() != m.dim(v) ||
        rank(hstack(s->first[sv], s->second[sv])) != m.dim(v))
      throw InvariantViolation("Fitting decomposition is not a direct sum");
  }
  split_recursive(subrepresentation(m, s->first).first, rng, out, flagged);
  split_recursive(subrepresentation(m, s->second).first, rng, out, flagged);
}

bool random_isomorphism_exists(const Representation& a, const Representation& b) {
  const auto basis = hom_basis(a, b);
  if (basis.empty()) return false;
  std::mt19937_64 rng(kDecompositionSeed);
  std::uniform_int_distribution<int> coef(-97, 97);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Morphism f = zero_morphism(a, b);
    for (const auto& g : basis) f = f + g * Rational(coef(rng));
    bool invertible = true;
    for (const auto& blk : f.blocks)
      if (blk.rows() && rank(blk) != blk.rows()) invertible = false;
    if (invertible) return true;
  }
  return false;
}

}  // namespace

Decomposition decompose(const Representation& m) {
  RepCache& cache = m.cache();
  std::lock_guard<std::recursive_mutex> lock(cache.mutex);
  if (cache.decomposition) return *cache.decomposition;
  std::mt19937_64 rng(kDecompositionSeed);
  std::vector<Summand> pieces;
  bool flagged = false;
  split_recursive(m, rng, pieces, flagged);
  Decomposition d;
  d.flagged = flagged;
  for (auto& p : pieces) {
    bool merged = false;
    for (auto& s : d.summands) {
      if (is_isomorphic(s.module, p.module)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) d.summands.push_back(std::move(p));
  }
  std::sort(d.summands.begin(), d.summands.end(), [](const Summand& x, const Summand& y) {
    if (x.module.dims() != y.module.dims()) return x.module.dims() < y.module.dims();
    return x.multiplicity < y.multiplicity;
  });
  IntVector total(m.dims().size(), 0);
  for (const auto& s : d.summands)
    for (std::size_t v = 0; v < total.size(); ++v) total[v] += s.multiplicity * s.module.dims()[v];
  if (total != m.dims()) throw InvariantViolation("decomposition does not add up to the module");
  cache.decomposition = d;
  return d;
}

bool is_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  if (end_info(m).top_dim() == 1) return true;
  const Decomposition d = decompose(m);
  return d.summands.size() == 1 && d.summands[0].multiplicity == 1;
}

bool is_isomorphic(const Representation& a, const Representation& b) {
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  if (a.maps() == b.maps()) return true;
  const EndInfo& ea = end_info(a);
  const EndInfo& eb = end_info(b);
  if (ea.dim != eb.dim || ea.radical_dim != eb.radical_dim) return false;
  if (ea.top_dim() == 1) {
    // local with residue field k: a ~ b iff some g o f has nonzero trace
    const auto fs = hom_basis(a, b);
    if (fs.empty()) return false;
    const auto gs = hom_basis(b, a);
    for (const auto& f : fs) {
      const Matrix ft = f.total(a, b);
      for (const auto& g : gs)
        if (sgn(trace_of(g.total(b, a) * ft)) != 0) return true;
    }
    return false;
  }
  if (hom_dim(a, b) != ea.dim) return false;
  const Decomposition da = decompose(a);
  const Decomposition db = decompose(b);
  if (!da.flagged && !db.flagged) {
    if (da.summands.size() != db.summands.size()) return false;
    std::vector<bool> used(db.summands.size(), false);
    for (const auto& sa : da.summands) {
      bool found = false;
      for (std::size_t j = 0; j < db.summands.size() && !found; ++j) {
        if (used[j] || db.summands[j].multiplicity != sa.multiplicity) continue;
        if (is_isomorphic(sa.module, db.summands[j].module)) used[j] = found = true;
      }
      if (!found) return false;
    }
    return true;
  }
  return random_isomorphism_exists(a, b);
}

Matrix total_map_matrix(const Representation& m, int arrow) {
  const auto& arr = m.alg().arrows()[static_cast<std::size_t>(arrow)];
  Matrix out(m.total_dim(), m.total_dim());
  const Matrix& x = m.map(arrow);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(m.offset(arr.target) + r, m.offset(arr.source) + c) = x(r, c);
  return out;
}

}  // namespace greenscan
