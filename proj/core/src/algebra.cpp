#include "greenscan/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "greenscan/errors.hpp"

namespace greenscan {

namespace {

struct PathSpace {
  std::vector<Path> paths;  // column order: longest first, then lexicographically largest first
};

void add_to(Element& x, int index, const Rational& c) {
  auto it = std::lower_bound(x.begin(), x.end(), index, [](const auto& e, int i) { return e.first < i; });
  if (it != x.end() && it->first == index) {
    it->second += c;
    if (sgn(it->second) == 0) x.erase(it);
  } else if (sgn(c) != 0) {
    x.insert(it, {index, c});
  }
}

}  // namespace

int Algebra::vertex_index(long id) const {
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i)
    if (vertex_ids_[i] == id) return static_cast<int>(i);
  throw InputError("unknown vertex " + std::to_string(id));
}

int Algebra::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return static_cast<int>(i);
  return -1;
}

AlgebraPtr Algebra::create(std::string name, std::vector<long> vertex_ids, std::vector<Arrow> arrows,
                           std::vector<Relation> relations, const AlgebraLimits& limits) {
  if (vertex_ids.empty()) throw InputError("algebra needs at least one vertex");
  std::set<long> seen_ids;
  for (long id : vertex_ids) {
    if (id <= 0) throw InputError("vertex ids must be positive integers");
    if (!seen_ids.insert(id).second) throw InputError("duplicate vertex " + std::to_string(id));
  }
  const int n = static_cast<int>(vertex_ids.size());
  std::set<std::string> labels;
  for (const auto& a : arrows) {
    if (!labels.insert(a.label).second) throw InputError("duplicate arrow label '" + a.label + "'");
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      throw InputError("arrow '" + a.label + "' uses an undeclared vertex");
  }
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->name_ = std::move(name);
  alg->vertex_ids_ = std::move(vertex_ids);
  alg->arrows_ = std::move(arrows);

  for (auto& rel : relations) {
    // merge repeated paths, drop cancelled terms
    std::map<Path, Rational> merged;
    for (const auto& t : rel.terms) {
      if (sgn(t.coefficient) == 0) throw InputError("relation coefficients must be nonzero");
      if (t.path.size() < 2)
        throw InputError("non-admissible relation: path '" + alg->path_label(t.path, 0) +
                         "' has length " + std::to_string(t.path.size()) + " (needs >= 2)");
      for (int a : t.path)
        if (a < 0 || a >= static_cast<int>(alg->arrows_.size())) throw InputError("relation uses unknown arrow");
      for (std::size_t k = 0; k + 1 < t.path.size(); ++k) {
        const auto& x = alg->arrows_[static_cast<std::size_t>(t.path[k])];
        const auto& y = alg->arrows_[static_cast<std::size_t>(t.path[k + 1])];
        if (x.target != y.source)
          throw InputError("path '" + alg->path_label(t.path, x.source) + "' is not composable at '" + y.label + "'");
      }
      merged[t.path] += t.coefficient;
    }
    Relation clean;
    for (auto& [p, c] : merged)
      if (sgn(c) != 0) clean.terms.push_back({c, p});
    if (clean.terms.empty()) throw InputError("relation cancels to zero");
    const auto& first = clean.terms.front().path;
    const int s = alg->arrows_[static_cast<std::size_t>(first.front())].source;
    const int t = alg->arrows_[static_cast<std::size_t>(first.back())].target;
    for (const auto& term : clean.terms) {
      if (alg->arrows_[static_cast<std::size_t>(term.path.front())].source != s ||
          alg->arrows_[static_cast<std::size_t>(term.path.back())].target != t)
        throw InputError("relation paths are not parallel");
    }
    alg->relations_.push_back(std::move(clean));
  }
  alg->compute_basis(limits);
  return alg;
}

void Algebra::compute_basis(const AlgebraLimits& limits) {
  const int nv = n();
  // paths_by_length[k] = all paths of length k as (source, arrows)
  std::vector<std::vector<std::pair<int, Path>>> by_length(1);
  for (int v = 0; v < nv; ++v) by_length[0].push_back({v, {}});
  std::size_t path_count = static_cast<std::size_t>(nv);

  auto target_of = [&](int source, const Path& p) {
    return p.empty() ? source : arrows_[static_cast<std::size_t>(p.back())].target;
  };
  auto extend_to = [&](std::size_t length) {
    while (by_length.size() <= length) {
      std::vector<std::pair<int, Path>> next;
      for (const auto& [s, p] : by_length.back()) {
        const int t = target_of(s, p);
        for (std::size_t a = 0; a < arrows_.size(); ++a) {
          if (arrows_[a].source != t) continue;
          Path q = p;
          q.push_back(static_cast<int>(a));
          next.push_back({s, std::move(q)});
        }
      }
      path_count += next.size();
      if (path_count > limits.max_paths)
        throw BoundExhausted("algebra '" + name_ + "': path enumeration exceeded " +
                             std::to_string(limits.max_paths) +
                             " paths; the algebra looks infinite-dimensional (inconclusive)");
      by_length.push_back(std::move(next));
    }
  };

  struct Truncation {
    std::size_t dim = 0;
    std::map<std::pair<int, Path>, std::vector<std::pair<std::pair<int, Path>, Rational>>> forms;
    std::vector<std::pair<int, Path>> basis;
  };

  // A_m = kQ / (I + J^m), computed per parallel class of paths of length < m.
  auto truncate = [&](std::size_t m) {
    extend_to(m);
    Truncation out;
    std::map<std::pair<int, int>, std::vector<Path>> columns;
    for (std::size_t len = 0; len < m; ++len)
      for (const auto& [s, p] : by_length[len]) columns[{s, target_of(s, p)}].push_back(p);
    std::map<std::pair<int, int>, std::vector<std::map<Path, Rational>>> generators;
    for (const auto& rel : relations_) {
      const auto& p0 = rel.terms.front().path;
      const int rs = arrows_[static_cast<std::size_t>(p0.front())].source;
      const int rt = arrows_[static_cast<std::size_t>(p0.back())].target;
      std::size_t min_len = p0.size();
      for (const auto& t : rel.terms) min_len = std::min(min_len, t.path.size());
      if (min_len >= m) continue;
      for (std::size_t lu = 0; lu + min_len < m; ++lu) {
        for (const auto& [us, u] : by_length[lu]) {
          if (target_of(us, u) != rs) continue;
          for (std::size_t lv = 0; lu + lv + min_len < m; ++lv) {
            for (const auto& [vs, v] : by_length[lv]) {
              if (vs != rt) continue;
              std::map<Path, Rational> g;
              for (const auto& t : rel.terms) {
                if (lu + lv + t.path.size() >= m) continue;
                Path w = u;
                w.insert(w.end(), t.path.begin(), t.path.end());
                w.insert(w.end(), v.begin(), v.end());
                g[w] += t.coefficient;
              }
              if (!g.empty()) generators[{us, target_of(vs, v)}].push_back(std::move(g));
            }
          }
        }
      }
    }
    for (auto& [st, paths] : columns) {
      std::sort(paths.begin(), paths.end(), [&](const Path& x, const Path& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return path_label(x, st.first) > path_label(y, st.first);
      });
      const auto& gens = generators[st];
      Matrix m_rows(gens.size(), paths.size());
      std::map<Path, std::size_t> col_of;
      for (std::size_t c = 0; c < paths.size(); ++c) col_of[paths[c]] = c;
      for (std::size_t r = 0; r < gens.size(); ++r)
        for (const auto& [p, c] : gens[r]) m_rows(r, col_of.at(p)) = c;
      const auto pivots = rref(m_rows);
      std::vector<int> pivot_row(paths.size(), -1);
      for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
      for (std::size_t c = 0; c < paths.size(); ++c) {
        const std::pair<int, Path> key{st.first, paths[c]};
        if (pivot_row[c] < 0) {
          out.basis.push_back(key);
          out.forms[key] = {{key, Rational(1)}};
        }
      }
      for (std::size_t c = 0; c < paths.size(); ++c) {
        if (pivot_row[c] < 0) continue;
        std::vector<std::pair<std::pair<int, Path>, Rational>> f;
        const auto r = static_cast<std::size_t>(pivot_row[c]);
        for (std::size_t k = 0; k < paths.size(); ++k)
          if (pivot_row[k] < 0 && sgn(m_rows(r, k)) != 0) f.push_back({{st.first, paths[k]}, -m_rows(r, k)});
        out.forms[{st.first, paths[c]}] = std::move(f);
      }
    }
    out.dim = out.basis.size();
    return out;
  };

  std::size_t m = 2;
  Truncation current = truncate(m);
  for (;;) {
    if (m > limits.max_path_length)
      throw BoundExhausted("algebra '" + name_ + "': no path-length bound up to " +
                           std::to_string(limits.max_path_length) +
                           "; the algebra looks infinite-dimensional (inconclusive)");
    Truncation next = truncate(m + 1);
    if (next.dim == current.dim) break;
    current = std::move(next);
    ++m;
  }
  nil_index_ = m;

  std::sort(current.basis.begin(), current.basis.end(), [&](const auto& x, const auto& y) {
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    if (x.second.empty()) return x.first < y.first;
    const auto lx = path_label(x.second, x.first), ly = path_label(y.second, y.first);
    if (lx != ly) return lx < ly;
    return x.first < y.first;
  });
  std::map<std::pair<int, Path>, int> index_of;
  basis_.clear();
  for (const auto& key : current.basis) {
    index_of[key] = static_cast<int>(basis_.size());
    basis_.push_back({key.second, key.first, target_of(key.first, key.second)});
  }
  between_.assign(static_cast<std::size_t>(nv * nv), {});
  trivial_.assign(static_cast<std::size_t>(nv), -1);
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    between_[static_cast<std::size_t>(basis_[b].source * nv + basis_[b].target)].push_back(static_cast<int>(b));
    if (basis_[b].arrows.empty()) trivial_[static_cast<std::size_t>(basis_[b].source)] = static_cast<int>(b);
  }
  normal_forms_.clear();
  for (const auto& [key, form] : current.forms) {
    Element e;
    for (const auto& [k, c] : form) add_to(e, index_of.at(k), c);
    normal_forms_[key] = std::move(e);
  }
  products_.assign(basis_.size() * basis_.size(), {});
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (basis_[i].target != basis_[j].source) continue;
      Path w = basis_[i].arrows;
      w.insert(w.end(), basis_[j].arrows.begin(), basis_[j].arrows.end());
      products_[i * basis_.size() + j] = reduce_path_internal(w, basis_[i].source);
    }
  }
}

Element Algebra::reduce_path_internal(const Path& path, int source) const {
  if (path.size() >= nil_index_) return {};
  auto it = normal_forms_.find({source, path});
  if (it == normal_forms_.end()) return {};
  return it->second;
}

Element Algebra::reduce(const Path& path) const {
  if (path.empty()) throw std::invalid_argument("reduce: use trivial_path for idempotents");
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    if (arrows_.at(static_cast<std::size_t>(path[k])).target != arrows_.at(static_cast<std::size_t>(path[k + 1])).source)
      return {};
  return reduce_path_internal(path, arrows_.at(static_cast<std::size_t>(path.front())).source);
}

const Element& Algebra::product(int b1, int b2) const {
  return products_[static_cast<std::size_t>(b1) * basis_.size() + static_cast<std::size_t>(b2)];
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : product(i, j)) add_to(out, k, a * b * c);
  return out;
}

std::string Algebra::path_label(const Path& path, int source) const {
  if (path.empty()) return "e" + std::to_string(vertex_ids_.at(static_cast<std::size_t>(source)));
  std::string s;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k) s += '*';
    s += arrows_.at(static_cast<std::size_t>(path[k])).label;
  }
  return s;
}

std::string Algebra::basis_label(int b) const {
  const auto& bp = basis_.at(static_cast<std::size_t>(b));
  return path_label(bp.arrows, bp.source);
}

std::string Algebra::describe() const {
  std::ostringstream os;
  os << "algebra " << name_ << ": " << n() << " vertices, " << arrows_.size() << " arrows, "
     << relations_.size() << " relations, dim " << total_dim();
  return os.str();
}

}  // namespace greenscan
