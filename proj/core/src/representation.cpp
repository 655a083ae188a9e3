#include "greenscan/representation.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "greenscan/errors.hpp"
#include "lexer.hpp"
#include "rep_cache.hpp"

namespace greenscan {

Representation::Representation(AlgebraPtr algebra, IntVector dims, std::vector<Matrix> maps, std::string name)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)), name_(std::move(name)) {
  const Algebra& a = *algebra_;
  if (dims_.size() != static_cast<std::size_t>(a.n())) throw InputError("dimension vector has wrong length");
  for (long d : dims_)
    if (d < 0) throw InputError("negative dimension");
  if (maps_.size() != a.arrows().size()) throw InputError("wrong number of arrow matrices");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& arr = a.arrows()[k];
    if (maps_[k].rows() != dim(arr.target) || maps_[k].cols() != dim(arr.source)) {
      if (maps_[k].empty() && (dim(arr.target) == 0 || dim(arr.source) == 0)) {
        maps_[k] = Matrix(dim(arr.target), dim(arr.source));
        continue;
      }
      throw InputError("matrix for arrow '" + arr.label + "' has shape " + std::to_string(maps_[k].rows()) + "x" +
                       std::to_string(maps_[k].cols()) + ", expected " + std::to_string(dim(arr.target)) + "x" +
                       std::to_string(dim(arr.source)));
    }
  }
  offsets_.resize(dims_.size());
  total_ = 0;
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    offsets_[v] = total_;
    total_ += static_cast<std::size_t>(dims_[v]);
  }
  for (const auto& rel : a.relations()) {
    const auto& p0 = rel.terms.front().path;
    const int s = a.arrows()[static_cast<std::size_t>(p0.front())].source;
    const int t = a.arrows()[static_cast<std::size_t>(p0.back())].target;
    Matrix sum(dim(t), dim(s));
    for (const auto& term : rel.terms) sum = sum + path_action(term.path, s) * term.coefficient;
    if (!sum.is_zero()) throw InputError("representation does not satisfy a relation of " + a.name());
  }
  basis_actions_ = std::make_shared<std::vector<Matrix>>();
  basis_actions_->reserve(a.total_dim());
  for (std::size_t b = 0; b < a.total_dim(); ++b) {
    const auto& bp = a.basis()[b];
    basis_actions_->push_back(path_action(bp.arrows, bp.source));
  }
  cache_ = std::make_shared<RepCache>();
}

Representation Representation::renamed(std::string name) const {
  Representation r = *this;
  r.name_ = std::move(name);
  return r;
}

Matrix Representation::path_action(const Path& path, int source) const {
  Matrix m = Matrix::identity(dim(source));
  for (int a : path) m = maps_[static_cast<std::size_t>(a)] * m;
  return m;
}

const Matrix& Representation::basis_action(int b) const { return (*basis_actions_)[static_cast<std::size_t>(b)]; }

Matrix Representation::element_action(const Element& x, int s, int t) const {
  Matrix m(dim(t), dim(s));
  for (const auto& [b, c] : x) m = m + basis_action(b) * c;
  return m;
}

bool Morphism::is_zero() const {
  for (const auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

Morphism Morphism::compose_after(const Morphism& first) const {
  Morphism out;
  for (std::size_t v = 0; v < blocks.size(); ++v) out.blocks.push_back(blocks[v] * first.blocks[v]);
  return out;
}

Matrix Morphism::total(const Representation& source, const Representation& target) const {
  Matrix m(target.total_dim(), source.total_dim());
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    const int iv = static_cast<int>(v);
    for (std::size_t r = 0; r < blocks[v].rows(); ++r)
      for (std::size_t c = 0; c < blocks[v].cols(); ++c) m(target.offset(iv) + r, source.offset(iv) + c) = blocks[v](r, c);
  }
  return m;
}

Morphism Morphism::operator+(const Morphism& o) const {
  Morphism out;
  for (std::size_t v = 0; v < blocks.size(); ++v) out.blocks.push_back(blocks[v] + o.blocks[v]);
  return out;
}

Morphism Morphism::operator*(const Rational& s) const {
  Morphism out;
  for (const auto& b : blocks) out.blocks.push_back(b * s);
  return out;
}

bool is_morphism(const Morphism& f, const Representation& source, const Representation& target) {
  const Algebra& a = source.alg();
  if (f.blocks.size() != static_cast<std::size_t>(a.n())) return false;
  for (int v = 0; v < a.n(); ++v) {
    const auto& b = f.blocks[static_cast<std::size_t>(v)];
    if (b.rows() != target.dim(v) || b.cols() != source.dim(v)) return false;
  }
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    const auto& fs = f.blocks[static_cast<std::size_t>(arr.source)];
    const auto& ft = f.blocks[static_cast<std::size_t>(arr.target)];
    if (ft * source.map(static_cast<int>(k)) != target.map(static_cast<int>(k)) * fs) return false;
  }
  return true;
}

Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (int v = 0; v < m.alg().n(); ++v) f.blocks.push_back(Matrix::identity(m.dim(v)));
  return f;
}

Morphism zero_morphism(const Representation& source, const Representation& target) {
  Morphism f;
  for (int v = 0; v < source.alg().n(); ++v) f.blocks.emplace_back(target.dim(v), source.dim(v));
  return f;
}

namespace {

std::vector<Matrix> zero_maps(const Algebra& a, const IntVector& dims) {
  std::vector<Matrix> maps;
  for (const auto& arr : a.arrows())
    maps.emplace_back(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]),
                      static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]));
  return maps;
}

std::size_t position_in(const std::vector<int>& v, int x) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return i;
  throw std::logic_error("basis element not found");
}

}  // namespace

Representation zero_representation(const AlgebraPtr& algebra) {
  IntVector dims(static_cast<std::size_t>(algebra->n()), 0);
  return Representation(algebra, dims, zero_maps(*algebra, dims), "0");
}

Representation simple(const AlgebraPtr& algebra, int vertex) {
  IntVector dims(static_cast<std::size_t>(algebra->n()), 0);
  dims.at(static_cast<std::size_t>(vertex)) = 1;
  return Representation(algebra, dims, zero_maps(*algebra, dims), "S(" + std::to_string(algebra->vertex_id(vertex)) + ")");
}

Representation projective(const AlgebraPtr& algebra, int i) {
  const Algebra& a = *algebra;
  if (i < 0 || i >= a.n()) throw InputError("unknown vertex");
  IntVector dims(static_cast<std::size_t>(a.n()));
  for (int j = 0; j < a.n(); ++j) dims[static_cast<std::size_t>(j)] = static_cast<long>(a.basis_between(i, j).size());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    const auto& from = a.basis_between(i, arr.source);
    const auto& to = a.basis_between(i, arr.target);
    Matrix m(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      Path w = a.basis()[static_cast<std::size_t>(from[c])].arrows;
      w.push_back(static_cast<int>(k));
      for (const auto& [b, coef] : a.reduce(w)) m(position_in(to, b), c) = coef;
    }
    maps.push_back(std::move(m));
  }
  return Representation(algebra, dims, maps, "P(" + std::to_string(a.vertex_id(i)) + ")");
}

Representation injective(const AlgebraPtr& algebra, int i) {
  const Algebra& a = *algebra;
  if (i < 0 || i >= a.n()) throw InputError("unknown vertex");
  IntVector dims(static_cast<std::size_t>(a.n()));
  for (int k = 0; k < a.n(); ++k) dims[static_cast<std::size_t>(k)] = static_cast<long>(a.basis_between(k, i).size());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    const auto& src_paths = a.basis_between(arr.source, i);  // dual basis of I(i)_source
    const auto& tgt_paths = a.basis_between(arr.target, i);
    // L: paths(target -> i) -> paths(source -> i), p |-> a*p; the arrow acts by its transpose
    Matrix l(src_paths.size(), tgt_paths.size());
    for (std::size_t c = 0; c < tgt_paths.size(); ++c) {
      Path w{static_cast<int>(k)};
      const auto& rest = a.basis()[static_cast<std::size_t>(tgt_paths[c])].arrows;
      w.insert(w.end(), rest.begin(), rest.end());
      for (const auto& [b, coef] : a.reduce(w)) l(position_in(src_paths, b), c) = coef;
    }
    maps.push_back(l.transpose());
  }
  return Representation(algebra, dims, maps, "I(" + std::to_string(a.vertex_id(i)) + ")");
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const AlgebraPtr& alg = parts.front().algebra();
  IntVector dims(static_cast<std::size_t>(alg->n()), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dims()[v];
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < alg->arrows().size(); ++k) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(static_cast<int>(k)));
    maps.push_back(block_diagonal(blocks));
  }
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : "+") + (p.name().empty() ? dims_string(p.dims()) : p.name());
  return Representation(alg, dims, maps, name);
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum(std::vector{a, b}); }

Representation power(const Representation& m, int k) {
  if (k <= 0) return zero_representation(m.algebra());
  return direct_sum(std::vector<Representation>(static_cast<std::size_t>(k), m));
}

bool is_invariant(const Representation& m, const VertexSubspaces& sub) {
  const Algebra& a = m.alg();
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    const Matrix img = m.map(static_cast<int>(k)) * sub[static_cast<std::size_t>(arr.source)];
    if (!span_contains(sub[static_cast<std::size_t>(arr.target)], img)) return false;
  }
  return true;
}

std::pair<Representation, Morphism> subrepresentation(const Representation& m, const VertexSubspaces& sub) {
  const Algebra& a = m.alg();
  IntVector dims(static_cast<std::size_t>(a.n()));
  for (int v = 0; v < a.n(); ++v) dims[static_cast<std::size_t>(v)] = static_cast<long>(sub[static_cast<std::size_t>(v)].cols());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    const auto& bs = sub[static_cast<std::size_t>(arr.source)];
    const auto& bt = sub[static_cast<std::size_t>(arr.target)];
    if (bs.cols() == 0 || bt.cols() == 0) {
      maps.emplace_back(bt.cols(), bs.cols());
      continue;
    }
    auto x = solve(bt, m.map(static_cast<int>(k)) * bs);
    if (!x) throw InvariantViolation("subspaces are not invariant under arrow '" + arr.label + "'");
    maps.push_back(std::move(*x));
  }
  Morphism inc;
  for (int v = 0; v < a.n(); ++v) {
    const auto& b = sub[static_cast<std::size_t>(v)];
    inc.blocks.push_back(b.cols() == 0 ? Matrix(m.dim(v), 0) : b);
  }
  return {Representation(m.algebra(), dims, maps), inc};
}

std::pair<Representation, Morphism> quotient(const Representation& m, const VertexSubspaces& sub) {
  const Algebra& a = m.alg();
  IntVector dims(static_cast<std::size_t>(a.n()));
  std::vector<Matrix> comp(static_cast<std::size_t>(a.n()));
  Morphism proj;
  for (int v = 0; v < a.n(); ++v) {
    const auto sv = static_cast<std::size_t>(v);
    Matrix b = sub[sv].cols() == 0 ? Matrix(m.dim(v), 0) : sub[sv];
    comp[sv] = complement_basis(b);
    dims[sv] = static_cast<long>(comp[sv].cols());
    // coordinates along the complement of x = B y + C z
    Matrix full = hstack(b, comp[sv]);
    Matrix q(comp[sv].cols(), m.dim(v));
    if (m.dim(v) > 0) {
      auto inv = solve(full, Matrix::identity(m.dim(v)));
      if (!inv) throw InvariantViolation("complement is not a complement");
      for (std::size_t r = 0; r < comp[sv].cols(); ++r)
        for (std::size_t c = 0; c < m.dim(v); ++c) q(r, c) = (*inv)(b.cols() + r, c);
    }
    proj.blocks.push_back(std::move(q));
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const auto& arr = a.arrows()[k];
    maps.push_back(proj.blocks[static_cast<std::size_t>(arr.target)] * m.map(static_cast<int>(k)) *
                   comp[static_cast<std::size_t>(arr.source)]);
  }
  return {Representation(m.algebra(), dims, maps), proj};
}

VertexSubspaces image_spaces(const Morphism& f, const Representation& /*source*/, const Representation& target) {
  VertexSubspaces out;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    const auto& b = f.blocks[v];
    out.push_back(b.cols() == 0 ? Matrix(target.dim(static_cast<int>(v)), 0) : column_space(b));
  }
  return out;
}

VertexSubspaces kernel_spaces(const Morphism& f, const Representation& source) {
  VertexSubspaces out;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    const auto& b = f.blocks[v];
    const std::size_t d = source.dim(static_cast<int>(v));
    if (d == 0) {
      out.emplace_back(0, 0);
      continue;
    }
    Matrix k = b.rows() == 0 ? Matrix::identity(d) : nullspace(b);
    out.push_back(k.cols() == 0 ? Matrix(d, 0) : column_space(k));
  }
  return out;
}

VertexSubspaces generated_subspaces(const Representation& m, int vertex, const Matrix& vectors) {
  const Algebra& a = m.alg();
  VertexSubspaces out;
  for (int w = 0; w < a.n(); ++w) {
    Matrix span(m.dim(w), 0);
    for (int b : a.basis_between(vertex, w)) span = hstack(span, m.basis_action(b) * vectors);
    out.push_back(span.cols() == 0 ? Matrix(m.dim(w), 0) : column_space(span));
  }
  return out;
}

VertexSubspaces sum_spaces(const VertexSubspaces& a, const VertexSubspaces& b) {
  VertexSubspaces out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v].cols() == 0) {
      out.push_back(b[v]);
    } else if (b[v].cols() == 0) {
      out.push_back(a[v]);
    } else {
      out.push_back(subspace_sum(a[v], b[v]));
    }
  }
  return out;
}

VertexSubspaces zero_spaces(const Representation& m) {
  VertexSubspaces out;
  for (int v = 0; v < m.alg().n(); ++v) out.emplace_back(m.dim(v), 0);
  return out;
}

VertexSubspaces full_spaces(const Representation& m) {
  VertexSubspaces out;
  for (int v = 0; v < m.alg().n(); ++v) out.push_back(Matrix::identity(m.dim(v)));
  return out;
}

IntVector dimension_vector(const VertexSubspaces& s) {
  IntVector d;
  for (const auto& m : s) d.push_back(static_cast<long>(m.cols()));
  return d;
}

std::pair<Representation, Morphism> cokernel(const Morphism& f, const Representation& source, const Representation& target) {
  return quotient(target, image_spaces(f, source, target));
}

std::pair<Representation, Morphism> kernel(const Morphism& f, const Representation& source) {
  return subrepresentation(source, kernel_spaces(f, source));
}

std::string dims_string(const IntVector& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- module files

Representation parse_module(std::string_view text, const AlgebraPtr& algebra) {
  using detail::LineCursor;
  using detail::Tok;
  const Algebra& a = *algebra;
  std::string name;
  bool have_header = false;
  IntVector dims(static_cast<std::size_t>(a.n()), 0);
  std::vector<bool> dim_set(static_cast<std::size_t>(a.n()), false);
  struct PendingMap {
    int arrow;
    std::vector<RationalVector> rows;
    detail::Token at;
  };
  std::vector<PendingMap> pending;

  const auto lines = detail::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    LineCursor cur(detail::tokenize_line(lines[li], line_no));
    if (cur.at(Tok::End)) continue;
    const detail::Token kw = cur.expect(Tok::Ident);
    if (kw.text == "module") {
      if (have_header) cur.fail_at(kw, "duplicate 'module' line");
      have_header = true;
      name = cur.expect(Tok::Ident).text;
      const detail::Token over = cur.expect(Tok::Ident);
      if (over.text != "over") cur.fail_at(over, "expected 'over'");
      const detail::Token alg_name = cur.peek();
      std::string rest(lines[li].substr(static_cast<std::size_t>(alg_name.column - 1)));
      if (auto hash = rest.find('#'); hash != std::string::npos) rest.resize(hash);
      while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();
      if (rest.empty()) cur.fail("missing algebra name");
      if (rest != a.name())
        throw InputError("module '" + name + "' is over algebra '" + rest + "', not '" + a.name() + "'");
    } else if (kw.text == "dim") {
      const detail::Token vt = cur.peek();
      const long id = cur.positive_integer();
      int v = -1;
      for (int i = 0; i < a.n(); ++i)
        if (a.vertex_id(i) == id) v = i;
      if (v < 0) cur.fail_at(vt, "unknown vertex " + std::to_string(id));
      if (dim_set[static_cast<std::size_t>(v)]) cur.fail_at(vt, "dimension of vertex " + std::to_string(id) + " given twice");
      cur.expect(Tok::Equals);
      dims[static_cast<std::size_t>(v)] = cur.nonnegative_integer();
      dim_set[static_cast<std::size_t>(v)] = true;
      cur.expect_end();
    } else if (kw.text == "map") {
      const detail::Token at = cur.expect(Tok::Ident);
      const int arrow = a.arrow_index(at.text);
      if (arrow < 0) cur.fail_at(at, "unknown arrow '" + at.text + "'");
      for (const auto& p : pending)
        if (p.arrow == arrow) cur.fail_at(at, "map for arrow '" + at.text + "' given twice");
      cur.expect(Tok::Equals);
      cur.expect(Tok::LBracket);
      std::vector<RationalVector> rows;
      if (!cur.accept(Tok::RBracket)) {
        for (;;) {
          cur.expect(Tok::LBracket);
          RationalVector row;
          if (!cur.accept(Tok::RBracket)) {
            for (;;) {
              row.push_back(cur.signed_rational());
              if (cur.accept(Tok::RBracket)) break;
              cur.expect(Tok::Comma);
            }
          }
          rows.push_back(std::move(row));
          if (cur.accept(Tok::RBracket)) break;
          cur.expect(Tok::Comma);
        }
      }
      cur.expect_end();
      pending.push_back({arrow, std::move(rows), at});
    } else {
      cur.fail_at(kw, "unknown keyword '" + kw.text + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'module <name> over <algebra>' line", 1, 1);
  std::vector<Matrix> maps;
  for (const auto& arr : a.arrows())
    maps.emplace_back(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]),
                      static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]));
  for (const auto& p : pending) {
    const auto& arr = a.arrows()[static_cast<std::size_t>(p.arrow)];
    const auto rows = static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]);
    const auto cols = static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]);
    const bool empty_ok = (rows == 0 && (p.rows.empty() || (p.rows.size() == 1 && p.rows[0].empty())));
    if (!empty_ok) {
      if (p.rows.size() != rows)
        throw ParseError("map '" + arr.label + "' has " + std::to_string(p.rows.size()) + " rows, expected " +
                             std::to_string(rows),
                         p.at.line, p.at.column);
      for (const auto& r : p.rows)
        if (r.size() != cols)
          throw ParseError("map '" + arr.label + "' has a row of length " + std::to_string(r.size()) + ", expected " +
                               std::to_string(cols),
                           p.at.line, p.at.column);
      Matrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = p.rows[i][j];
      maps[static_cast<std::size_t>(p.arrow)] = std::move(m);
    }
  }
  return Representation(algebra, dims, maps, name);
}

Representation load_module(const std::string& filename, const AlgebraPtr& algebra) {
  std::ifstream in(filename);
  if (!in) throw InputError("cannot open module file '" + filename + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_module(ss.str(), algebra);
}

std::string emit_module(const Representation& m) {
  const Algebra& a = m.alg();
  std::string name = m.name();
  for (char& c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) c = '_';
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) name = "M" + name;
  std::ostringstream os;
  os << "module " << name << " over " << a.name() << "\n";
  for (int v = 0; v < a.n(); ++v) os << "dim " << a.vertex_id(v) << " = " << m.dim(v) << "\n";
  for (std::size_t k = 0; k < a.arrows().size(); ++k) {
    const Matrix& x = m.map(static_cast<int>(k));
    if (x.rows() == 0 || x.cols() == 0) continue;
    os << "map " << a.arrows()[k].label << " = [";
    for (std::size_t r = 0; r < x.rows(); ++r) {
      if (r) os << ", ";
      os << '[';
      for (std::size_t c = 0; c < x.cols(); ++c) {
        if (c) os << ", ";
        os << to_display_string(x(r, c));
      }
      os << ']';
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace greenscan
