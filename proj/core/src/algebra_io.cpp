#include <fstream>
#include <sstream>

#include "greenscan/algebra.hpp"
#include "greenscan/errors.hpp"
#include "lexer.hpp"

namespace greenscan {

using detail::LineCursor;
using detail::Tok;

namespace {

std::string raw_name(std::string_view line, std::string_view keyword, int line_no) {
  std::string_view rest = line.substr(line.find(keyword) + keyword.size());
  if (auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
  const auto b = rest.find_first_not_of(" \t");
  if (b == std::string_view::npos) throw ParseError("missing name", line_no, static_cast<int>(line.size()) + 1);
  const auto e = rest.find_last_not_of(" \t");
  std::string name(rest.substr(b, e - b + 1));
  if (name.find_first_of(" \t") != std::string::npos)
    throw ParseError("name must not contain whitespace", line_no, static_cast<int>(line.find(keyword) + keyword.size() + b) + 1);
  return name;
}

}  // namespace

AlgebraPtr parse_algebra(std::string_view text, const AlgebraLimits& limits) {
  std::string name;
  std::vector<long> vertex_ids;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  bool have_vertices = false;

  auto vertex_of = [&](long id, const detail::Token& at) {
    for (std::size_t i = 0; i < vertex_ids.size(); ++i)
      if (vertex_ids[i] == id) return static_cast<int>(i);
    throw ParseError("undeclared vertex " + std::to_string(id), at.line, at.column);
  };

  const auto lines = detail::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    LineCursor cur(detail::tokenize_line(lines[li], line_no));
    if (cur.at(Tok::End)) continue;
    const detail::Token kw = cur.expect(Tok::Ident);
    if (kw.text == "algebra") {
      if (!name.empty()) cur.fail_at(kw, "duplicate 'algebra' line");
      name = raw_name(lines[li], "algebra", line_no);
    } else if (kw.text == "vertices") {
      if (have_vertices) cur.fail_at(kw, "duplicate 'vertices' line");
      have_vertices = true;
      while (!cur.at(Tok::End)) {
        const detail::Token at = cur.peek();
        const long id = cur.positive_integer();
        for (long v : vertex_ids)
          if (v == id) cur.fail_at(at, "duplicate vertex " + std::to_string(id));
        vertex_ids.push_back(id);
      }
      if (vertex_ids.empty()) cur.fail("expected at least one vertex id");
    } else if (kw.text == "arrow") {
      if (!have_vertices) cur.fail_at(kw, "'arrow' before 'vertices'");
      const detail::Token label = cur.expect(Tok::Ident);
      for (const auto& a : arrows)
        if (a.label == label.text) cur.fail_at(label, "duplicate arrow label '" + label.text + "'");
      cur.expect(Tok::Colon);
      const detail::Token s_tok = cur.peek();
      const int s = vertex_of(cur.positive_integer(), s_tok);
      cur.expect(Tok::Arrow);
      const detail::Token t_tok = cur.peek();
      const int t = vertex_of(cur.positive_integer(), t_tok);
      cur.expect_end();
      arrows.push_back({label.text, s, t});
    } else if (kw.text == "relation") {
      Relation rel;
      bool first = true;
      while (!cur.at(Tok::End)) {
        int sign = 1;
        if (!first) {
          if (cur.at(Tok::Plus)) {
            cur.next();
          } else if (cur.at(Tok::Minus)) {
            cur.next();
            sign = -1;
          } else {
            cur.fail("expected '+' or '-' between relation terms, found " + LineCursor::describe(cur.peek()));
          }
        }
        Rational coef = 1;
        if (cur.at(Tok::Number) || cur.at(Tok::Minus) || cur.at(Tok::Plus)) {
          const detail::Token at = cur.peek();
          coef = cur.signed_rational();
          if (sgn(coef) == 0) cur.fail_at(at, "relation coefficients must be nonzero");
        }
        if (sign < 0) coef = -coef;
        Path path;
        const detail::Token path_start = cur.peek();
        for (;;) {
          const detail::Token a = cur.expect(Tok::Ident);
          int idx = -1;
          for (std::size_t k = 0; k < arrows.size(); ++k)
            if (arrows[k].label == a.text) idx = static_cast<int>(k);
          if (idx < 0) cur.fail_at(a, "unknown arrow '" + a.text + "'");
          if (!path.empty() && arrows[static_cast<std::size_t>(path.back())].target != arrows[static_cast<std::size_t>(idx)].source)
            cur.fail_at(a, "arrow '" + a.text + "' does not compose with the preceding arrow");
          path.push_back(idx);
          if (!cur.accept(Tok::Star)) break;
        }
        if (path.size() < 2)
          cur.fail_at(path_start, "non-admissible relation: path of length " + std::to_string(path.size()) +
                                      " (relations need paths of length >= 2)");
        rel.terms.push_back({coef, std::move(path)});
        first = false;
      }
      if (rel.terms.empty()) cur.fail("empty relation");
      relations.push_back(std::move(rel));
    } else {
      cur.fail_at(kw, "unknown keyword '" + kw.text + "'");
    }
  }
  if (name.empty()) throw ParseError("missing 'algebra <name>' line", 1, 1);
  if (!have_vertices) throw ParseError("missing 'vertices' line", 1, 1);
  return Algebra::create(name, vertex_ids, arrows, relations, limits);
}

AlgebraPtr load_algebra(const std::string& filename, const AlgebraLimits& limits) {
  std::ifstream in(filename);
  if (!in) throw InputError("cannot open algebra file '" + filename + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), limits);
}

std::string emit_algebra(const Algebra& algebra) {
  std::ostringstream os;
  os << "algebra " << algebra.name() << "\n";
  os << "vertices";
  for (long id : algebra.vertex_ids()) os << ' ' << id;
  os << "\n";
  for (const auto& a : algebra.arrows())
    os << "arrow " << a.label << " : " << algebra.vertex_id(a.source) << " -> " << algebra.vertex_id(a.target) << "\n";
  for (const auto& r : algebra.relations()) {
    os << "relation";
    bool first = true;
    for (const auto& t : r.terms) {
      if (!first) os << (sgn(t.coefficient) < 0 ? " -" : " +");
      const Rational c = first ? t.coefficient : Rational(abs(t.coefficient));
      os << ' ' << to_display_string(c) << ' ' << algebra.path_label(t.path, 0);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace greenscan
