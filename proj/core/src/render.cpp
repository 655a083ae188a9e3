#include "greenscan/render.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "greenscan/errors.hpp"

namespace greenscan {

namespace {

constexpr long kCanvas = 800;

/// Exact rounding to two decimals.
std::string fixed2(const Rational& q) {
  const Rational scaled = q * 100 + Rational(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool neg = r < 0;
  if (neg) r = -r;
  const mpz_class whole = r / 100, frac = r % 100;
  std::string out = (neg ? "-" : "") + whole.get_str() + ".";
  if (frac < 10) out += "0";
  return out + frac.get_str();
}

struct Pt {
  Rational x, y;
};

std::string px(const Pt& p) {
  const Rational s(kCanvas, 3);
  return fixed2(Rational(kCanvas / 2) + p.x * s) + "," + fixed2(Rational(kCanvas / 2) - p.y * s);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

Rational max_norm(const Pt& p) { return std::max(abs(p.x), abs(p.y)); }

/// Scales a nonzero vector so that its max norm is r.
Pt scaled(const Pt& p, const Rational& r) {
  const Rational m = max_norm(p);
  return {p.x * r / m, p.y * r / m};
}

/// Plane x+y+z = 1 drawn with e1, e2, e3 at (1,-1/2), (-1,-1/2), (0,1).
std::optional<Pt> slice(const RationalVector& v) {
  const Rational s = v[0] + v[1] + v[2];
  if (s <= 0) return std::nullopt;
  const Rational x = v[0] / s, y = v[1] / s, z = v[2] / s;
  return Pt{x - y, z - (x + y) / 2};
}

std::optional<Pt> slice(const IntVector& v) { return slice(to_rational(v)); }

void text(std::ostringstream& os, const Pt& p, const std::string& label, const char* cls) {
  const std::string at = px(p);
  const auto comma = at.find(',');
  os << "  <text class=\"" << cls << "\" x=\"" << at.substr(0, comma) << "\" y=\"" << at.substr(comma + 1)
     << "\" text-anchor=\"middle\">" << escape(label) << "</text>\n";
}

}  // namespace

std::string render_svg(const std::vector<SvgChamber>& chambers, const std::vector<SvgPath>& paths, int rank) {
  if (rank != 2 && rank != 3) throw InputError("rendering supports rank 2, or rank 3 sliced by x+y+z=1");
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << "  <style>.chamber{fill:#e8f0fa;stroke:none}.wall{stroke:#333;stroke-width:2}"
        ".path{fill:none;stroke:#2a8a3a;stroke-width:2}.clabel{font:12px sans-serif;fill:#224}"
        ".wlabel{font:12px sans-serif;fill:#a22}.plabel{font:12px sans-serif;fill:#2a8a3a}</style>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\" stroke=\"black\"/>\n";
  if (chambers.empty() && paths.empty()) {
    os << "</svg>\n";
    return os.str();
  }
  const Pt origin{0, 0};
  const Rational edge(3, 2);

  if (rank == 2) {
    os << "  <line x1=\"0\" y1=\"400.00\" x2=\"800\" y2=\"400.00\" stroke=\"#ccc\"/>\n";
    os << "  <line x1=\"400.00\" y1=\"0\" x2=\"400.00\" y2=\"800\" stroke=\"#ccc\"/>\n";
    std::map<IntVector, std::string> rays;
    for (const auto& c : chambers) {
      if (c.generators.size() != 2) throw InputError("rank 2 chambers need two generators");
      const Pt a = scaled({c.generators[0][0], c.generators[0][1]}, edge);
      const Pt b = scaled({c.generators[1][0], c.generators[1][1]}, edge);
      os << "  <polygon class=\"chamber\" points=\"" << px(origin) << ' ' << px(a) << ' ' << px(b) << "\"/>\n";
      for (std::size_t k = 0; k < c.wall_labels.size() && k < 2; ++k) rays.emplace(c.generators[1 - k], c.wall_labels[k]);
    }
    for (const auto& [ray, label] : rays) {
      const Pt end = scaled({ray[0], ray[1]}, edge);
      os << "  <line class=\"wall\" x1=\"400.00\" y1=\"400.00\" x2=\"" << px(end).substr(0, px(end).find(','))
         << "\" y2=\"" << px(end).substr(px(end).find(',') + 1) << "\"/>\n";
      text(os, scaled({ray[0], ray[1]}, Rational(13, 10)), "D(" + label + ")", "wlabel");
    }
    for (const auto& c : chambers) {
      Pt bary{c.generators[0][0] + c.generators[1][0], c.generators[0][1] + c.generators[1][1]};
      text(os, scaled(bary, Rational(7, 10)), c.label, "clabel");
    }
    for (const auto& p : paths) {
      os << "  <polyline class=\"path\" points=\"";
      for (std::size_t k = 0; k < p.path.points().size(); ++k) {
        const auto& q = p.path.points()[k];
        os << (k ? " " : "") << px({q[0], q[1]});
      }
      os << "\"/>\n";
      const auto mid = p.path.at(Rational(1, 4));
      text(os, {mid[0], mid[1]}, p.label, "plabel");
    }
  } else {
    std::size_t omitted = 0;
    std::map<std::pair<IntVector, IntVector>, std::string> edges;
    for (const auto& c : chambers) {
      if (c.generators.size() != 3) throw InputError("rank 3 chambers need three generators");
      std::vector<Pt> corners;
      for (const auto& g : c.generators)
        if (auto p = slice(g)) corners.push_back(*p);
      if (corners.size() != 3) {
        ++omitted;
        continue;
      }
      os << "  <polygon class=\"chamber\" points=\"" << px(corners[0]) << ' ' << px(corners[1]) << ' ' << px(corners[2])
         << "\"/>\n";
      for (std::size_t k = 0; k < c.wall_labels.size() && k < 3; ++k) {
        IntVector u = c.generators[(k + 1) % 3], v = c.generators[(k + 2) % 3];
        if (v < u) std::swap(u, v);
        edges.emplace(std::make_pair(u, v), c.wall_labels[k]);
      }
    }
    for (const auto& [uv, label] : edges) {
      const Pt a = *slice(uv.first), b = *slice(uv.second);
      const std::string pa = px(a), pb = px(b);
      os << "  <line class=\"wall\" x1=\"" << pa.substr(0, pa.find(',')) << "\" y1=\"" << pa.substr(pa.find(',') + 1)
         << "\" x2=\"" << pb.substr(0, pb.find(',')) << "\" y2=\"" << pb.substr(pb.find(',') + 1) << "\"/>\n";
      text(os, {(a.x + b.x) / 2, (a.y + b.y) / 2}, "D(" + label + ")", "wlabel");
    }
    for (const auto& c : chambers) {
      std::vector<Pt> corners;
      for (const auto& g : c.generators)
        if (auto p = slice(g)) corners.push_back(*p);
      if (corners.size() != 3) continue;
      text(os, {(corners[0].x + corners[1].x + corners[2].x) / 3, (corners[0].y + corners[1].y + corners[2].y) / 3},
           c.label, "clabel");
    }
    for (const auto& p : paths) {
      std::vector<Pt> pts;
      for (const auto& q : p.path.points())
        if (auto s = slice(q)) pts.push_back(*s);
      if (pts.size() < 2) continue;
      os << "  <polyline class=\"path\" points=\"";
      for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? " " : "") << px(pts[k]);
      os << "\"/>\n";
      text(os, pts.front(), p.label, "plabel");
    }
    if (omitted) os << "  <!-- " << omitted << " chambers do not meet the slice -->\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string exchange_graph_dot(const TauContext& ctx, const ExchangeGraph& graph) {
  auto quote = [](const std::string& s) {
    std::string out;
    for (char c : s) out += c == '"' ? std::string("\\\"") : std::string(1, c);
    return out;
  };
  std::ostringstream os;
  os << "digraph exchange {\n";
  os << "  // dim bound " << graph.dim_bound << ", node cap " << graph.node_cap
     << (graph.complete ? ", complete" : ", truncated") << "\n";
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    std::string label;
    for (const auto& col : pair_key(ctx, graph.nodes[v])) label += (label.empty() ? "" : " ") + dims_string(col);
    os << "  n" << v << " [label=\"" << label << "\", tooltip=\"" << quote(describe(ctx, graph.nodes[v])) << "\"];\n";
  }
  for (const auto& e : graph.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << dims_string(e.brick.dims()) << "\"];\n";
  for (std::size_t s = 0; s < graph.stubs.size(); ++s) {
    const auto& st = graph.stubs[s];
    os << "  stub" << s << " [shape=point];\n";
    os << "  n" << st.node << " -> stub" << s << " [style=dashed, label=\"" << quote(st.reason) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace greenscan
