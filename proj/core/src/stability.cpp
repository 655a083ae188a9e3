#include "greenscan/stability.hpp"

#include <algorithm>
#include <sstream>

#include "greenscan/errors.hpp"
#include "greenscan/homology.hpp"
#include "text_util.hpp"

namespace greenscan {

namespace {

std::string tuple_string(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_display_string(v[i]);
  os << ')';
  return os.str();
}

long total(const IntVector& d) {
  long t = 0;
  for (long x : d) t += x;
  return t;
}

bool is_zero_dims(const IntVector& d) { return total(d) == 0; }

// {x : f x in span(s)} for every vertex, as canonical column bases.
VertexSubspaces preimage(const Morphism& f, const Representation& source, const VertexSubspaces& s) {
  VertexSubspaces out;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    const Matrix& p = f.blocks[v];
    const std::size_t dv = source.dim(static_cast<int>(v));
    if (p.rows() == 0) {
      out.push_back(Matrix::identity(dv));
      continue;
    }
    const Matrix ann = nullspace(s[v].transpose()).transpose();  // rows vanishing on span(s)
    if (ann.rows() == 0) {
      out.push_back(Matrix::identity(dv));
      continue;
    }
    out.push_back(column_space(nullspace(ann * p)));
  }
  return out;
}

}  // namespace

PhaseValue PhaseValue::half_plane(Rational x, Rational y) {
  if (y <= 0) throw InputError("half-plane phase needs a positive imaginary part");
  PhaseValue p;
  p.kind_ = Kind::HalfPlane;
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

PhaseValue PhaseValue::path_time(Rational t) {
  PhaseValue p;
  p.kind_ = Kind::PathTime;
  p.x_ = std::move(t);
  return p;
}

int compare(const PhaseValue& a, const PhaseValue& b) {
  if (a.kind_ != b.kind_) throw InputError("phases of different kinds are not comparable");
  if (a.kind_ == PhaseValue::Kind::PathTime) return a.x_ < b.x_ ? -1 : (b.x_ < a.x_ ? 1 : 0);
  // b is counterclockwise from a iff the cross product is positive
  const Rational cross = a.x_ * b.y_ - b.x_ * a.y_;
  return -sgn(cross);
}

std::string PhaseValue::to_string() const {
  if (kind_ == Kind::PathTime) return to_display_string(x_);
  return "(" + to_display_string(x_) + "," + to_display_string(y_) + ")";
}

CentralCharge parse_charge(std::string_view text, std::size_t n) {
  CentralCharge z;
  bool have_a = false, have_b = false;
  for (auto part : detail::split(text, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw InputError("charge parts look like a=(...) and b=(...)");
    const auto name = detail::trim(part.substr(0, eq));
    const auto vec = detail::parse_tuple(part.substr(eq + 1));
    if (vec.size() != n) throw InputError("charge vector '" + std::string(name) + "' must have " + std::to_string(n) + " entries");
    if (name == "a") {
      z.a = vec;
      have_a = true;
    } else if (name == "b") {
      z.b = vec;
      have_b = true;
    } else {
      throw InputError("unknown charge component '" + std::string(name) + "'");
    }
  }
  if (!have_a || !have_b) throw InputError("a charge needs both a=(...) and b=(...)");
  for (const auto& x : z.b)
    if (x <= 0) throw InputError("the imaginary part b must be positive on every simple");
  return z;
}

StabilitySpec StabilitySpec::charge(CentralCharge z) {
  if (z.a.size() != z.b.size() || z.a.empty()) throw InputError("charge vectors must have equal positive length");
  for (const auto& x : z.b)
    if (x <= 0) throw InputError("the imaginary part b must be positive on every simple");
  StabilitySpec s;
  s.data_ = std::move(z);
  return s;
}

StabilitySpec StabilitySpec::path(GreenPath gamma) {
  StabilitySpec s;
  s.data_ = std::move(gamma);
  return s;
}

std::size_t StabilitySpec::rank() const {
  return is_path() ? green_path().dimension() : central_charge().a.size();
}

PhaseValue StabilitySpec::phase(const IntVector& dims) const {
  if (is_zero_dims(dims)) throw InputError("the zero module has no phase");
  if (is_path()) {
    const auto t = crossing_time(green_path(), dims);
    if (!t) {
      const RhoProfile p = rho_profile(green_path(), dims);
      std::ostringstream os;
      os << "the path meets the hyperplane of " << dims_string(dims) << ' '
         << (p.degenerate ? "along a segment" : std::to_string(p.roots.size()) + " times");
      throw Refusal("NOT_GREEN_PATH", os.str());
    }
    return PhaseValue::path_time(*t);
  }
  const auto& z = central_charge();
  return PhaseValue::half_plane(dot(z.a, dims), dot(z.b, dims));
}

std::string StabilitySpec::describe() const {
  if (is_path()) return "path " + green_path().to_string();
  return "charge a=" + tuple_string(central_charge().a) + ";b=" + tuple_string(central_charge().b);
}

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "stable";
    case StabilityClass::Semistable: return "semistable";
    case StabilityClass::Unstable: return "unstable";
    case StabilityClass::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(TorsionSide s) {
  switch (s) {
    case TorsionSide::InT: return "T";
    case TorsionSide::InF: return "F";
    case TorsionSide::Neither: return "neither";
  }
  return "?";
}

Classification theta_classify(const RationalVector& theta, const Representation& m, const SubmoduleBudget& budget) {
  if (m.is_zero()) throw InputError("stability of the zero module is undefined");
  Classification out;
  if (dot(theta, m.dims()) != 0) {
    out.cls = StabilityClass::Unstable;
    return out;
  }
  const SubmoduleLattice lat = submodules(m, budget);
  bool tie = false;
  for (const auto& s : lat.submodules) {
    if (is_zero_dims(s.dims) || s.dims == m.dims()) continue;
    const int sg = sgn(dot(theta, s.dims));
    if (sg > 0) {
      out.cls = StabilityClass::Unstable;
      out.witness = s.dims;
      return out;
    }
    if (sg == 0 && !tie) {
      tie = true;
      out.witness = s.dims;
    }
  }
  if (!lat.complete) {
    out.cls = StabilityClass::Inconclusive;
    out.witness.reset();
    return out;
  }
  out.cls = tie ? StabilityClass::Semistable : StabilityClass::Stable;
  return out;
}

Classification classify(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget) {
  if (m.is_zero()) throw InputError("stability of the zero module is undefined");
  Classification out;
  const PhaseValue pm = spec.phase(m);
  const SubmoduleLattice lat = submodules(m, budget);
  bool tie = false;
  for (const auto& s : lat.submodules) {
    if (is_zero_dims(s.dims) || s.dims == m.dims()) continue;
    const int c = compare(spec.phase(s.dims), pm);
    if (c > 0) {
      out.cls = StabilityClass::Unstable;
      out.witness = s.dims;
      return out;
    }
    if (c == 0 && !tie) {
      tie = true;
      out.witness = s.dims;
    }
  }
  if (!lat.complete) {
    out.cls = StabilityClass::Inconclusive;
    out.witness.reset();
    return out;
  }
  out.cls = tie ? StabilityClass::Semistable : StabilityClass::Stable;
  return out;
}

HNFiltration hn_filtration(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget) {
  HNFiltration hn;
  Representation current = m;
  Morphism proj = identity_morphism(m);
  while (!current.is_zero()) {
    const SubmoduleLattice lat = submodules(current, budget);
    if (!lat.complete)
      throw BoundExhausted("submodules of a module with dimension vector " + dims_string(current.dims()) +
                           " are not certified complete");
    const Submodule* best = nullptr;
    std::optional<PhaseValue> best_phase;
    for (const auto& s : lat.submodules) {
      if (is_zero_dims(s.dims)) continue;
      const PhaseValue p = spec.phase(s.dims);
      const int c = best_phase ? compare(p, *best_phase) : 1;
      if (c > 0 || (c == 0 && total(s.dims) > total(best->dims))) {
        best = &s;
        best_phase = p;
      }
    }
    hn.chain.push_back(preimage(proj, m, best->spaces));
    hn.factors.push_back(subrepresentation(current, best->spaces).first);
    hn.phases.push_back(*best_phase);
    auto [next, q] = quotient(current, best->spaces);
    proj = q.compose_after(proj);
    current = next;
  }
  for (std::size_t k = 1; k < hn.phases.size(); ++k)
    if (!(hn.phases[k] < hn.phases[k - 1])) throw InvariantViolation("HN phases are not strictly decreasing");
  return hn;
}

Destabilizing max_destab_subobject(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget) {
  const HNFiltration hn = hn_filtration(spec, m, budget);
  auto [sub, inc] = subrepresentation(m, hn.chain.front());
  return {sub, inc};
}

Destabilizing max_destab_quotient(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget) {
  const HNFiltration hn = hn_filtration(spec, m, budget);
  if (hn.chain.size() == 1) return {m, identity_morphism(m)};
  auto [q, proj] = quotient(m, hn.chain[hn.chain.size() - 2]);
  return {q, proj};
}

std::vector<Representation> stable_factors(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget) {
  const Classification c = classify(spec, m, budget);
  if (c.cls == StabilityClass::Unstable) throw InputError("stable factors need a semistable module");
  if (c.cls == StabilityClass::Inconclusive) throw BoundExhausted("semistability of the input is undecided");
  const PhaseValue phi = spec.phase(m);
  std::vector<Representation> out;
  Representation current = m;
  while (!current.is_zero()) {
    const SubmoduleLattice lat = submodules(current, budget);
    if (!lat.complete) throw BoundExhausted("submodule search not certified complete");
    const Submodule* best = nullptr;
    for (const auto& s : lat.submodules) {
      if (is_zero_dims(s.dims) || compare(spec.phase(s.dims), phi) != 0) continue;
      if (!best || total(s.dims) < total(best->dims)) best = &s;
    }
    if (!best) throw InvariantViolation("semistable module without an equal-phase submodule");
    out.push_back(subrepresentation(current, best->spaces).first);
    current = quotient(current, best->spaces).first;
  }
  std::stable_sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) { return a.dims() < b.dims(); });
  return out;
}

TorsionSide torsion_membership(const StabilitySpec& spec, const PhaseValue& p, const Representation& m, const SubmoduleBudget& budget) {
  const HNFiltration hn = hn_filtration(spec, m, budget);
  if (hn.phases.back() >= p) return TorsionSide::InT;
  if (hn.phases.front() < p) return TorsionSide::InF;
  return TorsionSide::Neither;
}

MgsExtraction extract_mgs(const StabilitySpec& spec, const std::vector<Representation>& universe, const SubmoduleBudget& budget) {
  MgsExtraction out;
  std::vector<std::optional<PhaseValue>> last_phase(universe.size());
  try {
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const Classification c = classify(spec, universe[i], budget);
      if (c.cls == StabilityClass::Inconclusive) ++out.inconclusive;
      if (c.cls == StabilityClass::Stable) out.stables.push_back(i);
      try {
        last_phase[i] = hn_filtration(spec, universe[i], budget).phases.back();
      } catch (const BoundExhausted&) {
        ++out.inconclusive;
      }
    }
  } catch (const Refusal& r) {
    out.refused = true;
    out.reason_code = r.code();
    out.detail = r.what();
    out.stables.clear();
    return out;
  }
  std::stable_sort(out.stables.begin(), out.stables.end(), [&](std::size_t a, std::size_t b) {
    return spec.phase(universe[a]) > spec.phase(universe[b]);
  });
  for (std::size_t i : out.stables) out.phases.push_back(spec.phase(universe[i]));
  for (std::size_t k = 1; k < out.stables.size(); ++k) {
    if (out.phases[k] == out.phases[k - 1]) {
      out.refused = true;
      out.reason_code = "NOT_DISCRETE";
      out.detail = "stables " + universe[out.stables[k - 1]].name() + " and " + universe[out.stables[k]].name() +
                   " share the phase " + out.phases[k].to_string();
      return out;
    }
  }
  out.chain.push_back(TorsionSnapshot{});
  for (std::size_t k = 0; k < out.stables.size(); ++k) {
    TorsionSnapshot snap;
    snap.threshold = out.phases[k];
    snap.generators.assign(out.stables.begin(), out.stables.begin() + static_cast<long>(k) + 1);
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (last_phase[i] && *last_phase[i] >= out.phases[k]) snap.members.push_back(i);
    out.chain.push_back(std::move(snap));
  }
  bool increasing = true;
  for (std::size_t k = 1; k < out.chain.size(); ++k)
    increasing = increasing && out.chain[k].members.size() > out.chain[k - 1].members.size();
  out.endpoints_ok = increasing && out.chain.back().members.size() == universe.size();
  return out;
}

RationalVector pair_functional(const std::vector<IntVector>& m_gvectors, const std::vector<int>& p_vertices,
                               const std::vector<Rational>& alpha, std::size_t n) {
  RationalVector theta(n, Rational(0));
  std::size_t k = 0;
  auto weight = [&]() { return alpha.empty() ? Rational(1) : alpha.at(k); };
  for (const auto& g : m_gvectors) {
    const Rational w = weight();
    if (w <= 0) throw InputError("pair weights must be positive");
    for (std::size_t i = 0; i < n; ++i) theta[i] += w * g[i];
    ++k;
  }
  for (int v : p_vertices) {
    const Rational w = weight();
    if (w <= 0) throw InputError("pair weights must be positive");
    theta[static_cast<std::size_t>(v)] -= w;
    ++k;
  }
  return theta;
}

SemistableProbe semistable_category_probe(const std::vector<Representation>& m_summands, const std::vector<int>& p_vertices,
                                          const std::vector<Rational>& alpha, const std::vector<Representation>& universe) {
  SemistableProbe out;
  if (universe.empty()) return out;
  const std::size_t n = static_cast<std::size_t>(universe.front().alg().n());
  std::vector<IntVector> gs;
  std::vector<Representation> taus;
  for (const auto& m : m_summands) {
    gs.push_back(g_vector(m));
    taus.push_back(tau(m));
  }
  out.theta = pair_functional(gs, p_vertices, alpha, n);
  out.expected_stable_count = static_cast<long>(n) - static_cast<long>(m_summands.size()) - static_cast<long>(p_vertices.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const Representation& nmod = universe[i];
    ProbeEntry e;
    e.index = i;
    e.theta_class = theta_classify(out.theta, nmod).cls;
    bool perp = true;
    for (int v : p_vertices) perp = perp && nmod.dim(v) == 0;
    for (std::size_t k = 0; k < m_summands.size() && perp; ++k)
      perp = hom_dim(m_summands[k], nmod) == 0 && (taus[k].is_zero() || hom_dim(nmod, taus[k]) == 0);
    e.perpendicular = perp;
    if (e.theta_class == StabilityClass::Inconclusive) {
      ++out.inconclusive;
    } else {
      const bool semistable = e.theta_class != StabilityClass::Unstable;
      e.agrees = semistable == perp;
      if (!e.agrees) ++out.disagreements;
      if (e.theta_class == StabilityClass::Stable) ++out.stable_count;
    }
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace greenscan
