#include "greenscan/green_path.hpp"

#include <algorithm>
#include <sstream>

#include "greenscan/errors.hpp"
#include "text_util.hpp"

namespace greenscan {

GreenPath::GreenPath(std::vector<RationalVector> points, std::vector<Rational> times)
    : points_(std::move(points)), times_(std::move(times)) {
  if (points_.size() < 2) throw InputError("a path needs at least two breakpoints");
  if (times_.size() != points_.size()) throw InputError("one time per breakpoint is required");
  const std::size_t n = points_.front().size();
  if (n == 0) throw InputError("path breakpoints must be nonempty vectors");
  for (const auto& p : points_)
    if (p.size() != n) throw InputError("path breakpoints have different lengths");
  if (times_.front() != 0 || times_.back() != 1) throw InputError("path times must run from 0 to 1");
  for (std::size_t k = 1; k < times_.size(); ++k)
    if (times_[k] <= times_[k - 1]) throw InputError("path times must increase strictly");
  for (std::size_t i = 0; i < n; ++i) {
    if (points_.front()[i] != 1) throw InputError("a green path starts at (1,...,1)");
    if (points_.back()[i] != -1) throw InputError("a green path ends at (-1,...,-1)");
  }
}

GreenPath GreenPath::uniform(std::vector<RationalVector> points) {
  std::vector<Rational> times;
  const std::size_t r = points.size() > 1 ? points.size() - 1 : 1;
  for (std::size_t k = 0; k < points.size(); ++k) times.emplace_back(Rational(static_cast<long>(k), static_cast<long>(r)));
  for (auto& t : times) t.canonicalize();
  return GreenPath(std::move(points), std::move(times));
}

RationalVector GreenPath::at(const Rational& t) const {
  if (t <= 0) return points_.front();
  if (t >= 1) return points_.back();
  std::size_t k = 1;
  while (times_[k] < t) ++k;
  const Rational s = (t - times_[k - 1]) / (times_[k] - times_[k - 1]);
  RationalVector out(points_[k].size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = points_[k - 1][i] + s * (points_[k][i] - points_[k - 1][i]);
  return out;
}

std::string GreenPath::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (k) os << ';';
    os << '(';
    for (std::size_t i = 0; i < points_[k].size(); ++i) os << (i ? "," : "") << to_display_string(points_[k][i]);
    os << ')';
  }
  return os.str();
}

GreenPath parse_green_path(std::string_view text, std::size_t n) {
  std::vector<RationalVector> points;
  for (const auto& part : detail::split(text, ';')) {
    const auto vec = detail::parse_tuple(part);
    if (vec.size() != n)
      throw InputError("path breakpoint '" + std::string(detail::trim(part)) + "' does not have " + std::to_string(n) + " entries");
    points.push_back(vec);
  }
  return GreenPath::uniform(std::move(points));
}

Rational rho(const GreenPath& path, const IntVector& dims, const Rational& t) { return dot(path.at(t), dims); }

RhoProfile rho_profile(const GreenPath& path, const IntVector& dims) {
  RhoProfile out;
  const auto& pts = path.points();
  const auto& ts = path.times();
  auto add = [&](const Rational& t) {
    if (out.roots.empty() || out.roots.back() != t) out.roots.push_back(t);
  };
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Rational v0 = dot(pts[k], dims), v1 = dot(pts[k + 1], dims);
    if (v0 == 0 && v1 == 0) {
      out.degenerate = true;
      add(ts[k]);
      add(ts[k + 1]);
      continue;
    }
    if (v0 == 0) add(ts[k]);
    if (sgn(v0) * sgn(v1) < 0) add(ts[k] + (ts[k + 1] - ts[k]) * v0 / (v0 - v1));
    if (v1 == 0) add(ts[k + 1]);
  }
  return out;
}

std::optional<Rational> crossing_time(const GreenPath& path, const IntVector& dims) {
  const RhoProfile p = rho_profile(path, dims);
  if (!p.single_crossing()) return std::nullopt;
  return p.roots.front();
}

}  // namespace greenscan
