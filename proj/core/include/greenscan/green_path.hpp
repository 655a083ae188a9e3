#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenscan/rational.hpp"

namespace greenscan {

/// Piecewise-linear path in (R^n)* through rational breakpoints at rational
/// times 0 = t_0 < ... < t_r = 1, from (1,...,1) to (-1,...,-1).
class GreenPath {
 public:
  GreenPath() = default;
  /// Throws InputError unless the endpoint and time invariants hold.
  GreenPath(std::vector<RationalVector> points, std::vector<Rational> times);
  /// Breakpoints at uniform times k/r.
  static GreenPath uniform(std::vector<RationalVector> points);

  std::size_t dimension() const { return points_.empty() ? 0 : points_.front().size(); }
  const std::vector<RationalVector>& points() const { return points_; }
  const std::vector<Rational>& times() const { return times_; }
  RationalVector at(const Rational& t) const;
  std::string to_string() const;

 private:
  std::vector<RationalVector> points_;
  std::vector<Rational> times_;
};

/// Parses "(1,1);(0,3/2);(-1,-1)" with uniform times; n is the expected rank.
GreenPath parse_green_path(std::string_view text, std::size_t n);

/// Zeros of rho(t) = <gamma(t), d> on [0,1].
struct RhoProfile {
  std::vector<Rational> roots;  // sorted, distinct
  bool degenerate = false;      // rho vanishes on a whole segment
  /// Exactly one root, rho > 0 before it and rho < 0 after it.
  bool single_crossing() const { return !degenerate && roots.size() == 1; }
};
RhoProfile rho_profile(const GreenPath& path, const IntVector& dims);
Rational rho(const GreenPath& path, const IntVector& dims, const Rational& t);
/// The crossing time t_M when it is unique.
std::optional<Rational> crossing_time(const GreenPath& path, const IntVector& dims);

}  // namespace greenscan
