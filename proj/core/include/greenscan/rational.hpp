#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace greenscan {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long>;

/// Parses `p` or `p/q` (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always "p/q", also for integers ("3/1"), so consumers never see floats.
std::string to_fraction_string(const Rational& value);

/// Compact form for human output: "3", "-1/2".
std::string to_display_string(const Rational& value);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const IntVector& b);
RationalVector to_rational(const IntVector& v);

}  // namespace greenscan
