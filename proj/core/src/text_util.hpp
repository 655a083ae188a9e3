#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "greenscan/errors.hpp"
#include "greenscan/rational.hpp"

namespace greenscan::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

/// "(1,-2,3/4)" -> rationals. Throws InputError.
inline RationalVector parse_tuple(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw InputError("expected a parenthesized tuple, got '" + std::string(s) + "'");
  RationalVector out;
  for (auto part : split(s.substr(1, s.size() - 2), ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const std::invalid_argument&) {
      throw InputError("bad rational '" + std::string(part) + "'");
    }
  }
  return out;
}

}  // namespace greenscan::detail
