#pragma once

#include "json.hpp"
#include <string>

#include "greenscan/geometry.hpp"

namespace greenscan::cli {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Json vector_json(const RationalVector& v);
Json dims_json(const IntVector& v);
Json module_json(const Representation& m);
Json phase_json(const PhaseValue& p);

/// Indented "key: value" rendering of a report for --format text.
std::string to_text(const Json& j);

}  // namespace greenscan::cli
