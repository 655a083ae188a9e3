#include "report.hpp"

#include <sstream>

namespace greenscan::cli {

Json rational_json(const Rational& q) { return to_fraction_string(q); }

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Json dims_json(const IntVector& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(x);
  return out;
}

Json module_json(const Representation& m) {
  Json out;
  out["name"] = m.name();
  out["dims"] = dims_json(m.dims());
  return out;
}

Json phase_json(const PhaseValue& p) {
  Json out;
  if (p.kind() == PhaseValue::Kind::PathTime) {
    out["time"] = rational_json(p.time());
  } else {
    out["z"] = Json::array({rational_json(p.x()), rational_json(p.y())});
  }
  return out;
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_scalar_array(value)) {
        os << pad << key << ":\n";
        emit(os, value, depth + 1);
      } else if (is_scalar_array(value)) {
        os << pad << key << ": (";
        bool first = true;
        for (const auto& x : value) {
          os << (first ? "" : ", ") << scalar(x);
          first = false;
        }
        os << ")\n";
      } else {
        os << pad << key << ": " << scalar(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& x : j) {
      if (x.is_structured() && !is_scalar_array(x)) {
        os << pad << "- [" << i << "]\n";
        emit(os, x, depth + 1);
      } else {
        Json wrapper;
        wrapper["-"] = x;
        emit(os, wrapper, depth);
      }
      ++i;
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string to_text(const Json& j) {
  std::ostringstream os;
  emit(os, j, 0);
  return os.str();
}

}  // namespace greenscan::cli
