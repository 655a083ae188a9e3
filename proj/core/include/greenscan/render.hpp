#pragma once

#include <string>
#include <vector>

#include "greenscan/green_path.hpp"
#include "greenscan/tautilt.hpp"

namespace greenscan {

struct SvgChamber {
  std::vector<IntVector> generators;
  std::string label;
  /// wall_labels[k]: brick of the face opposite generators[k].
  std::vector<std::string> wall_labels;
};

struct SvgPath {
  GreenPath path;
  std::string label;
};

/// 800x800 picture of (R^2)* clipped to [-1.5,1.5]^2, or of the slice
/// x+y+z = 1 when rank is 3. Throws InputError for other ranks.
std::string render_svg(const std::vector<SvgChamber>& chambers, const std::vector<SvgPath>& paths, int rank);

/// DOT text: node label = g-matrix columns, edge label = wall brick dimension vector.
std::string exchange_graph_dot(const TauContext& ctx, const ExchangeGraph& graph);

}  // namespace greenscan
