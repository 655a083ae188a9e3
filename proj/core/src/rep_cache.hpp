#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "greenscan/homology.hpp"
#include "greenscan/submodules.hpp"

namespace greenscan {

struct RepCache {
  std::recursive_mutex mutex;
  std::optional<Presentation> presentation;
  std::unique_ptr<Representation> tau;
  std::optional<EndInfo> end;
  std::optional<SubmoduleLattice> lattice;
  std::optional<Decomposition> decomposition;
};

}  // namespace greenscan
