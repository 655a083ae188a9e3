#pragma once

#include <cstdint>
#include <string>

#include "greenscan/algebra.hpp"

namespace greenscan::zoo {

/// Algebra files for the standard small examples.
std::string a2_text();
/// Linearly oriented A_n: 1 -> 2 -> ... -> n.
std::string linear_a_text(int n);
std::string kronecker_text();
/// Cyclic quiver 2 => 1 => 3 => 2 (double arrows) with radical square zero.
std::string markov_text();
std::string one_vertex_text();
/// n vertices, no arrows.
std::string semisimple_text(int n);

/// Type A_n quiver with random orientation and random zero relations of length 2.
std::string random_tree_text(std::uint64_t seed, int n);
/// Cyclic quiver on n vertices with rad^k = 0 for a random k in [2, n].
std::string random_nakayama_text(std::uint64_t seed, int n);

AlgebraPtr a2();
AlgebraPtr kronecker();
AlgebraPtr markov();
AlgebraPtr one_vertex();

}  // namespace greenscan::zoo
