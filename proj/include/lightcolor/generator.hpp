#pragma once

#include <cstddef>
#include <cstdint>

#include "lightcolor/instance.hpp"

namespace lightcolor {

struct GenParams {
  Vertex num_vertices = 8;
  Vertex max_degree = 3;
  std::size_t num_subtrees = 6;
  std::size_t min_arcs = 1;
  std::size_t max_arcs = 4;
  std::uint64_t seed = 1;
};

/// Throws InvalidInput for infeasible parameters.
void validate_params(const GenParams& p);

/// Deterministic in `p`. The tree grows by attaching vertex i (i = 1..n-1)
/// to a uniformly chosen earlier vertex that still has degree capacity. Each
/// subtree starts at a uniform root and repeatedly adds a uniformly chosen
/// outward arc from its boundary until it reaches a size drawn uniformly from
/// [min_arcs, max_arcs] or runs out of boundary.
Instance generate_instance(const GenParams& p);

}  // namespace lightcolor
