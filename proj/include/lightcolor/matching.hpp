#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lightcolor/conflict.hpp"

namespace lightcolor {

struct Matching {
  /// (left position, right position), ascending by left position.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const { return pairs.size(); }
};

/// Maximum-cardinality matching by repeated augmenting-path search (Kuhn).
/// Left vertices are tried in ascending position, neighbors in ascending
/// position, so the result depends only on the graph.
Matching max_bipartite_matching(const BipartiteGraph& g);

inline constexpr std::size_t kBruteForceMatchingLimit = 24;

/// Exhaustive maximum matching size, memoized on (left position, used right
/// set). Rejects graphs with more than 24 vertices in total.
std::size_t brute_force_matching_size(const BipartiteGraph& g);

}  // namespace lightcolor
