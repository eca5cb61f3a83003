#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "lightcolor/instance.hpp"

namespace lightcolor {

/// Collision graph over subtree indices.
struct ConflictGraph {
  std::size_t n = 0;
  /// Sorted, no self-entries, symmetric.
  std::vector<std::vector<SubtreeId>> adjacency;

  bool adjacent(SubtreeId i, SubtreeId j) const;
  std::size_t edge_count() const;
};

/// Built per directed edge (every arc population is a clique), then deduplicated.
ConflictGraph build_conflict_graph(const Instance& inst);

/// Bipartite graph whose vertices are subtree indices.
struct BipartiteGraph {
  std::vector<SubtreeId> left;
  std::vector<SubtreeId> right;
  /// (left position, right position), sorted, no duplicates.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Returns true to drop an otherwise admissible complement edge.
using PairExclusion = std::function<bool(SubtreeId, SubtreeId)>;

/// Complement of the conflict graph induced on `subset`, where every member
/// of `subset` lies on host edge {u,v}. The left side holds the subtrees on
/// arc (min,max), the right side those on (max,min); both sides are cliques in
/// the conflict graph so the complement is bipartite. When `exclude` is set,
/// non-colliding pairs for which it returns true are left out as well.
BipartiteGraph edge_complement_bipartite(const Instance& inst, Vertex u, Vertex v,
                                         std::span<const SubtreeId> subset,
                                         const PairExclusion& exclude = {});

}  // namespace lightcolor
