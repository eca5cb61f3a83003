#pragma once

// Load normalization, lower bounds and exact oracles used to certify the
// greedy colorer.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lightcolor/conflict.hpp"
#include "lightcolor/instance.hpp"

namespace lightcolor {

struct NormalizedInstance {
  Instance padded;
  /// The first `original_count` subtrees of `padded` are the originals.
  std::size_t original_count = 0;
  /// Every arc in padding order with the number of subtrees added (possibly 0).
  std::vector<std::pair<Arc, std::size_t>> padding_per_arc;
};

/// Pads every directed edge up to the load with single-arc subtrees rooted at
/// the arc tail. Edges are visited in input order, (min,max) before (max,min).
NormalizedInstance normalize(const Instance& inst);

/// Chromatic number of the conflict graph restricted to the subtrees on one
/// host edge: |on edge| minus a maximum matching of the complement.
std::size_t edge_lower_bound(const Instance& inst, Vertex u, Vertex v);

/// Maximum edge_lower_bound over all host edges.
std::size_t global_lower_bound(const Instance& inst);

inline constexpr std::size_t kDefaultOracleLimit = 30;
/// Hard ceiling for the oracles' bitset representation.
inline constexpr std::size_t kMaxOracleLimit = 64;

struct ExactColoring {
  std::size_t chromatic = 0;
  Coloring witness;
};

/// Exact chromatic number by DSATUR-ordered branch and bound. Throws
/// InvalidInput when g.n exceeds `limit` (or kMaxOracleLimit).
ExactColoring exact_chromatic(const ConflictGraph& g, std::size_t limit = kDefaultOracleLimit);

/// Exact clique number by branch and bound with a greedy coloring bound.
std::size_t max_clique(const ConflictGraph& g, std::size_t limit = kDefaultOracleLimit);

/// First fit over the whole conflict graph in input order.
Coloring first_fit_baseline(const Instance& inst);

struct BoundsReport {
  std::size_t load = 0;
  /// In tree edge order.
  std::vector<std::pair<Edge, std::size_t>> per_edge_bound;
  std::size_t global_lower_bound = 0;
  std::optional<std::size_t> clique_lower_bound;
  std::optional<std::size_t> exact_chromatic;
};

/// Oracle fields are filled only when the instance fits `limit`.
BoundsReport compute_bounds(const Instance& inst, std::size_t limit = kDefaultOracleLimit);

}  // namespace lightcolor
