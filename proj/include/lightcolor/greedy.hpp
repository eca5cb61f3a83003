#pragma once

// Greedy wavelength assignment for rooted subtrees on a host tree of maximum
// degree 3. Host edges are processed in BFS discovery order; each round colors
// the still-uncolored subtrees on the current edge. Rounds at a degree-3
// vertex with one processed and one unprocessed sibling edge (type 4) try two
// matching-based schemes and keep the one that uses fewer colors.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lightcolor/conflict.hpp"
#include "lightcolor/instance.hpp"
#include "lightcolor/matching.hpp"

namespace lightcolor {

/// A host edge in processing order; `u` was discovered first.
struct OrderedEdge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const OrderedEdge&, const OrderedEdge&) = default;
};

struct EdgeOrder {
  Vertex root = 0;
  std::vector<OrderedEdge> edges;
};

/// BFS from `root`, neighbors in ascending id; an edge is emitted when its far
/// endpoint is discovered. Throws InvalidInput if root is out of range.
EdgeOrder bfs_edge_order(const Instance& inst, Vertex root);

enum class EdgeKind { kType1 = 1, kType2 = 2, kType3 = 3, kType4 = 4 };

struct EdgeType {
  EdgeKind kind = EdgeKind::kType1;
  /// Type 4 only: far endpoints of the processed and unprocessed sibling edges.
  Vertex w = -1;
  Vertex x = -1;
};

/// Classifies edge `round` (1-based) of `order` by which edges at its u-end
/// were processed in earlier rounds. Throws std::logic_error if the order
/// admits none of the four cases.
EdgeType classify_edge(const Instance& inst, const EdgeOrder& order, std::size_t round);

/// Smallest positive color not used by a colored neighbor of `id`.
Coloring::Color first_fit_color(SubtreeId id, const Coloring& partial, const ConflictGraph& g);

/// Smallest positive color feasible for both `a` and `b` at once.
Coloring::Color first_fit_pair_color(SubtreeId a, SubtreeId b, const Coloring& partial, const ConflictGraph& g);

/// Colors each of `newly` (ascending) by first fit.
void process_edge_simple(const ConflictGraph& g, std::span<const SubtreeId> newly, Coloring& coloring);

/// What one matching-based scheme did in a type-4 round.
struct SchemeResult {
  Coloring coloring;
  /// Complement graph the matching was taken in.
  BipartiteGraph complement;
  Matching matching;
};

/// Scheme 1: reuse colors already present on {u,v}. `coloring` must be colored
/// exactly on the previously processed subtrees; `newly` are the uncolored
/// subtrees on {u,v}.
SchemeResult process_edge_1(const Instance& inst, const ConflictGraph& g, Vertex u, Vertex v,
                            std::span<const SubtreeId> newly, Coloring coloring);

/// Scheme 2: reuse colors from the unprocessed sibling edge {u,x} that are not
/// on {u,v}, coloring the newcomers that continue onto {u,x} first.
SchemeResult process_edge_2(const Instance& inst, const ConflictGraph& g, Vertex u, Vertex v, Vertex x,
                            std::span<const SubtreeId> newly, Coloring coloring);

enum class Scheme { kFirstFit, kMatchingOnEdge, kMatchingOnSibling };

struct RoundState {
  std::size_t round = 0;  // 1-based
  OrderedEdge edge;
  EdgeType type;
  /// Subtrees colored in rounds 1..round, ascending.
  std::vector<SubtreeId> colored;
  /// Subtrees colored in this round, ascending.
  std::vector<SubtreeId> newly_colored;
  std::size_t colors_used_before = 0;
  std::size_t colors_used_after = 0;
  Scheme scheme = Scheme::kFirstFit;
  /// Type 4 only: total colors each scheme would leave in use.
  std::optional<std::size_t> scheme1_colors;
  std::optional<std::size_t> scheme2_colors;
};

struct GreedyResult {
  Coloring coloring;
  std::vector<RoundState> trace;
};

/// Runs the greedy colorer from `root`. Throws InvalidInput if the tree has a
/// vertex of degree above 3 or `root` is out of range.
GreedyResult greedy_color(const Instance& inst, Vertex root = 0);

}  // namespace lightcolor
