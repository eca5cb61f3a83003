#pragma once

// Host trees, rooted subtrees (light trees) and instances.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lightcolor {

using Vertex = std::int32_t;
using SubtreeId = std::size_t;

/// Thrown for input that violates a documented precondition (bad files,
/// out-of-range ids, guard limits). The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  Arc reversed() const { return {head, tail}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Undirected edge stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  static Edge of(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  Arc forward() const { return {a, b}; }
  Arc backward() const { return {b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct HostTree {
  Vertex vertex_count = 0;
  /// File order is preserved; pairs are as written, not normalized.
  std::vector<std::pair<Vertex, Vertex>> edges;
  friend bool operator==(const HostTree&, const HostTree&) = default;
};

struct RootedSubtree {
  Vertex root = 0;
  std::vector<Arc> arcs;
  friend bool operator==(const RootedSubtree&, const RootedSubtree&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  /// Only meaningful for trees: every vertex has degree <= 3.
  bool degree_ok = true;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_tree(const HostTree& tree);
ValidationReport validate_subtree(const HostTree& tree, const RootedSubtree& subtree);

/// Two subtrees collide iff they share a directed edge.
bool collide(const RootedSubtree& a, const RootedSubtree& b);

/// An immutable, validated multiset of rooted subtrees on a host tree.
/// Subtree identity is list position.
class Instance {
 public:
  Instance() = default;
  /// Throws InvalidInput if the tree or any subtree is invalid.
  Instance(HostTree tree, std::vector<RootedSubtree> subtrees);

  const HostTree& tree() const { return tree_; }
  const std::vector<RootedSubtree>& subtrees() const { return subtrees_; }
  const RootedSubtree& subtree(SubtreeId id) const { return subtrees_.at(id); }
  std::size_t size() const { return subtrees_.size(); }

  bool degree_ok() const { return degree_ok_; }
  std::size_t degree(Vertex v) const { return neighbors_.at(static_cast<std::size_t>(v)).size(); }
  /// Ascending neighbor ids.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(static_cast<std::size_t>(v)); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Subtrees containing the arc, ascending. Throws if the edge is not in the tree.
  std::span<const SubtreeId> on_arc(Arc arc) const;
  /// Union of both directions, ascending.
  std::vector<SubtreeId> on_edge(Vertex u, Vertex v) const;

  /// Maximum number of subtrees on a single directed edge.
  std::size_t load() const;

  /// Sorted, duplicate-free arcs of a subtree.
  std::span<const Arc> sorted_arcs(SubtreeId id) const { return sorted_arcs_.at(id); }
  bool collide(SubtreeId i, SubtreeId j) const;

  const std::map<Arc, std::vector<SubtreeId>>& per_arc_index() const { return per_arc_; }

 private:
  HostTree tree_;
  std::vector<RootedSubtree> subtrees_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<Arc>> sorted_arcs_;
  // Both directions of every tree edge are present, possibly with no subtrees.
  std::map<Arc, std::vector<SubtreeId>> per_arc_;
  bool degree_ok_ = true;
};

/// Recomputes the arc index from scratch (used to check consistency).
std::map<Arc, std::vector<SubtreeId>> build_arc_index(const HostTree& tree,
                                                      std::span<const RootedSubtree> subtrees);

/// Map from subtree index to color; 0 means uncolored, colors start at 1.
class Coloring {
 public:
  using Color = std::int32_t;
  static constexpr Color kUncolored = 0;

  Coloring() = default;
  explicit Coloring(std::size_t n) : colors_(n, kUncolored) {}
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  std::size_t size() const { return colors_.size(); }
  Color operator[](SubtreeId id) const { return colors_[id]; }
  Color at(SubtreeId id) const { return colors_.at(id); }
  bool is_colored(SubtreeId id) const { return colors_.at(id) != kUncolored; }
  void assign(SubtreeId id, Color c);

  bool total() const;
  /// Number of distinct colors in use.
  std::size_t colors_used() const;
  Color max_color() const;
  /// True iff the used colors are exactly {1, ..., colors_used()}.
  bool contiguous() const;

  const std::vector<Color>& values() const { return colors_; }
  /// Restriction to the first n subtrees.
  Coloring prefix(std::size_t n) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

}  // namespace lightcolor
