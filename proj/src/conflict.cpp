#include "lightcolor/conflict.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lightcolor {

bool ConflictGraph::adjacent(SubtreeId i, SubtreeId j) const {
  const auto& adj = adjacency.at(i);
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::size_t ConflictGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& adj : adjacency) twice += adj.size();
  return twice / 2;
}

ConflictGraph build_conflict_graph(const Instance& inst) {
  ConflictGraph g;
  g.n = inst.size();
  g.adjacency.resize(g.n);
  for (const auto& [arc, ids] : inst.per_arc_index()) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        g.adjacency[ids[a]].push_back(ids[b]);
        g.adjacency[ids[b]].push_back(ids[a]);
      }
    }
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

BipartiteGraph edge_complement_bipartite(const Instance& inst, Vertex u, Vertex v,
                                         std::span<const SubtreeId> subset,
                                         const PairExclusion& exclude) {
  const Edge e = Edge::of(u, v);
  std::span<const SubtreeId> forward = inst.on_arc(e.forward());
  std::span<const SubtreeId> backward = inst.on_arc(e.backward());

  BipartiteGraph g;
  std::set<SubtreeId> distinct;
  for (SubtreeId id : subset) {
    if (!distinct.insert(id).second) {
      throw InvalidInput("subtree " + std::to_string(id) + " listed twice");
    }
    if (std::binary_search(forward.begin(), forward.end(), id)) {
      g.left.push_back(id);
    } else if (std::binary_search(backward.begin(), backward.end(), id)) {
      g.right.push_back(id);
    } else {
      throw InvalidInput("subtree " + std::to_string(id) + " is not on edge {" + std::to_string(e.a) +
                         "," + std::to_string(e.b) + "}");
    }
  }
  std::sort(g.left.begin(), g.left.end());
  std::sort(g.right.begin(), g.right.end());

  for (std::size_t l = 0; l < g.left.size(); ++l) {
    for (std::size_t r = 0; r < g.right.size(); ++r) {
      if (inst.collide(g.left[l], g.right[r])) continue;
      if (exclude && exclude(g.left[l], g.right[r])) continue;
      g.edges.emplace_back(l, r);
    }
  }
  return g;
}

}  // namespace lightcolor
