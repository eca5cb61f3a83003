#include "lightcolor/generator.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "lightcolor/rng.hpp"

namespace lightcolor {

void validate_params(const GenParams& p) {
  if (p.num_vertices < 1) throw InvalidInput("num_vertices must be at least 1");
  if (p.max_degree < 2 && p.num_vertices > 2) throw InvalidInput("max_degree must be at least 2");
  if (p.max_degree < 1 && p.num_vertices > 1) throw InvalidInput("max_degree must be at least 1");
  if (p.min_arcs < 1) throw InvalidInput("min_arcs must be at least 1");
  if (p.min_arcs > p.max_arcs) throw InvalidInput("min_arcs exceeds max_arcs");
  if (p.num_vertices == 1 && p.num_subtrees > 0) {
    throw InvalidInput("a single-vertex tree cannot carry subtrees");
  }
}

Instance generate_instance(const GenParams& p) {
  validate_params(p);
  Rng rng(p.seed);
  const auto n = static_cast<std::size_t>(p.num_vertices);

  HostTree tree;
  tree.vertex_count = p.num_vertices;
  std::vector<std::vector<Vertex>> adjacency(n);
  std::vector<Vertex> open{0};  // ascending ids with spare degree
  for (Vertex v = 1; v < p.num_vertices; ++v) {
    const std::size_t pick = rng.below(open.size());
    const Vertex parent = open[pick];
    tree.edges.emplace_back(parent, v);
    adjacency[static_cast<std::size_t>(parent)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(parent);
    if (static_cast<Vertex>(adjacency[static_cast<std::size_t>(parent)].size()) >= p.max_degree) {
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    open.push_back(v);
  }
  for (auto& adj : adjacency) std::sort(adj.begin(), adj.end());

  std::vector<RootedSubtree> subtrees;
  subtrees.reserve(p.num_subtrees);
  for (std::size_t k = 0; k < p.num_subtrees; ++k) {
    RootedSubtree s;
    s.root = static_cast<Vertex>(rng.below(n));
    const auto target = static_cast<std::size_t>(
        rng.between(static_cast<std::int64_t>(p.min_arcs), static_cast<std::int64_t>(p.max_arcs)));

    std::vector<char> inside(n, 0);
    inside[static_cast<std::size_t>(s.root)] = 1;
    std::vector<Arc> boundary;
    for (Vertex y : adjacency[static_cast<std::size_t>(s.root)]) boundary.push_back({s.root, y});
    while (s.arcs.size() < target && !boundary.empty()) {
      const std::size_t pick = rng.below(boundary.size());
      const Arc arc = boundary[pick];
      boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(pick));
      s.arcs.push_back(arc);
      inside[static_cast<std::size_t>(arc.head)] = 1;
      for (Vertex y : adjacency[static_cast<std::size_t>(arc.head)]) {
        if (!inside[static_cast<std::size_t>(y)]) boundary.push_back({arc.head, y});
      }
    }
    subtrees.push_back(std::move(s));
  }
  return Instance(std::move(tree), std::move(subtrees));
}

}  // namespace lightcolor
