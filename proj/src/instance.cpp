#include "lightcolor/instance.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lightcolor {

namespace {

std::string describe(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::set<Edge> edge_set(const HostTree& tree) {
  std::set<Edge> edges;
  for (auto [u, v] : tree.edges) edges.insert(Edge::of(u, v));
  return edges;
}

}  // namespace

ValidationReport validate_tree(const HostTree& tree) {
  ValidationReport report;
  const Vertex n = tree.vertex_count;
  if (n < 1) {
    report.violations.push_back("tree must have at least one vertex");
    return report;
  }
  if (tree.edges.size() != static_cast<std::size_t>(n - 1)) {
    report.violations.push_back("cycle / edge count: " + std::to_string(tree.edges.size()) +
                                " edges for " + std::to_string(n) + " vertices");
  }

  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
  std::set<Edge> seen;
  for (auto [u, v] : tree.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      report.violations.push_back("endpoint out of range in edge " + describe(u, v));
      continue;
    }
    if (u == v) {
      report.violations.push_back("self-loop at vertex " + std::to_string(u));
      continue;
    }
    if (!seen.insert(Edge::of(u, v)).second) {
      report.violations.push_back("duplicate edge " + describe(u, v));
      continue;
    }
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }

  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  reached[0] = 1;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : adjacency[static_cast<std::size_t>(x)]) {
      if (!reached[static_cast<std::size_t>(y)]) {
        reached[static_cast<std::size_t>(y)] = 1;
        frontier.push(y);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!reached[static_cast<std::size_t>(v)]) {
      report.violations.push_back("vertex " + std::to_string(v) + " unreachable from vertex 0");
      break;
    }
  }

  for (const auto& adj : adjacency) {
    if (adj.size() > 3) report.degree_ok = false;
  }
  return report;
}

ValidationReport validate_subtree(const HostTree& tree, const RootedSubtree& subtree) {
  ValidationReport report;
  const Vertex n = tree.vertex_count;
  if (subtree.root < 0 || subtree.root >= n) {
    report.violations.push_back("root " + std::to_string(subtree.root) + " out of range");
    return report;
  }
  if (subtree.arcs.empty()) {
    report.violations.push_back("subtree has no arcs");
    return report;
  }

  const std::set<Edge> tree_edges = edge_set(tree);
  std::set<Edge> skeleton;
  std::map<Vertex, int> in_degree;
  std::map<Vertex, std::vector<Vertex>> out;
  for (const Arc& arc : subtree.arcs) {
    if (arc.tail < 0 || arc.head < 0 || arc.tail >= n || arc.head >= n) {
      report.violations.push_back("arc " + describe(arc.tail, arc.head) + " out of range");
      return report;
    }
    if (arc.tail == arc.head) {
      report.violations.push_back("arc " + describe(arc.tail, arc.head) + " is a self-loop");
      return report;
    }
    if (!tree_edges.contains(Edge::of(arc.tail, arc.head))) {
      report.violations.push_back("arc " + describe(arc.tail, arc.head) + " is not a tree edge");
      continue;
    }
    if (!skeleton.insert(Edge::of(arc.tail, arc.head)).second) {
      report.violations.push_back("skeleton edge " + describe(arc.tail, arc.head) + " used twice");
      continue;
    }
    in_degree[arc.tail] += 0;
    in_degree[arc.head] += 1;
    out[arc.tail].push_back(arc.head);
  }
  if (!report.ok()) return report;

  if (!in_degree.contains(subtree.root)) {
    report.violations.push_back("root " + std::to_string(subtree.root) + " is not on any arc");
    return report;
  }
  for (auto [v, d] : in_degree) {
    if (v == subtree.root && d != 0) {
      report.violations.push_back("root has in-degree " + std::to_string(d));
    } else if (v != subtree.root && d != 1) {
      report.violations.push_back("vertex " + std::to_string(v) + " has in-degree " + std::to_string(d));
    }
  }
  if (!report.ok()) return report;

  // In-degrees are right; what remains is that everything hangs off the root.
  std::set<Vertex> reached{subtree.root};
  std::vector<Vertex> stack{subtree.root};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : out[x]) {
      if (reached.insert(y).second) stack.push_back(y);
    }
  }
  if (reached.size() != in_degree.size()) {
    report.violations.push_back("skeleton is not connected to the root");
  }
  return report;
}

bool collide(const RootedSubtree& a, const RootedSubtree& b) {
  std::vector<Arc> x = a.arcs;
  std::vector<Arc> y = b.arcs;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::map<Arc, std::vector<SubtreeId>> build_arc_index(const HostTree& tree,
                                                      std::span<const RootedSubtree> subtrees) {
  std::map<Arc, std::vector<SubtreeId>> index;
  for (auto [u, v] : tree.edges) {
    index[Arc{u, v}];
    index[Arc{v, u}];
  }
  for (SubtreeId id = 0; id < subtrees.size(); ++id) {
    for (const Arc& arc : subtrees[id].arcs) index[arc].push_back(id);
  }
  return index;
}

Instance::Instance(HostTree tree, std::vector<RootedSubtree> subtrees)
    : tree_(std::move(tree)), subtrees_(std::move(subtrees)) {
  ValidationReport tree_report = validate_tree(tree_);
  if (!tree_report.ok()) throw InvalidInput("invalid tree: " + tree_report.violations.front());
  degree_ok_ = tree_report.degree_ok;

  for (SubtreeId id = 0; id < subtrees_.size(); ++id) {
    ValidationReport r = validate_subtree(tree_, subtrees_[id]);
    if (!r.ok()) {
      throw InvalidInput("invalid subtree " + std::to_string(id) + ": " + r.violations.front());
    }
  }

  neighbors_.resize(static_cast<std::size_t>(tree_.vertex_count));
  for (auto [u, v] : tree_.edges) {
    neighbors_[static_cast<std::size_t>(u)].push_back(v);
    neighbors_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());

  sorted_arcs_.reserve(subtrees_.size());
  for (const RootedSubtree& s : subtrees_) {
    std::vector<Arc> arcs = s.arcs;
    std::sort(arcs.begin(), arcs.end());
    sorted_arcs_.push_back(std::move(arcs));
  }
  per_arc_ = build_arc_index(tree_, subtrees_);
}

bool Instance::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= tree_.vertex_count) return false;
  const auto& adj = neighbors_[static_cast<std::size_t>(u)];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::span<const SubtreeId> Instance::on_arc(Arc arc) const {
  auto it = per_arc_.find(arc);
  if (it == per_arc_.end()) {
    throw InvalidInput("arc " + describe(arc.tail, arc.head) + " is not on a tree edge");
  }
  return it->second;
}

std::vector<SubtreeId> Instance::on_edge(Vertex u, Vertex v) const {
  std::span<const SubtreeId> forward = on_arc({u, v});
  std::span<const SubtreeId> backward = on_arc({v, u});
  std::vector<SubtreeId> both;
  both.reserve(forward.size() + backward.size());
  std::merge(forward.begin(), forward.end(), backward.begin(), backward.end(), std::back_inserter(both));
  return both;
}

std::size_t Instance::load() const {
  std::size_t best = 0;
  for (const auto& [arc, ids] : per_arc_) best = std::max(best, ids.size());
  return best;
}

bool Instance::collide(SubtreeId i, SubtreeId j) const {
  const auto& x = sorted_arcs_.at(i);
  const auto& y = sorted_arcs_.at(j);
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() && b != y.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

void Coloring::assign(SubtreeId id, Color c) {
  if (c < 1) throw std::logic_error("colors are positive integers");
  colors_.at(id) = c;
}

bool Coloring::total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

std::size_t Coloring::colors_used() const {
  std::vector<Color> used;
  for (Color c : colors_) {
    if (c != kUncolored) used.push_back(c);
  }
  std::sort(used.begin(), used.end());
  return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

Coloring::Color Coloring::max_color() const {
  Color best = 0;
  for (Color c : colors_) best = std::max(best, c);
  return best;
}

bool Coloring::contiguous() const {
  return colors_used() == static_cast<std::size_t>(max_color());
}

Coloring Coloring::prefix(std::size_t n) const {
  if (n > colors_.size()) throw std::out_of_range("prefix longer than coloring");
  return Coloring(std::vector<Color>(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace lightcolor
