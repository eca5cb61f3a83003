#include "lightcolor/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "lightcolor/greedy.hpp"
#include "lightcolor/matching.hpp"

namespace lightcolor {

namespace {

using Mask = std::uint64_t;

void check_limit(const ConflictGraph& g, std::size_t limit, const char* what) {
  const std::size_t cap = std::min(limit, kMaxOracleLimit);
  if (g.n > cap) {
    throw InvalidInput(std::string(what) + " oracle limited to " + std::to_string(cap) + " subtrees, got " +
                       std::to_string(g.n));
  }
}

std::vector<Mask> adjacency_masks(const ConflictGraph& g) {
  std::vector<Mask> masks(g.n, 0);
  for (std::size_t v = 0; v < g.n; ++v) {
    for (SubtreeId w : g.adjacency[v]) masks[v] |= Mask{1} << w;
  }
  return masks;
}

std::size_t greedy_clique_size(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> by_degree(n);
  for (std::size_t v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t a, std::size_t b) { return std::popcount(adj[a]) > std::popcount(adj[b]); });
  std::size_t best = n > 0 ? 1 : 0;
  for (std::size_t seed : by_degree) {
    Mask candidates = adj[seed];
    std::size_t size = 1;
    for (std::size_t v : by_degree) {
      if (candidates & (Mask{1} << v)) {
        ++size;
        candidates &= adj[v];
      }
    }
    best = std::max(best, size);
  }
  return best;
}

class ColoringSearch {
 public:
  ColoringSearch(const ConflictGraph& g, Coloring initial, std::size_t lower_bound)
      : g_(g), color_(g.n, 0), neighbor_colors_(g.n, std::vector<int>(g.n + 2, 0)), saturation_(g.n, 0),
        best_(initial.colors_used()), best_coloring_(std::move(initial)), lower_bound_(lower_bound) {}

  ExactColoring run() {
    if (g_.n > 0 && best_ > lower_bound_) search(0, 0);
    return {best_, best_coloring_};
  }

 private:
  void search(std::size_t colored, std::size_t k) {
    if (best_ == lower_bound_ || k >= best_) return;
    if (colored == g_.n) {
      best_ = k;
      std::vector<Coloring::Color> values(color_.begin(), color_.end());
      best_coloring_ = Coloring(std::move(values));
      return;
    }
    const std::size_t v = pick();
    for (std::size_t c = 1; c <= k && k < best_; ++c) {
      if (neighbor_colors_[v][c] != 0) continue;
      set(v, static_cast<int>(c));
      search(colored + 1, k);
      unset(v);
    }
    if (k + 1 < best_) {
      set(v, static_cast<int>(k + 1));
      search(colored + 1, k + 1);
      unset(v);
    }
  }

  // Highest saturation, then highest degree, then lowest index.
  std::size_t pick() const {
    std::size_t best = g_.n;
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (color_[v] != 0) continue;
      if (best == g_.n || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.adjacency[v].size() > g_.adjacency[best].size())) {
        best = v;
      }
    }
    return best;
  }

  void set(std::size_t v, int c) {
    color_[v] = c;
    for (SubtreeId w : g_.adjacency[v]) {
      if (neighbor_colors_[w][static_cast<std::size_t>(c)]++ == 0) ++saturation_[w];
    }
  }

  void unset(std::size_t v) {
    const auto c = static_cast<std::size_t>(color_[v]);
    color_[v] = 0;
    for (SubtreeId w : g_.adjacency[v]) {
      if (--neighbor_colors_[w][c] == 0) --saturation_[w];
    }
  }

  const ConflictGraph& g_;
  std::vector<int> color_;
  std::vector<std::vector<int>> neighbor_colors_;
  std::vector<int> saturation_;
  std::size_t best_;
  Coloring best_coloring_;
  std::size_t lower_bound_;
};

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  std::size_t run() {
    if (adj_.empty()) return 0;
    best_ = greedy_clique_size(adj_);
    Mask all = adj_.size() == 64 ? ~Mask{0} : (Mask{1} << adj_.size()) - 1;
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::size_t size, Mask candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    color_sort(candidates, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (size + bound[k] <= best_) return;
      const std::size_t v = order[k];
      const Mask next = candidates & adj_[v];
      if (next == 0) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(size + 1, next);
      }
      candidates &= ~(Mask{1} << v);
    }
  }

  // Greedy color classes over `candidates`; bound[k] is the number of classes
  // needed for order[0..k].
  void color_sort(Mask candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    std::size_t color = 0;
    while (candidates != 0) {
      ++color;
      Mask available = candidates;
      while (available != 0) {
        const auto v = static_cast<std::size_t>(std::countr_zero(available));
        available &= ~(Mask{1} << v) & ~adj_[v];
        candidates &= ~(Mask{1} << v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  std::vector<Mask> adj_;
  std::size_t best_ = 0;
};

}  // namespace

NormalizedInstance normalize(const Instance& inst) {
  const std::size_t load = inst.load();
  std::vector<RootedSubtree> subtrees = inst.subtrees();
  NormalizedInstance out;
  out.original_count = subtrees.size();
  for (auto [u, v] : inst.tree().edges) {
    const Edge e = Edge::of(u, v);
    for (Arc arc : {e.forward(), e.backward()}) {
      const std::size_t deficit = load - inst.on_arc(arc).size();
      for (std::size_t k = 0; k < deficit; ++k) subtrees.push_back({arc.tail, {arc}});
      out.padding_per_arc.emplace_back(arc, deficit);
    }
  }
  out.padded = Instance(inst.tree(), std::move(subtrees));
  return out;
}

std::size_t edge_lower_bound(const Instance& inst, Vertex u, Vertex v) {
  const std::vector<SubtreeId> on_edge = inst.on_edge(u, v);
  const BipartiteGraph complement = edge_complement_bipartite(inst, u, v, on_edge);
  return on_edge.size() - max_bipartite_matching(complement).size();
}

std::size_t global_lower_bound(const Instance& inst) {
  std::size_t best = 0;
  for (auto [u, v] : inst.tree().edges) best = std::max(best, edge_lower_bound(inst, u, v));
  return best;
}

ExactColoring exact_chromatic(const ConflictGraph& g, std::size_t limit) {
  check_limit(g, limit, "exact coloring");
  Coloring upper(g.n);
  for (SubtreeId id = 0; id < g.n; ++id) upper.assign(id, first_fit_color(id, upper, g));
  const std::size_t lower = greedy_clique_size(adjacency_masks(g));
  return ColoringSearch(g, std::move(upper), lower).run();
}

std::size_t max_clique(const ConflictGraph& g, std::size_t limit) {
  check_limit(g, limit, "clique");
  return CliqueSearch(adjacency_masks(g)).run();
}

Coloring first_fit_baseline(const Instance& inst) {
  const ConflictGraph g = build_conflict_graph(inst);
  Coloring coloring(inst.size());
  for (SubtreeId id = 0; id < inst.size(); ++id) coloring.assign(id, first_fit_color(id, coloring, g));
  return coloring;
}

BoundsReport compute_bounds(const Instance& inst, std::size_t limit) {
  BoundsReport report;
  report.load = inst.load();
  for (auto [u, v] : inst.tree().edges) {
    const std::size_t bound = edge_lower_bound(inst, u, v);
    report.per_edge_bound.emplace_back(Edge::of(u, v), bound);
    report.global_lower_bound = std::max(report.global_lower_bound, bound);
  }
  if (inst.size() <= std::min(limit, kMaxOracleLimit)) {
    const ConflictGraph g = build_conflict_graph(inst);
    report.clique_lower_bound = max_clique(g, limit);
    report.exact_chromatic = exact_chromatic(g, limit).chromatic;
  }
  return report;
}

}  // namespace lightcolor
