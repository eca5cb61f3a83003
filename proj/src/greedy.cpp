#include "lightcolor/greedy.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace lightcolor {

namespace {

bool contains(std::span<const SubtreeId> sorted, SubtreeId id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

std::vector<SubtreeId> sorted_copy(std::span<const SubtreeId> ids) {
  std::vector<SubtreeId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubtreeId> colored_on_edge(const Instance& inst, Vertex a, Vertex b, const Coloring& coloring) {
  std::vector<SubtreeId> out;
  for (SubtreeId id : inst.on_edge(a, b)) {
    if (coloring.is_colored(id)) out.push_back(id);
  }
  return out;
}

// Drives the shared part of both matching schemes. `previous` are the already
// colored members of the population, `fresh` the uncolored ones; all of them
// lie on host edge {a,b}.
class MatchingScheme {
 public:
  MatchingScheme(const Instance& inst, const ConflictGraph& g, Coloring coloring)
      : inst_(inst), g_(g), coloring_(std::move(coloring)), colored_at_entry_(coloring_.size(), 0) {
    for (SubtreeId id = 0; id < coloring_.size(); ++id) colored_at_entry_[id] = coloring_.is_colored(id);
  }

  // Complement graph minus the pairs that may not share a color, then a
  // maximum matching in it. Newly matched pairs are recorded as partners.
  void match(Vertex a, Vertex b, std::span<const SubtreeId> previous, std::span<const SubtreeId> fresh) {
    std::vector<SubtreeId> members(previous.begin(), previous.end());
    members.insert(members.end(), fresh.begin(), fresh.end());
    std::sort(members.begin(), members.end());

    std::map<SubtreeId, std::set<Coloring::Color>> blocked;
    for (SubtreeId r : fresh) {
      auto& colors = blocked[r];
      for (SubtreeId w : g_.adjacency[r]) {
        if (colored_at_entry_[w]) colors.insert(coloring_[w]);
      }
    }

    auto exclude = [&](SubtreeId r, SubtreeId s) {
      const bool r_old = colored_at_entry_[r];
      const bool s_old = colored_at_entry_[s];
      if (r_old && s_old) return coloring_[r] != coloring_[s];
      if (!r_old && s_old) return blocked.at(r).contains(coloring_[s]);
      if (r_old && !s_old) return blocked.at(s).contains(coloring_[r]);
      return false;
    };

    result_.complement = edge_complement_bipartite(inst_, a, b, members, exclude);
    result_.matching = max_bipartite_matching(result_.complement);
    for (auto [l, r] : result_.matching.pairs) {
      SubtreeId x = result_.complement.left[l];
      SubtreeId y = result_.complement.right[r];
      partner_[x] = y;
      partner_[y] = x;
    }
  }

  // Each uncolored subtree matched to a colored one takes its color.
  void inherit(std::span<const SubtreeId> fresh) {
    for (SubtreeId r : fresh) {
      auto it = partner_.find(r);
      if (it != partner_.end() && colored_at_entry_[it->second]) coloring_.assign(r, coloring_[it->second]);
    }
  }

  // Uncolored subtrees of `group` in ascending order: a pair of two uncolored
  // matched subtrees shares the least color feasible for both, anything else
  // gets first fit.
  void color_remaining(std::span<const SubtreeId> group) {
    for (SubtreeId r : group) {
      if (coloring_.is_colored(r)) continue;
      auto it = partner_.find(r);
      if (it != partner_.end() && !coloring_.is_colored(it->second)) {
        SubtreeId s = it->second;
        Coloring::Color c = first_fit_pair_color(r, s, coloring_, g_);
        coloring_.assign(r, c);
        coloring_.assign(s, c);
      } else {
        coloring_.assign(r, first_fit_color(r, coloring_, g_));
      }
    }
  }

  SchemeResult finish() && {
    result_.coloring = std::move(coloring_);
    return std::move(result_);
  }

 private:
  const Instance& inst_;
  const ConflictGraph& g_;
  Coloring coloring_;
  std::vector<char> colored_at_entry_;
  std::map<SubtreeId, SubtreeId> partner_;
  SchemeResult result_;
};

void require_uncolored(std::span<const SubtreeId> newly, const Coloring& coloring) {
  for (SubtreeId id : newly) {
    if (coloring.is_colored(id)) throw std::logic_error("subtree " + std::to_string(id) + " is already colored");
  }
}

Coloring::Color least_free_color(std::initializer_list<SubtreeId> ids, const Coloring& partial,
                                 const ConflictGraph& g) {
  std::vector<Coloring::Color> taken;
  for (SubtreeId id : ids) {
    for (SubtreeId w : g.adjacency.at(id)) {
      if (partial.is_colored(w)) taken.push_back(partial[w]);
    }
  }
  std::sort(taken.begin(), taken.end());
  Coloring::Color c = 1;
  for (Coloring::Color t : taken) {
    if (t == c) {
      ++c;
    } else if (t > c) {
      break;
    }
  }
  return c;
}

}  // namespace

EdgeOrder bfs_edge_order(const Instance& inst, Vertex root) {
  const Vertex n = inst.tree().vertex_count;
  if (root < 0 || root >= n) throw InvalidInput("root " + std::to_string(root) + " out of range");

  EdgeOrder order;
  order.root = root;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> frontier;
  frontier.push(root);
  seen[static_cast<std::size_t>(root)] = 1;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : inst.neighbors(x)) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      order.edges.push_back({x, y});
      frontier.push(y);
    }
  }
  return order;
}

EdgeType classify_edge(const Instance& inst, const EdgeOrder& order, std::size_t round) {
  if (round < 1 || round > order.edges.size()) {
    throw std::out_of_range("round " + std::to_string(round) + " outside 1.." + std::to_string(order.edges.size()));
  }
  std::map<Edge, std::size_t> rank;
  for (std::size_t k = 0; k < order.edges.size(); ++k) rank[Edge::of(order.edges[k].u, order.edges[k].v)] = k + 1;
  auto processed = [&](Vertex a, Vertex b) { return rank.at(Edge::of(a, b)) < round; };

  const auto [u, v] = order.edges[round - 1];
  for (Vertex y : inst.neighbors(v)) {
    if (y != u && processed(v, y)) throw std::logic_error("edge order processed an edge beyond the far endpoint");
  }

  std::vector<Vertex> done;
  std::vector<Vertex> pending;
  for (Vertex y : inst.neighbors(u)) {
    if (y == v) continue;
    (processed(u, y) ? done : pending).push_back(y);
  }
  const std::size_t degree = inst.degree(u);

  if (done.empty()) {
    if (round != 1) throw std::logic_error("only the first round may have no processed neighbor edge");
    return {EdgeKind::kType1};
  }
  if (degree == 2 && done.size() == 1) return {EdgeKind::kType2};
  if (degree == 3 && done.size() == 2) return {EdgeKind::kType3};
  if (degree == 3 && done.size() == 1) return {EdgeKind::kType4, done.front(), pending.front()};
  throw std::logic_error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} fits no edge type");
}

Coloring::Color first_fit_color(SubtreeId id, const Coloring& partial, const ConflictGraph& g) {
  return least_free_color({id}, partial, g);
}

Coloring::Color first_fit_pair_color(SubtreeId a, SubtreeId b, const Coloring& partial, const ConflictGraph& g) {
  return least_free_color({a, b}, partial, g);
}

void process_edge_simple(const ConflictGraph& g, std::span<const SubtreeId> newly, Coloring& coloring) {
  for (SubtreeId id : sorted_copy(newly)) {
    if (!coloring.is_colored(id)) coloring.assign(id, first_fit_color(id, coloring, g));
  }
}

SchemeResult process_edge_1(const Instance& inst, const ConflictGraph& g, Vertex u, Vertex v,
                            std::span<const SubtreeId> newly, Coloring coloring) {
  require_uncolored(newly, coloring);
  const std::vector<SubtreeId> fresh = sorted_copy(newly);
  const std::vector<SubtreeId> previous = colored_on_edge(inst, u, v, coloring);

  MatchingScheme scheme(inst, g, std::move(coloring));
  scheme.match(u, v, previous, fresh);
  scheme.inherit(fresh);
  scheme.color_remaining(fresh);
  return std::move(scheme).finish();
}

SchemeResult process_edge_2(const Instance& inst, const ConflictGraph& g, Vertex u, Vertex v, Vertex x,
                            std::span<const SubtreeId> newly, Coloring coloring) {
  require_uncolored(newly, coloring);
  const std::vector<SubtreeId> fresh = sorted_copy(newly);
  const std::vector<SubtreeId> on_ux = inst.on_edge(u, x);
  const std::vector<SubtreeId> previous_uv = colored_on_edge(inst, u, v, coloring);

  std::vector<SubtreeId> previous;
  for (SubtreeId id : on_ux) {
    if (coloring.is_colored(id) && !contains(previous_uv, id)) previous.push_back(id);
  }
  std::vector<SubtreeId> fresh_on_ux;
  for (SubtreeId id : fresh) {
    if (contains(on_ux, id)) fresh_on_ux.push_back(id);
  }

  MatchingScheme scheme(inst, g, std::move(coloring));
  scheme.match(u, x, previous, fresh_on_ux);
  scheme.inherit(fresh_on_ux);
  scheme.color_remaining(fresh_on_ux);
  scheme.color_remaining(fresh);
  return std::move(scheme).finish();
}

GreedyResult greedy_color(const Instance& inst, Vertex root) {
  if (!inst.degree_ok()) throw InvalidInput("greedy coloring requires a host tree of maximum degree 3");
  const EdgeOrder order = bfs_edge_order(inst, root);
  const ConflictGraph g = build_conflict_graph(inst);

  GreedyResult result;
  result.coloring = Coloring(inst.size());
  std::vector<SubtreeId> colored;

  for (std::size_t round = 1; round <= order.edges.size(); ++round) {
    const OrderedEdge e = order.edges[round - 1];
    RoundState state;
    state.round = round;
    state.edge = e;
    state.type = classify_edge(inst, order, round);
    state.colors_used_before = result.coloring.colors_used();

    for (SubtreeId id : inst.on_edge(e.u, e.v)) {
      if (!result.coloring.is_colored(id)) state.newly_colored.push_back(id);
    }

    if (state.type.kind == EdgeKind::kType4) {
      SchemeResult first = process_edge_1(inst, g, e.u, e.v, state.newly_colored, result.coloring);
      SchemeResult second = process_edge_2(inst, g, e.u, e.v, state.type.x, state.newly_colored, result.coloring);
      state.scheme1_colors = first.coloring.colors_used();
      state.scheme2_colors = second.coloring.colors_used();
      if (*state.scheme1_colors <= *state.scheme2_colors) {
        state.scheme = Scheme::kMatchingOnEdge;
        result.coloring = std::move(first.coloring);
      } else {
        state.scheme = Scheme::kMatchingOnSibling;
        result.coloring = std::move(second.coloring);
      }
    } else {
      process_edge_simple(g, state.newly_colored, result.coloring);
    }

    std::vector<SubtreeId> merged;
    std::merge(colored.begin(), colored.end(), state.newly_colored.begin(), state.newly_colored.end(),
               std::back_inserter(merged));
    colored = std::move(merged);
    state.colored = colored;
    state.colors_used_after = result.coloring.colors_used();
    result.trace.push_back(std::move(state));
  }
  return result;
}

}  // namespace lightcolor
