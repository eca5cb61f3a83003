#include <doctest.h>

#include "lightcolor/bounds.hpp"
#include "lightcolor/greedy.hpp"
#include "lightcolor/verify.hpp"
#include "oracles.hpp"

using namespace lightcolor;

namespace {

std::vector<int> kinds(const Instance& inst, const EdgeOrder& order) {
  std::vector<int> out;
  for (std::size_t r = 1; r <= order.edges.size(); ++r) out.push_back(static_cast<int>(classify_edge(inst, order, r).kind));
  return out;
}

ConflictGraph graph_of(std::size_t n, std::vector<std::pair<SubtreeId, SubtreeId>> edges) {
  ConflictGraph g;
  g.n = n;
  g.adjacency.resize(n);
  for (auto [a, b] : edges) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

const HostTree kStar{4, {{0, 1}, {0, 2}, {0, 3}}};

}  // namespace

TEST_CASE("bfs_edge_order") {
  const Instance p3 = oracle::p3_demo();
  EdgeOrder from0 = bfs_edge_order(p3, 0);
  CHECK(from0.edges == std::vector<OrderedEdge>{{0, 1}, {1, 2}});

  EdgeOrder from1 = bfs_edge_order(p3, 1);
  CHECK(from1.edges == std::vector<OrderedEdge>{{1, 0}, {1, 2}});

  EdgeOrder star = bfs_edge_order(oracle::star_demo(), 0);
  CHECK(star.edges == std::vector<OrderedEdge>{{0, 1}, {0, 2}, {0, 3}});

  CHECK_THROWS_AS(bfs_edge_order(p3, 3), InvalidInput);
  CHECK_THROWS_AS(bfs_edge_order(p3, -1), InvalidInput);
}

TEST_CASE("classify_edge") {
  const Instance star = oracle::star_demo();
  const EdgeOrder order = bfs_edge_order(star, 0);
  CHECK(kinds(star, order) == std::vector<int>{1, 4, 3});
  const EdgeType t4 = classify_edge(star, order, 2);
  CHECK(t4.w == 1);
  CHECK(t4.x == 3);

  const Instance p3 = oracle::p3_demo();
  CHECK(kinds(p3, bfs_edge_order(p3, 0)) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(classify_edge(p3, bfs_edge_order(p3, 0), 0), std::out_of_range);
  CHECK_THROWS_AS(classify_edge(p3, bfs_edge_order(p3, 0), 3), std::out_of_range);

  // A hand-made order that skips ahead cannot be classified.
  EdgeOrder broken{0, {{1, 2}, {0, 1}}};
  CHECK_THROWS_AS(classify_edge(p3, broken, 2), std::logic_error);
}

TEST_CASE("classification on random trees has one type-1 round, first") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = oracle::random_instance(seed, 14, 0);
    const Vertex root = static_cast<Vertex>(seed % static_cast<std::uint64_t>(inst.tree().vertex_count));
    const EdgeOrder order = bfs_edge_order(inst, root);
    REQUIRE(order.edges.size() == inst.tree().edges.size());
    const std::vector<int> k = kinds(inst, order);
    CHECK(k.front() == 1);
    CHECK(std::count(k.begin(), k.end(), 1) == 1);
    for (std::size_t r = 1; r <= order.edges.size(); ++r) {
      const EdgeType t = classify_edge(inst, order, r);
      if (t.kind == EdgeKind::kType4) CHECK(inst.degree(order.edges[r - 1].u) == 3);
    }
  }
}

TEST_CASE("first_fit_color") {
  const ConflictGraph g = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
  Coloring c(4);
  CHECK(first_fit_color(0, c, g) == 1);
  c.assign(1, 1);
  c.assign(2, 2);
  CHECK(first_fit_color(0, c, g) == 3);
  c.assign(2, 3);
  CHECK(first_fit_color(0, c, g) == 2);
  CHECK(c[0] == Coloring::kUncolored);
}

TEST_CASE("process_edge_simple") {
  const Instance p3 = oracle::p3_demo();
  const ConflictGraph g = build_conflict_graph(p3);
  Coloring c(3);
  process_edge_simple(g, {}, c);
  CHECK(c.colors_used() == 0);

  const std::vector<SubtreeId> all{2, 0, 1};
  process_edge_simple(g, all, c);
  CHECK(c.values() == std::vector<Coloring::Color>{1, 1, 2});

  const ConflictGraph pair = graph_of(2, {{0, 1}});
  Coloring d(2);
  const std::vector<SubtreeId> both{0, 1};
  process_edge_simple(pair, both, d);
  CHECK(d.values() == std::vector<Coloring::Color>{1, 2});
}

TEST_CASE("process_edge_1") {
  // S on (0,2) colored 1, R on (2,0) uncolored and collision free.
  const Instance inst(kStar, {{0, {{0, 2}}}, {2, {{2, 0}}}});
  const ConflictGraph g = build_conflict_graph(inst);
  Coloring before(2);
  before.assign(0, 1);

  const SchemeResult none = process_edge_1(inst, g, 0, 2, {}, before);
  CHECK(none.coloring == before);

  const std::vector<SubtreeId> fresh{1};
  const SchemeResult got = process_edge_1(inst, g, 0, 2, fresh, before);
  CHECK(got.matching.size() == 1);
  CHECK(got.coloring[1] == 1);
  CHECK(oracle::replay_scheme(inst, 0, 2, {0}, fresh, fresh, fresh, before, got).empty());

  CHECK_THROWS_AS(process_edge_1(inst, g, 0, 2, std::vector<SubtreeId>{0}, before), std::logic_error);
}

TEST_CASE("process_edge_1 refuses a color blocked elsewhere") {
  // R on (2,0) also uses (0,1), where U already holds color 1; S on (0,2) has color 1.
  const Instance inst(kStar, {{0, {{0, 2}}}, {0, {{0, 1}}}, {2, {{2, 0}, {0, 1}}}});
  const ConflictGraph g = build_conflict_graph(inst);
  Coloring before(3);
  before.assign(0, 1);
  before.assign(1, 1);
  const std::vector<SubtreeId> fresh{2};
  const SchemeResult got = process_edge_1(inst, g, 0, 2, fresh, before);
  CHECK(got.matching.size() == 0);
  CHECK(got.coloring[2] == 2);
  CHECK(oracle::replay_scheme(inst, 0, 2, {0}, fresh, fresh, fresh, before, got).empty());
}

TEST_CASE("process_edge_2") {
  const Instance inst(kStar, {{1, {{1, 0}, {0, 3}}},
                              {3, {{3, 0}, {0, 1}}},
                              {0, {{0, 1}}},
                              {1, {{1, 0}}}});
  const ConflictGraph g = build_conflict_graph(inst);
  Coloring empty(4);

  // Newcomers on {0,1} that avoid {0,2}: pure first fit.
  const std::vector<SubtreeId> off_sibling{2, 3};
  const SchemeResult ff = process_edge_2(inst, g, 0, 1, 2, off_sibling, empty);
  CHECK(ff.matching.size() == 0);
  CHECK(ff.coloring.values() == std::vector<Coloring::Color>{0, 0, 1, 1});

  // Both newcomers continue onto {0,3} in opposite directions: they pair up.
  const std::vector<SubtreeId> on_sibling{0, 1};
  const SchemeResult paired = process_edge_2(inst, g, 0, 1, 3, on_sibling, empty);
  CHECK(paired.matching.size() == 1);
  CHECK(paired.coloring[0] == 1);
  CHECK(paired.coloring[1] == 1);
  CHECK(oracle::replay_scheme(inst, 0, 3, {}, on_sibling, on_sibling, on_sibling, empty, paired).empty());
}

TEST_CASE("both schemes replay exactly on random type-4 rounds") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Instance raw = oracle::random_instance(seed * 31 + 7, 10, 12, 3, seed % 5 == 0);
    const Instance inst = seed % 2 == 0 ? normalize(raw).padded : raw;
    const GreedyResult result = greedy_color(inst);
    const ConflictGraph g = build_conflict_graph(inst);
    for (const RoundState& round : result.trace) {
      if (round.type.kind != EdgeKind::kType4) continue;
      const Coloring before = oracle::coloring_before_round(result, round.round);
      const auto [u, v] = round.edge;
      const Vertex x = round.type.x;
      const std::vector<SubtreeId>& fresh = round.newly_colored;

      std::vector<SubtreeId> prev_uv;
      for (SubtreeId id : inst.on_edge(u, v)) {
        if (before.is_colored(id)) prev_uv.push_back(id);
      }
      const SchemeResult one = process_edge_1(inst, g, u, v, fresh, before);
      CHECK(oracle::replay_scheme(inst, u, v, prev_uv, fresh, fresh, fresh, before, one) == "");

      std::vector<SubtreeId> prev_ux;
      std::vector<SubtreeId> fresh_ux;
      for (SubtreeId id : inst.on_edge(u, x)) {
        const bool on_uv = std::binary_search(prev_uv.begin(), prev_uv.end(), id);
        if (before.is_colored(id) && !on_uv) prev_ux.push_back(id);
        if (std::binary_search(fresh.begin(), fresh.end(), id)) fresh_ux.push_back(id);
      }
      const SchemeResult two = process_edge_2(inst, g, u, v, x, fresh, before);
      CHECK(oracle::replay_scheme(inst, u, x, prev_ux, fresh_ux, fresh_ux, fresh, before, two) == "");

      for (const SchemeResult* s : {&one, &two}) {
        CHECK(s->coloring.contiguous());
        for (SubtreeId id : fresh) CHECK(s->coloring.is_colored(id));
        for (SubtreeId id = 0; id < inst.size(); ++id) {
          if (before.is_colored(id)) CHECK(s->coloring[id] == before[id]);
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("greedy_color basics") {
  const Instance p3 = oracle::p3_demo();
  const GreedyResult r = greedy_color(p3);
  CHECK(r.coloring.values() == std::vector<Coloring::Color>{1, 1, 2});
  CHECK(r.coloring.colors_used() == 2);
  CHECK(r.trace.size() == 2);

  CHECK(greedy_color(Instance(p3.tree(), {})).coloring.colors_used() == 0);
  CHECK(greedy_color(Instance({1, {}}, {})).trace.empty());

  HostTree star4{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
  CHECK_THROWS_AS(greedy_color(Instance(star4, {})), InvalidInput);
  CHECK_THROWS_AS(greedy_color(p3, 7), InvalidInput);
}

TEST_CASE("greedy invariants on random instances") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Instance raw = oracle::random_instance(seed * 13 + 1, 12, 14, 3, seed % 4 == 0);
    const bool normalized = seed % 2 == 1;
    const Instance inst = normalized ? normalize(raw).padded : raw;
    const Vertex root = static_cast<Vertex>(seed % static_cast<std::uint64_t>(inst.tree().vertex_count));
    const GreedyResult r = greedy_color(inst, root);

    CHECK(r.coloring.total());
    CHECK(verify_coloring(inst, r.coloring).ok());
    CHECK(oracle::pairwise_valid(inst, r.coloring));
    CHECK(r.coloring.colors_used() >= inst.load());
    CHECK(r.trace.size() == inst.tree().edges.size());

    std::vector<SubtreeId> colored;
    std::size_t type1 = 0;
    for (const RoundState& round : r.trace) {
      type1 += round.type.kind == EdgeKind::kType1 ? 1 : 0;
      std::vector<SubtreeId> expect_new;
      for (SubtreeId id : inst.on_edge(round.edge.u, round.edge.v)) {
        if (!std::binary_search(colored.begin(), colored.end(), id)) expect_new.push_back(id);
      }
      CHECK(round.newly_colored == expect_new);
      colored.insert(colored.end(), expect_new.begin(), expect_new.end());
      std::sort(colored.begin(), colored.end());
      CHECK(round.colored == colored);

      const Coloring after = oracle::coloring_before_round(r, round.round + 1);
      CHECK(after.contiguous());
      CHECK(after.colors_used() == round.colors_used_after);

      if (round.type.kind == EdgeKind::kType4) {
        CHECK(round.colors_used_after == std::min(*round.scheme1_colors, *round.scheme2_colors));
        CHECK((round.scheme == Scheme::kMatchingOnEdge) == (*round.scheme1_colors <= *round.scheme2_colors));
      } else if (normalized) {
        CHECK(round.colors_used_after <= std::max(2 * inst.load(), round.colors_used_before));
      }
    }
    if (!r.trace.empty()) CHECK(type1 == 1);

    const GreedyResult again = greedy_color(inst, root);
    CHECK(again.coloring == r.coloring);
  }
}
