#include <doctest.h>

#include "lightcolor/instance.hpp"
#include "oracles.hpp"

using namespace lightcolor;

namespace {

const HostTree kP3{3, {{0, 1}, {1, 2}}};

bool mentions(const ValidationReport& r, const std::string& text) {
  for (const auto& v : r.violations) {
    if (v.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate_tree") {
  ValidationReport single = validate_tree({1, {}});
  CHECK(single.ok());
  CHECK(single.degree_ok);

  CHECK(validate_tree(kP3).ok());

  ValidationReport cycle = validate_tree({3, {{0, 1}, {1, 2}, {0, 2}}});
  CHECK_FALSE(cycle.ok());
  CHECK(mentions(cycle, "cycle / edge count"));

  CHECK(mentions(validate_tree({3, {{0, 1}, {1, 1}}}), "self-loop"));
  CHECK(mentions(validate_tree({3, {{0, 1}, {1, 0}}}), "duplicate"));
  CHECK(mentions(validate_tree({3, {{0, 1}, {1, 3}}}), "out of range"));
  CHECK_FALSE(validate_tree({0, {}}).ok());
}

TEST_CASE("validate_tree reports degree separately") {
  HostTree star4{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
  ValidationReport r = validate_tree(star4);
  CHECK(r.ok());
  CHECK_FALSE(r.degree_ok);
  CHECK_NOTHROW(Instance(star4, {}));
  CHECK_FALSE(Instance(star4, {}).degree_ok());
}

TEST_CASE("validate_subtree") {
  CHECK(validate_subtree(kP3, {0, {{0, 1}, {1, 2}}}).ok());
  CHECK(mentions(validate_subtree(kP3, {0, {{1, 0}}}), "root has in-degree 1"));
  CHECK(mentions(validate_subtree(kP3, {0, {{0, 1}, {2, 1}}}), "vertex 1 has in-degree 2"));
  CHECK(mentions(validate_subtree(kP3, {0, {}}), "no arcs"));
  CHECK(mentions(validate_subtree(kP3, {0, {{0, 2}}}), "not a tree edge"));
  CHECK(mentions(validate_subtree(kP3, {0, {{0, 1}, {1, 0}}}), "used twice"));
  CHECK(mentions(validate_subtree(kP3, {2, {{0, 1}}}), "not on any arc"));
  CHECK(mentions(validate_subtree(kP3, {0, {{0, 1}, {0, 1}}}), "used twice"));
}

TEST_CASE("invalid subtrees are rejected at construction") {
  CHECK_THROWS_AS(Instance(kP3, {{0, {{1, 0}}}}), InvalidInput);
  CHECK_THROWS_AS(Instance({3, {{0, 1}}}, {}), InvalidInput);
}

TEST_CASE("collide") {
  RootedSubtree a{0, {{0, 1}}};
  RootedSubtree b{1, {{1, 0}}};
  RootedSubtree c{0, {{0, 1}, {1, 2}}};
  CHECK(collide(a, c));
  CHECK_FALSE(collide(a, b));
  CHECK(collide(a, a));
  CHECK(collide(c, a) == collide(a, c));
}

TEST_CASE("load and per-arc index on P3-demo") {
  const Instance inst = oracle::p3_demo();
  CHECK(inst.load() == 2);

  auto forward = inst.on_arc({0, 1});
  CHECK(std::vector<SubtreeId>(forward.begin(), forward.end()) == std::vector<SubtreeId>{0, 2});
  CHECK(inst.on_edge(0, 1) == std::vector<SubtreeId>{0, 1, 2});
  CHECK(inst.on_arc({2, 1}).empty());
  CHECK_THROWS_AS(inst.on_arc({0, 2}), InvalidInput);

  CHECK(Instance(kP3, {}).load() == 0);
  CHECK(Instance(kP3, {{2, {{2, 1}}}}).load() == 1);
}

TEST_CASE("instance properties on random instances") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = oracle::random_instance(seed, 10, 12, 3, seed % 3 == 0);
    std::size_t max_direction = 0;
    for (auto [u, v] : inst.tree().edges) {
      auto fwd = inst.on_arc({u, v});
      auto bwd = inst.on_arc({v, u});
      std::vector<SubtreeId> both(fwd.begin(), fwd.end());
      both.insert(both.end(), bwd.begin(), bwd.end());
      std::sort(both.begin(), both.end());
      // The two directions partition the edge population.
      CHECK(std::adjacent_find(both.begin(), both.end()) == both.end());
      CHECK(both == inst.on_edge(u, v));
      max_direction = std::max({max_direction, fwd.size(), bwd.size()});
    }
    CHECK(inst.load() == max_direction);
    CHECK(build_arc_index(inst.tree(), inst.subtrees()) == inst.per_arc_index());

    for (SubtreeId i = 0; i < inst.size(); ++i) {
      CHECK(collide(inst.subtree(i), inst.subtree(i)));
      for (SubtreeId j = 0; j < inst.size(); ++j) {
        CHECK(inst.collide(i, j) == collide(inst.subtree(j), inst.subtree(i)));
      }
    }
  }
}

TEST_CASE("coloring bookkeeping") {
  Coloring c(4);
  CHECK_FALSE(c.total());
  CHECK(c.colors_used() == 0);
  c.assign(0, 1);
  c.assign(1, 3);
  CHECK(c.colors_used() == 2);
  CHECK_FALSE(c.contiguous());
  c.assign(2, 2);
  c.assign(3, 2);
  CHECK(c.total());
  CHECK(c.contiguous());
  CHECK(c.prefix(2).values() == std::vector<Coloring::Color>{1, 3});
  CHECK_THROWS(c.assign(0, 0));
}
