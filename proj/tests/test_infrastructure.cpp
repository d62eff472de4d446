#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sliceprov/infrastructure.hpp"

using namespace sliceprov;

namespace {

std::vector<Point> grid_positions(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({100.0 * i, 50.0 * (i % 4)});
  return pts;
}

FatTreeSpec default_spec(int k) {
  FatTreeSpec s;
  s.k = k;
  s.core = {64, 1024, 40, 40};
  s.agg = {32, 512, 20, 20};
  s.edge = {16, 256, 10, 10};
  s.rrh = {100.0, 4, 64, 10};
  return s;
}

}  // namespace

TEST_CASE("fat tree shape k=4") {
  auto sh = fat_tree_shape(4);
  CHECK(sh.core_nodes == 4);
  CHECK(sh.agg_nodes == 8);
  CHECK(sh.edge_nodes == 8);
  CHECK(sh.rrh_nodes == 16);
  CHECK(sh.total_nodes == 36);
  // 8 core-agg per pod * 4 pods + 4 agg-edge per pod * 4 pods + 16 edge-rrh,
  // each bidirectional, plus one loopback per node.
  CHECK(sh.directed_links == 2 * (16 + 16 + 16) + 36);
}

TEST_CASE("build_fat_tree k=4 structure and costs") {
  auto spec = default_spec(4);
  auto g = build_fat_tree(spec, grid_positions(16));
  g.validate();
  auto sh = fat_tree_shape(4);
  CHECK(static_cast<int>(g.nodes().size()) == sh.total_nodes);
  CHECK(static_cast<int>(g.links().size()) == sh.directed_links);
  CHECK(g.rrh_indices().size() == 16);
  CHECK(g.cloud_indices().size() == 20);

  int loopbacks = 0;
  for (const auto& l : g.links())
    if (l.is_loopback()) ++loopbacks;
  CHECK(loopbacks == 36);

  for (const auto& n : g.nodes()) {
    if (n.kind == NodeKind::cloud) {
      CHECK(n.fixed_cost == doctest::Approx(20.0));
      CHECK(n.compute_cost == doctest::Approx(1.0));
      CHECK(n.storage_cost == doctest::Approx(1.0));
    } else {
      CHECK(n.fixed_cost == doctest::Approx(25.0));
      CHECK(n.rb_cost == doctest::Approx(0.05));
      CHECK(n.rb_capacity == doctest::Approx(100.0));
      CHECK(n.position.has_value());
    }
  }
}

TEST_CASE("fat tree k=2 leaf reachability from every core") {
  auto g = build_fat_tree(default_spec(2), grid_positions(2));
  g.validate();
  CHECK(g.rrh_indices().size() == 2);
  // BFS over directed links from each core node must reach every rrh.
  for (int c : g.cloud_indices()) {
    if (g.nodes()[c].id.rfind("core", 0) != 0) continue;
    std::vector<bool> seen(g.nodes().size(), false);
    std::vector<int> stack{c};
    seen[c] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& l : g.links()) {
        if (l.src != g.nodes()[u].id || l.is_loopback()) continue;
        int v = g.node_index(l.dst);
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    for (int r : g.rrh_indices()) CHECK(seen[r]);
  }
}

TEST_CASE("build_fat_tree rejects bad input") {
  CHECK_THROWS_AS(build_fat_tree(default_spec(3), grid_positions(6)), std::invalid_argument);
  CHECK_THROWS_AS(build_fat_tree(default_spec(4), grid_positions(15)), std::invalid_argument);
}

TEST_CASE("graph validation catches duplicates and dangling links") {
  InfrastructureGraph g;
  g.add_node({.id = "a", .kind = NodeKind::cloud, .compute_capacity = 1});
  CHECK_THROWS_AS(g.add_node({.id = "a"}), std::invalid_argument);
  CHECK_THROWS_AS(g.add_link({.src = "a", .dst = "missing", .bandwidth = 1}),
                  std::invalid_argument);
  g.add_link({.src = "a", .dst = "a", .bandwidth = 1});
  CHECK(g.link_index("a", "a") == 0);
  CHECK(g.link_index("a", "b") == -1);
}

TEST_CASE("rrh requires a position") {
  InfrastructureGraph g;
  g.add_node({.id = "r", .kind = NodeKind::rrh, .rb_capacity = 100});
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}
