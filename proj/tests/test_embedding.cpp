#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sliceprov/embedding.hpp"
#include "sliceprov/milp/brute_force.hpp"
#include "sliceprov/milp/check.hpp"

using namespace sliceprov;

namespace {

SfcInstance chain_sfc(double c, double bw) {
  SfcInstance s;
  s.nodes = {{"va", c, 0}, {"vb", c, 0}};
  s.links = {{"va", "vb", bw}};
  return s;
}

// Hub-and-spoke wired infrastructure with one idle RRH so the provisioning
// radio step is well-formed.
InfrastructureGraph spoke_infra() {
  InfrastructureGraph g;
  g.add_node({.id = "hub", .compute_capacity = 10, .fixed_cost = 5, .compute_cost = 1});
  g.add_node({.id = "n1", .compute_capacity = 10, .fixed_cost = 5, .compute_cost = 1});
  g.add_node({.id = "far", .compute_capacity = 10, .fixed_cost = 5, .compute_cost = 9});
  g.add_node({.id = "r0",
              .kind = NodeKind::rrh,
              .rb_capacity = 100,
              .position = Point{0, 0},
              .fixed_cost = 25,
              .rb_cost = 0.05});
  for (const auto& other : {"n1", "far", "r0"}) {
    g.add_link({.src = "hub", .dst = other, .bandwidth = 10, .unit_cost = 1});
    g.add_link({.src = other, .dst = "hub", .bandwidth = 10, .unit_cost = 1});
  }
  return g;
}

// Chain slice whose aggregate demand is `count` instances of a (1 CPU, 0.5
// Gbps) chain; the radio node carries no radio demand.
SliceSpec chain_slice(int count) {
  SliceSpec s;
  s.id = "chain";
  SrdNode va;
  va.id = "va";
  va.compute_demand = count;
  va.min_compute = 1;
  SrdNode vb = va;
  vb.id = "vb";
  vb.is_radio_node = true;
  s.srd.nodes = {va, vb};
  s.srd.links = {{"va", "vb", 0.5 * count}};
  return s;
}

}  // namespace

TEST_CASE("exact-fit pair has a unique embedding") {
  InfrastructureGraph g;
  g.add_node({.id = "a", .compute_capacity = 1, .compute_cost = 1});
  g.add_node({.id = "b", .compute_capacity = 1, .compute_cost = 1});
  g.add_link({.src = "a", .dst = "b", .bandwidth = 1, .unit_cost = 1});
  auto sol = embed_joint(g, {chain_sfc(1, 1)}, EmbedUsage::zero(g));
  REQUIRE(sol.status == milp::SolveStatus::optimal);
  CHECK(sol.placement[0] == std::vector<int>{0, 1});
  // 2 CPUs + 1 Gbps across the link; no fixed costs configured.
  CHECK(sol.cost == doctest::Approx(3.0));
}

TEST_CASE("joint embedding fills exact capacity and rejects one more") {
  InfrastructureGraph g;
  g.add_node({.id = "only", .compute_capacity = 4, .compute_cost = 1});
  SfcInstance single;
  single.nodes = {{"v", 1, 0}};
  const int n = 4;
  auto ok = embed_joint(g, std::vector<SfcInstance>(n, single), EmbedUsage::zero(g));
  CHECK(ok.status == milp::SolveStatus::optimal);
  auto overfull = embed_joint(g, std::vector<SfcInstance>(n + 1, single), EmbedUsage::zero(g));
  CHECK(overfull.status == milp::SolveStatus::infeasible);
}

TEST_CASE("embedding model matches brute-force enumeration") {
  InfrastructureGraph g;
  g.add_node({.id = "a", .compute_capacity = 2, .fixed_cost = 3, .compute_cost = 1});
  g.add_node({.id = "b", .compute_capacity = 2, .fixed_cost = 1, .compute_cost = 2});
  g.add_link({.src = "a", .dst = "b", .bandwidth = 3, .unit_cost = 1});
  g.add_link({.src = "b", .dst = "a", .bandwidth = 3, .unit_cost = 2});
  std::vector<SfcInstance> sfcs{chain_sfc(1, 1), chain_sfc(1, 0.5)};
  auto m = build_embedding_ilp(g, sfcs, EmbedMode::joint, EmbedUsage::zero(g));
  auto sol = milp::solve(m);
  auto oracle = milp::brute_force_solve(m);
  REQUIRE(sol.status == milp::SolveStatus::optimal);
  REQUIRE(oracle.status == milp::SolveStatus::optimal);
  CHECK(sol.objective_value == doctest::Approx(oracle.objective_value).epsilon(1e-7));
  CHECK(milp::check_feasibility(m, sol.assignment, 1e-6).empty());
}

TEST_CASE("sequential embedding never beats joint embedding") {
  auto g = spoke_infra();
  std::vector<SfcInstance> sfcs(3, chain_sfc(2, 1));
  auto joint = embed_joint(g, sfcs, EmbedUsage::zero(g));
  auto seq = embed_sequential(g, sfcs, EmbedUsage::zero(g));
  REQUIRE(joint.status == milp::SolveStatus::optimal);
  REQUIRE(seq.status == milp::SolveStatus::optimal);
  CHECK(joint.cost <= seq.cost + 1e-6);
}

TEST_CASE("sequential step rejects multi-SFC input and empty lists") {
  auto g = spoke_infra();
  CHECK_THROWS_AS(
      build_embedding_ilp(g, std::vector<SfcInstance>(2, chain_sfc(1, 1)),
                          EmbedMode::sequential_step, EmbedUsage::zero(g)),
      std::invalid_argument);
  CHECK_THROWS_AS(build_embedding_ilp(g, {}, EmbedMode::joint, EmbedUsage::zero(g)),
                  std::invalid_argument);
}

TEST_CASE("per-instance chain derivation from a slice") {
  auto slice = chain_slice(4);
  auto sfc = sfc_from_slice(slice);
  CHECK(sfc.nodes.size() == 2);
  CHECK(sfc.nodes[0].compute == doctest::Approx(1.0));
  CHECK(sfc.links[0].bandwidth == doctest::Approx(0.5));  // 2.0 aggregate * 1/4

  auto scaled = slice_for_sfc_count(slice, 6);
  CHECK(scaled.srd.nodes[0].compute_demand == doctest::Approx(6.0));
  CHECK(scaled.srd.links[0].bandwidth_demand == doctest::Approx(3.0));
  CHECK(scaled.srd.nodes[1].rate_down_demand == 0.0);
  CHECK_THROWS_AS(slice_for_sfc_count(slice, 0), std::invalid_argument);
}

TEST_CASE("graph reduction keeps reserved resources and supports re-embedding") {
  auto infra = spoke_infra();
  const int count = 3;
  std::vector<SliceSpec> slices{chain_slice(count)};
  std::vector<SliceRateTable> rates(1);
  rates[0].n_rrh = 1;
  auto prov = carp(infra, slices, rates, Variant::jr_jn);

  auto reduced = reduce_graph(infra, slices, prov, 0);
  // Cheap optimum: both VNFs on the hub, no external links.
  CHECK(reduced.nodes().size() <= 2);
  CHECK(reduced.nodes().size() >= 1);
  for (const auto& n : reduced.nodes()) CHECK(n.id != "far");

  auto sfcs = std::vector<SfcInstance>(count, sfc_from_slice(slices[0]));
  auto emb = embed_joint(reduced, sfcs, EmbedUsage::zero(reduced));
  CHECK(emb.status == milp::SolveStatus::optimal);

  ProvisioningSolution empty;
  CHECK(reduce_graph(infra, slices, empty, 0).nodes().empty());
}

TEST_CASE("comparison sweep: four methods per count, deterministic costs") {
  auto infra = spoke_infra();
  auto slice = chain_slice(1);  // per-instance template
  std::vector<int> counts{1, 2};
  auto rows = run_comparison(infra, slice, counts);
  REQUIRE(rows.size() == 8);
  for (const auto& r : rows) {
    CHECK(r.status == "optimal");
    CHECK(r.time_s >= 0.0);
  }
  // Cost parity between direct and provision-then-embed on this toy instance.
  for (size_t k = 0; k < counts.size(); ++k) {
    const auto& dir_joint = rows[4 * k];
    const auto& prov_joint = rows[4 * k + 2];
    CHECK(prov_joint.method == "prov-joint-emb");
    CHECK(std::abs(prov_joint.cost - dir_joint.cost) <= 0.15 * dir_joint.cost + 1e-9);
  }
  auto again = run_comparison(infra, slice, counts);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(again[i].method == rows[i].method);
    CHECK(again[i].cost == doctest::Approx(rows[i].cost).epsilon(1e-12));
  }
  CHECK_THROWS_AS(run_comparison(infra, slice, {0}), std::invalid_argument);
}
