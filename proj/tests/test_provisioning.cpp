#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sliceprov/milp/brute_force.hpp"
#include "sliceprov/milp/check.hpp"
#include "sliceprov/provisioning.hpp"

using namespace sliceprov;

namespace {

// --- wired-only fixtures: a fork and a merge SRD over tiny infrastructures ---

SrdNode plain_node(const std::string& id, double r_c, double floor_c) {
  SrdNode n;
  n.id = id;
  n.compute_demand = r_c;
  n.min_compute = floor_c;
  return n;
}

// One cheap capacity-limited host for the fork root, one expensive host for
// the overflow, one sink host reachable from both. The cheap host's only
// outgoing link caps how much of the root it can serve.
InfrastructureGraph fork_infra() {
  InfrastructureGraph g;
  g.add_node({.id = "cheap", .compute_capacity = 10, .fixed_cost = 1, .compute_cost = 1});
  g.add_node({.id = "aux", .compute_capacity = 1000, .fixed_cost = 1, .compute_cost = 5});
  g.add_node({.id = "sink", .compute_capacity = 30, .fixed_cost = 1, .compute_cost = 1});
  g.add_link({.src = "cheap", .dst = "sink", .bandwidth = 5, .unit_cost = 1});
  g.add_link({.src = "aux", .dst = "sink", .bandwidth = 100, .unit_cost = 1});
  return g;
}

SliceSpec fork_slice() {
  SliceSpec s;
  s.id = "fork";
  auto v1 = plain_node("v1", 50, 10.0 / 26);
  v1.is_radio_node = true;  // no radio demand; satisfies the one-radio-node rule
  s.srd.nodes = {v1, plain_node("v2", 12, 1.8), plain_node("v3", 8, 0.8)};
  s.srd.links = {{"v1", "v2", 30}, {"v1", "v3", 20}};
  return s;
}

InfrastructureGraph merge_infra() {
  InfrastructureGraph g;
  g.add_node({.id = "i1", .compute_capacity = 6, .compute_cost = 1});
  g.add_node({.id = "i2", .compute_capacity = 20, .compute_cost = 1});
  g.add_link({.src = "i1", .dst = "i2", .bandwidth = 15, .unit_cost = 1});
  return g;
}

SliceSpec merge_slice() {
  SliceSpec s;
  s.id = "merge";
  auto v1 = plain_node("v1", 5, 0);
  v1.is_radio_node = true;
  s.srd.nodes = {v1, plain_node("v2", 6, 0), plain_node("v3", 20, 0)};
  s.srd.links = {{"v1", "v3", 15}, {"v2", "v3", 10}};
  return s;
}

// --- radio fixtures ---

// Single RRH plus a cloud node; flat synthetic rate table so radio shares come
// out as exact decimals.
InfrastructureGraph one_rrh_infra() {
  InfrastructureGraph g;
  g.add_node({.id = "r0",
              .kind = NodeKind::rrh,
              .compute_capacity = 4,
              .rb_capacity = 100,
              .position = Point{0, 0},
              .fixed_cost = 25,
              .compute_cost = 1,
              .rb_cost = 0.05});
  g.add_node({.id = "c0",
              .compute_capacity = 10,
              .storage_capacity = 10,
              .fixed_cost = 5,
              .compute_cost = 1,
              .storage_cost = 1});
  g.add_link({.src = "c0", .dst = "r0", .bandwidth = 10, .unit_cost = 1});
  g.add_link({.src = "r0", .dst = "c0", .bandwidth = 10, .unit_cost = 1});
  return g;
}

// Downlink-only slice: 10 users in one cell, per-user rate `rate_down`, radio
// node hostable on the RRH.
SliceSpec flat_radio_slice(const std::string& id, double rate_down) {
  SliceSpec s;
  s.id = id;
  s.coverage.area = {Rect{0, 0, 100, 100}};
  s.coverage.density = Density::uniform(s.coverage.area[0], 10.0);
  s.coverage.rate_down = rate_down;
  s.coverage.subareas = {{s.coverage.area[0], s.coverage.area[0].center()}};
  SrdNode vr;
  vr.id = "vr";
  vr.compute_demand = 1;
  vr.min_compute = 0.5;
  vr.is_radio_node = true;
  vr.rate_down_demand = 10.0 * rate_down;
  s.srd.nodes = {vr};
  return s;
}

SliceRateTable flat_table(int n_rrh, double b) {
  SliceRateTable t;
  t.n_rrh = n_rrh;
  t.n_cells = 1;
  t.up.assign(n_rrh, b);
  t.down.assign(n_rrh, b);
  return t;
}

// --- end-to-end fixture: cloud + two RRHs with a gateway->radio SRD chain ---

InfrastructureGraph micro_infra() {
  InfrastructureGraph g;
  g.add_node({.id = "c0",
              .compute_capacity = 10,
              .storage_capacity = 10,
              .fixed_cost = 5,
              .compute_cost = 1,
              .storage_cost = 1});
  for (int r = 0; r < 2; ++r) {
    g.add_node({.id = "r" + std::to_string(r),
                .kind = NodeKind::rrh,
                .compute_capacity = 8,
                .storage_capacity = 8,
                .rb_capacity = 100,
                .position = Point{45.0 + 90.0 * r, 51.5},
                .fixed_cost = 25,
                .compute_cost = 2,
                .storage_cost = 2,
                .rb_cost = 0.05});
    g.add_link({.src = "c0", .dst = g.nodes().back().id, .bandwidth = 10, .unit_cost = 1});
    g.add_link({.src = g.nodes().back().id, .dst = "c0", .bandwidth = 10, .unit_cost = 1});
  }
  for (const auto& n : std::vector<std::string>{"c0", "r0", "r1"})
    g.add_link({.src = n, .dst = n, .bandwidth = 5, .unit_cost = 0.1});
  return g;
}

SliceSpec micro_slice(const std::string& id, double rate_down) {
  SliceSpec s;
  s.id = id;
  s.coverage.area = {Rect{0, 0, 180, 103}};
  s.coverage.density = Density::uniform(s.coverage.area[0], 20.0);
  s.coverage.rate_down = rate_down;
  s.coverage.rate_up = rate_down / 4;
  partition_coverage(s.coverage, 90, 103);
  auto demand = aggregate_radio_demand(s.coverage);

  SrdNode gw;
  gw.id = "gw";
  gw.compute_demand = 2;
  gw.storage_demand = 1;
  gw.min_compute = 0.5;
  gw.min_storage = 0.25;
  SrdNode bbu;
  bbu.id = "bbu";
  bbu.compute_demand = 2;
  bbu.storage_demand = 2;
  bbu.min_compute = 0.5;
  bbu.min_storage = 0.5;
  bbu.is_radio_node = true;
  bbu.rate_up_demand = demand.up;
  bbu.rate_down_demand = demand.down;
  s.srd.nodes = {gw, bbu};
  s.srd.links = {{"gw", "bbu", 1.0}, {"bbu", "gw", 0.5}};
  return s;
}

struct MicroScenario {
  InfrastructureGraph infra = micro_infra();
  std::vector<SliceSpec> slices;
  std::vector<SliceRateTable> rates;
};

MicroScenario micro_scenario(int n_slices, double base_rate = 1e6) {
  MicroScenario sc;
  for (int i = 0; i < n_slices; ++i)
    sc.slices.push_back(micro_slice("s" + std::to_string(i), base_rate / (1 + i)));
  sc.rates = precompute_rate_tables(sc.infra, sc.slices, RadioParams{});
  return sc;
}

int non_counter_variables(const milp::Model& m) {
  int n = 0;
  for (const auto& v : m.variables())
    if (v.name.rfind("kc_", 0) != 0 && v.name.rfind("ks_", 0) != 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("fork topology: link capacity caps the cheap host at 25/26") {
  auto infra = fork_infra();
  std::vector<SliceSpec> slices{fork_slice()};
  std::vector<SliceRateTable> rates{SliceRateTable{}};
  auto m = build_np(infra, slices, {0}, RadioShares{}, rates, WiredPrior{});
  auto sol = milp::solve(m);
  REQUIRE(sol.status == milp::SolveStatus::optimal);
  CHECK(milp::check_feasibility(m, sol.assignment, 1e-6).empty());

  // Flow conservation ties phi_b(cheap->sink, v1v2) = 18/25 phi_c(cheap, v1)
  // and phi_b(cheap->sink, v1v3) = 8/25 phi_c(cheap, v1); the unit link-share
  // budget then caps phi_c(cheap, v1) at 25/26.
  CHECK(sol.value(m, "phc_0_0_0") == doctest::Approx(25.0 / 26).epsilon(1e-6));
  CHECK(sol.value(m, "phb_0_0_0") == doctest::Approx(18.0 / 26).epsilon(1e-6));
  CHECK(sol.value(m, "phb_0_0_1") == doctest::Approx(8.0 / 26).epsilon(1e-6));

  // Independently derived remainder of the optimum.
  CHECK(sol.value(m, "phc_0_1_0") == doctest::Approx(3.0 / 26).epsilon(1e-6));
  CHECK(sol.value(m, "phc_0_2_1") == doctest::Approx(0.6).epsilon(1e-6));
  CHECK(sol.value(m, "phc_0_2_2") == doctest::Approx(8.0 / 30).epsilon(1e-6));
  CHECK(sol.value(m, "kc_0_0_0") == doctest::Approx(25));
  CHECK(sol.value(m, "kc_0_1_0") == doctest::Approx(300));
  CHECK(sol.objective_value == doctest::Approx(15250.0 / 26 + 94).epsilon(1e-6));

  auto wired = extract_wired(infra, slices, {0}, m, sol);
  ProvisioningSolution ps;
  ps.variant = Variant::sr_sn;
  ps.radio.resize(1);
  ps.wired = wired;
  ps.wired_cost = wired_cost(infra, slices, wired);
  ps.total_cost = ps.wired_cost;
  CHECK(verify_solution(infra, slices, rates, ps, 0.0).empty());
}

TEST_CASE("merge topology: reference shares satisfy flow conservation exactly") {
  auto infra = merge_infra();
  std::vector<SliceSpec> slices{merge_slice()};
  std::vector<SliceRateTable> rates{SliceRateTable{}};
  auto m = build_np(infra, slices, {0}, RadioShares{}, rates, WiredPrior{});

  std::vector<double> x(m.variables().size(), 0.0);
  auto set = [&](const std::string& name, double v) {
    int idx = m.variable_index(name);
    REQUIRE(idx >= 0);
    x[idx] = v;
  };
  set("phc_0_0_0", 0.5);       // i1 hosts half of v1
  set("phc_0_0_1", 0.4);       // i1 hosts 2/5 of v2
  set("phc_0_1_2", 1.0);       // i2 hosts v3 entirely
  set("phb_0_0_0", 9.0 / 15);  // i1i2 carries v1v3
  set("phb_0_0_1", 4.0 / 15);  // i1i2 carries v2v3
  set("pht_0_0", 1.0);
  set("pht_0_1", 1.0);

  int checked = 0;
  for (const auto& c : m.constraints()) {
    if (c.name.rfind("flow", 0) == 0) {
      CHECK(m.constraint_activity(c, x) == doctest::Approx(c.rhs).epsilon(1e-12));
      ++checked;
    } else if (c.name.rfind("loop", 0) == 0) {
      CHECK(m.constraint_activity(c, x) >= c.rhs - 1e-12);
      ++checked;
    }
  }
  CHECK(checked == 8);  // 2 infra nodes x 2 SRD links, two families

  // Perturbing one link share breaks conservation.
  x[m.variable_index("phb_0_0_0")] += 0.1;
  bool violated = false;
  for (const auto& c : m.constraints())
    if (c.name.rfind("flow", 0) == 0 &&
        std::abs(m.constraint_activity(c, x) - c.rhs) > 1e-9)
      violated = true;
  CHECK(violated);
}

TEST_CASE("radio step: exact fill, objective, and oracle agreement") {
  auto infra = one_rrh_infra();
  std::vector<SliceSpec> slices{flat_radio_slice("s1", 7e6)};
  std::vector<SliceRateTable> rates{flat_table(1, 1e6)};

  auto m = build_rp(infra, slices, {0}, rates, 0.0, {});
  auto sol = milp::solve(m);
  REQUIRE(sol.status == milp::SolveStatus::optimal);
  // 100 RB * 1e6 bps * eta >= 10 users * 7e6 bps  =>  eta = 0.7
  CHECK(sol.value(m, "eta_0_0_0") == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(sol.value(m, "etat_0_0") == doctest::Approx(1.0));
  CHECK(sol.objective_value == doctest::Approx(25 + 0.7 * 100 * 0.05).epsilon(1e-9));

  auto oracle = milp::brute_force_solve(m);
  REQUIRE(oracle.status == milp::SolveStatus::optimal);
  CHECK(oracle.objective_value == doctest::Approx(sol.objective_value).epsilon(1e-9));
}

TEST_CASE("radio step: rate discount reduces the objective but not the shares") {
  auto infra = one_rrh_infra();
  std::vector<SliceSpec> slices{flat_radio_slice("s1", 7e6)};
  std::vector<SliceRateTable> rates{flat_table(1, 1e6)};

  const double lambda = 2e-8;  // lambda * b = 0.02 < rb cost 0.05
  auto m = build_rp(infra, slices, {0}, rates, lambda, {});
  auto sol = milp::solve(m);
  REQUIRE(sol.status == milp::SolveStatus::optimal);
  CHECK(sol.value(m, "eta_0_0_0") == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(sol.objective_value == doctest::Approx(25 + 0.7 * 100 * (0.05 - 0.02)).epsilon(1e-9));

  // A discount exceeding the unit radio cost would make over-provisioning
  // profitable without bound; the builder refuses it.
  CHECK_THROWS_AS(build_rp(infra, slices, {0}, rates, 1e-6, {}), std::invalid_argument);
}

TEST_CASE("radio step honors committed shares from earlier slices") {
  auto infra = one_rrh_infra();
  std::vector<SliceSpec> slices{flat_radio_slice("s1", 7e6), flat_radio_slice("s2", 3e6)};
  std::vector<SliceRateTable> rates{flat_table(1, 1e6), flat_table(1, 1e6)};

  auto m2 = build_rp(infra, slices, {1}, rates, 0.0, {0.7});
  auto sol2 = milp::solve(m2);
  REQUIRE(sol2.status == milp::SolveStatus::optimal);
  CHECK(sol2.value(m2, "eta_1_0_0") == doctest::Approx(0.3).epsilon(1e-9));

  auto m3 = build_rp(infra, slices, {1}, rates, 0.0, {0.75});
  CHECK(milp::solve(m3).status == milp::SolveStatus::infeasible);
  CHECK_THROWS_AS(build_rp(infra, slices, {1}, rates, 0.0, {1.5}), std::invalid_argument);
}

TEST_CASE("sequential provisioning surfaces the failing slice") {
  auto infra = one_rrh_infra();
  std::vector<SliceSpec> slices{flat_radio_slice("s1", 7e6), flat_radio_slice("s2", 4e6)};
  std::vector<SliceRateTable> rates{flat_table(1, 1e6), flat_table(1, 1e6)};
  try {
    carp(infra, slices, rates, Variant::sr_sn);
    FAIL("expected InfeasibleStep");
  } catch (const InfeasibleStep& e) {
    CHECK(e.step == "radio");
    CHECK(e.slice_id == "s2");
    CHECK(e.status == milp::SolveStatus::infeasible);
  }
}

TEST_CASE("all variants produce verified solutions; joint dominates sequential") {
  auto sc = micro_scenario(2);
  ProvisionOptions opts;
  std::vector<Variant> variants{Variant::jrn, Variant::sr_sn, Variant::sr_jn, Variant::jr_sn,
                                Variant::jr_jn};
  std::vector<ProvisioningSolution> sols;
  for (auto v : variants) {
    auto sol = carp(sc.infra, sc.slices, sc.rates, v, opts);
    CHECK(sol.total_cost == doctest::Approx(sol.radio_cost + sol.wired_cost));
    auto violations = verify_solution(sc.infra, sc.slices, sc.rates, sol, opts.lambda);
    for (const auto& viol : violations)
      MESSAGE(to_string(v), ": ", viol.family, " ", viol.detail, " ", viol.amount);
    CHECK(violations.empty());
    sols.push_back(std::move(sol));
  }

  CHECK(sols[0].problems.size() == 1);  // jrn
  CHECK(sols[1].problems.size() == 4);  // sr-sn
  CHECK(sols[2].problems.size() == 3);  // sr-jn
  CHECK(sols[3].problems.size() == 3);  // jr-sn
  CHECK(sols[4].problems.size() == 2);  // jr-jn
  CHECK(sols[1].problems[0].name == "rp[0]");
  CHECK(sols[2].problems[2].name == "np");
  CHECK(sols[3].problems[0].name == "rp");

  for (size_t i = 1; i < sols.size(); ++i)
    CHECK(sols[0].total_cost <= sols[i].total_cost + 1e-6);
  // Joint radio step is at least as cheap as the sequential one.
  CHECK(sols[4].radio_cost <= sols[1].radio_cost + 1e-6);
}

TEST_CASE("joint model matches brute-force enumeration on a tiny instance") {
  InfrastructureGraph infra;
  infra.add_node({.id = "r0",
                  .kind = NodeKind::rrh,
                  .compute_capacity = 2,
                  .rb_capacity = 100,
                  .position = Point{0, 0},
                  .fixed_cost = 25,
                  .compute_cost = 1,
                  .rb_cost = 0.05});
  infra.add_node(
      {.id = "c0", .compute_capacity = 2, .fixed_cost = 5, .compute_cost = 1});
  std::vector<SliceSpec> slices{flat_radio_slice("s1", 5e6)};
  std::vector<SliceRateTable> rates{flat_table(1, 1e6)};

  auto m = build_jrn(infra, slices, rates, 0.0);
  auto sol = milp::solve(m);
  auto oracle = milp::brute_force_solve(m);
  REQUIRE(sol.status == milp::SolveStatus::optimal);
  REQUIRE(oracle.status == milp::SolveStatus::optimal);
  CHECK(sol.objective_value == doctest::Approx(oracle.objective_value).epsilon(1e-7));
  CHECK(milp::check_feasibility(m, sol.assignment, 1e-6).empty());
}

TEST_CASE("problem size formulas match the built models") {
  auto sc = micro_scenario(2);
  auto dims = scenario_dims(sc.infra, sc.slices);
  CHECK(dims.n_rrh == 2);
  CHECK(dims.n_infra_nodes == 3);
  CHECK(dims.n_infra_links == 7);
  CHECK(dims.cells_per_slice == std::vector<int>{2, 2});
  CHECK(dims.srd_nodes_per_slice == std::vector<int>{2, 2});
  CHECK(dims.srd_links_per_slice == std::vector<int>{2, 2});

  auto jrn_counts = count_problem_size(Variant::jrn, dims);
  REQUIRE(jrn_counts.size() == 1);
  auto m = build_jrn(sc.infra, sc.slices, sc.rates, 0.0);
  CHECK(non_counter_variables(m) == jrn_counts[0].variables);

  auto rp = build_rp(sc.infra, sc.slices, {0, 1}, sc.rates, 0.0, {});
  auto counts = count_problem_size(Variant::jr_jn, dims);
  REQUIRE(counts.size() == 2);
  CHECK(counts[0].name == "rp");
  CHECK(non_counter_variables(rp) == counts[0].variables);

  auto sol = carp(sc.infra, sc.slices, sc.rates, Variant::jr_jn);
  auto np = build_np(sc.infra, sc.slices, {0, 1}, sol.radio, sc.rates, WiredPrior{});
  CHECK(counts[1].name == "np");
  CHECK(non_counter_variables(np) == counts[1].variables);

  auto per_slice = count_problem_size(Variant::sr_sn, dims);
  REQUIRE(per_slice.size() == 4);
  long long total = 0;
  for (const auto& p : per_slice) total += p.variables;
  CHECK(total == jrn_counts[0].variables);
}

TEST_CASE("verifier flags tampered radio shares") {
  auto sc = micro_scenario(1);
  auto sol = carp(sc.infra, sc.slices, sc.rates, Variant::jr_jn);
  REQUIRE(verify_solution(sc.infra, sc.slices, sc.rates, sol, 0.0).empty());
  for (auto& v : sol.radio[0].eta_down) v *= 0.5;
  CHECK(!verify_solution(sc.infra, sc.slices, sc.rates, sol, 0.0).empty());
}

TEST_CASE("demand scaling: feasible at 1, halved demand when capacity is half") {
  auto infra = one_rrh_infra();
  {
    std::vector<SliceSpec> slices{flat_radio_slice("ok", 5e6)};
    std::vector<SliceRateTable> rates{flat_table(1, 1e6)};
    auto r = delta_scaling(infra, slices, rates, Variant::sr_sn);
    CHECK(r.delta == doctest::Approx(1.0));
  }
  {
    // eta would need to reach 2.0; halving demand is exactly feasible.
    std::vector<SliceSpec> slices{flat_radio_slice("big", 20e6)};
    std::vector<SliceRateTable> rates{flat_table(1, 1e6)};
    auto r = delta_scaling(infra, slices, rates, Variant::sr_sn);
    CHECK(r.delta == doctest::Approx(0.5));
    CHECK(verify_solution(infra, scale_demands(slices, r.delta), rates, r.solution, 0.0)
              .empty());
  }
  {
    // A single-instance floor above every node capacity stays infeasible at
    // any positive demand fraction (floors are not scaled).
    std::vector<SliceSpec> slices{flat_radio_slice("floor", 5e6)};
    auto gw = plain_node("gw", 1, 50);
    slices[0].srd.nodes.push_back(gw);
    slices[0].srd.links.push_back({"gw", "vr", 1.0});
    std::vector<SliceRateTable> rates{flat_table(1, 1e6)};
    CHECK_THROWS_AS(delta_scaling(infra, slices, rates, Variant::sr_sn), InfeasibleStep);
  }
}

TEST_CASE("demand scaling copies leave floors untouched") {
  std::vector<SliceSpec> slices{micro_slice("s", 1e6)};
  auto scaled = scale_demands(slices, 0.5);
  CHECK(scaled[0].srd.nodes[0].compute_demand == doctest::Approx(1.0));
  CHECK(scaled[0].srd.nodes[0].min_compute == doctest::Approx(0.5));
  CHECK(scaled[0].srd.links[0].bandwidth_demand == doctest::Approx(0.5));
  CHECK(scaled[0].coverage.rate_down == doctest::Approx(0.5e6));
  CHECK(scaled[0].srd.nodes[1].rate_down_demand ==
        doctest::Approx(0.5 * slices[0].srd.nodes[1].rate_down_demand));
}

TEST_CASE("variant names round-trip") {
  for (auto v : {Variant::jrn, Variant::sr_sn, Variant::sr_jn, Variant::jr_sn, Variant::jr_jn})
    CHECK(variant_from_string(to_string(v)) == v);
  CHECK_THROWS_AS(variant_from_string("nope"), std::invalid_argument);
}
