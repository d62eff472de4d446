#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "sliceprov/harness.hpp"

using namespace sliceprov;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& content) {
    path = fs::temp_directory_path() / ("sliceprov-test-" + std::to_string(std::rand()) + ".csv");
    std::ofstream(path) << content;
  }
  ~TempFile() { fs::remove(path); }
};

// Two RRHs over a 180 m x 103 m area served from one cloud node.
json micro_scenario_json() {
  json j;
  j["infrastructure"]["nodes"] = json::array(
      {{{"id", "c0"}, {"compute", 10.0}, {"storage", 10.0}, {"fixed_cost", 5.0},
        {"compute_cost", 1.0}, {"storage_cost", 1.0}},
       {{"id", "r0"}, {"kind", "rrh"}, {"rb", 100.0}, {"compute", 8.0}, {"storage", 8.0},
        {"position", {45.0, 51.5}}, {"fixed_cost", 25.0}, {"compute_cost", 2.0},
        {"storage_cost", 2.0}, {"rb_cost", 0.05}},
       {{"id", "r1"}, {"kind", "rrh"}, {"rb", 100.0}, {"compute", 8.0}, {"storage", 8.0},
        {"position", {135.0, 51.5}}, {"fixed_cost", 25.0}, {"compute_cost", 2.0},
        {"storage_cost", 2.0}, {"rb_cost", 0.05}}});
  auto links = json::array();
  for (const std::string r : {"r0", "r1"}) {
    links.push_back({{"src", "c0"}, {"dst", r}, {"bandwidth", 10.0}, {"unit_cost", 1.0}});
    links.push_back({{"src", r}, {"dst", "c0"}, {"bandwidth", 10.0}, {"unit_cost", 1.0}});
  }
  for (const std::string n : {"c0", "r0", "r1"})
    links.push_back({{"src", n}, {"dst", n}, {"bandwidth", 5.0}, {"unit_cost", 0.1}});
  j["infrastructure"]["links"] = links;
  j["slices"] = json::array({{{"id", "hd"},
                              {"preset", "slice1"},
                              {"area", {0.0, 0.0, 180.0, 103.0}},
                              {"users", 20.0},
                              {"rate_up", 2.5e5},
                              {"rate_down", 1e6}}});
  j["variants"] = {"JRN", "JR-JN", "SR-SN"};
  j["lambda"] = 0.0;
  return j;
}

}  // namespace

TEST_CASE("rrh csv projection about an origin") {
  TempFile f("48.9,2.35\n48.9,2.351\n48.91,2.35\n");
  auto pts = ingest_rrh_csv(f.path.string(), {48.9, 2.35});
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pts[0].y == doctest::Approx(0.0).epsilon(1e-12));
  // 0.001 degrees east at latitude 48.9: 111320 * cos(48.9 deg) * 0.001 m.
  CHECK(std::abs(pts[1].x - 73.2) < 0.5);
  CHECK(std::abs(pts[1].y) < 1e-6);
  CHECK(std::abs(pts[2].y - 1113.2) < 0.5);
}

TEST_CASE("rrh csv rejects malformed rows, warns on empty input") {
  TempFile bad("48.9,2.35\nnot-a-number,2.35\n");
  CHECK_THROWS_WITH_AS(ingest_rrh_csv(bad.path.string(), {48.9, 2.35}),
                       doctest::Contains("row 2"), std::runtime_error);
  TempFile empty("");
  std::ostringstream warn;
  auto pts = ingest_rrh_csv(empty.path.string(), {48.9, 2.35}, &warn);
  CHECK(pts.empty());
  CHECK(warn.str().find("warning") != std::string::npos);
}

TEST_CASE("slice preset catalog") {
  auto s1 = slice_preset("slice1");
  REQUIRE(s1.nodes.size() == 3);
  CHECK(s1.nodes[0].id == "vVOC");
  CHECK(s1.nodes[0].compute_demand == doctest::Approx(1.35));
  CHECK(s1.nodes[0].min_compute == doctest::Approx(0.14));
  CHECK(s1.nodes[0].storage_demand == doctest::Approx(3.75));
  CHECK(s1.nodes[2].id == "vBBU");
  CHECK(s1.nodes[2].is_radio_node);
  REQUIRE(s1.links.size() == 2);
  CHECK(s1.links[0].bandwidth_demand == doctest::Approx(1.0));

  auto s2 = slice_preset("slice2");
  CHECK(s2.nodes[2].compute_demand == doctest::Approx(4.0));
  CHECK(s2.links[1].bandwidth_demand == doctest::Approx(0.5));

  auto s3 = slice_preset("slice3");
  REQUIRE(s3.nodes.size() == 5);
  REQUIRE(s3.links.size() == 4);
  CHECK(s3.nodes[0].id == "vIDPS");
  CHECK(s3.nodes[2].compute_demand == doctest::Approx(0.665));
  for (const auto& l : s3.links) CHECK(l.bandwidth_demand == doctest::Approx(0.05));
  CHECK(s3.nodes[4].is_radio_node);

  CHECK_THROWS_AS(slice_preset("slice9"), std::invalid_argument);
}

TEST_CASE("slice count mix per total") {
  CHECK(slice_mix(4) == std::array<int, 3>{2, 1, 1});
  CHECK(slice_mix(6) == std::array<int, 3>{2, 2, 2});
  CHECK(slice_mix(8) == std::array<int, 3>{4, 1, 3});
  CHECK_THROWS_AS(slice_mix(5), std::invalid_argument);
}

TEST_CASE("scenario parsing: explicit graph, counts, validation errors") {
  auto j = micro_scenario_json();
  auto sc = scenario_from_json(j);
  CHECK(sc.infra.nodes().size() == 3);
  CHECK(sc.infra.links().size() == 7);
  REQUIRE(sc.slices.size() == 1);
  CHECK(sc.slices[0].id == "hd");
  CHECK(sc.slices[0].coverage.subareas.size() == 2);  // 180x103 in 90x103 cells
  const auto& vbbu = sc.slices[0].srd.nodes[sc.slices[0].srd.radio_node_index()];
  CHECK(vbbu.rate_down_demand == doctest::Approx(20 * 1e6));
  CHECK(vbbu.rate_up_demand == doctest::Approx(20 * 2.5e5));
  REQUIRE(sc.rates.size() == 1);
  CHECK(sc.rates[0].n_rrh == 2);
  CHECK(sc.rates[0].n_cells == 2);
  REQUIRE(sc.variants.size() == 3);
  CHECK(sc.variants[0] == Variant::jrn);
  CHECK(sc.variants[2] == Variant::sr_sn);

  j["slices"][0]["count"] = 2;
  auto sc2 = scenario_from_json(j);
  REQUIRE(sc2.slices.size() == 2);
  CHECK(sc2.slices[0].id == "hd_0");
  CHECK(sc2.slices[1].id == "hd_1");

  auto bad = micro_scenario_json();
  bad["variants"].push_back("XRN");
  CHECK_THROWS_AS(scenario_from_json(bad), std::invalid_argument);
  auto missing = micro_scenario_json();
  missing.erase("slices");
  CHECK_THROWS_WITH_AS(scenario_from_json(missing), doctest::Contains("slices"),
                       std::invalid_argument);
}

TEST_CASE("scenario parsing: table-driven slice totals") {
  auto j = micro_scenario_json();
  j["slice_total"] = 4;
  j["slices"] = json::array();
  for (const std::string preset : {"slice1", "slice2", "slice3"}) {
    json e = {{"preset", preset}};
    j["slices"].push_back(e);
  }
  // Radio-free type entries: coverage omitted, only wired demand remains.
  auto sc = scenario_from_json(j);
  REQUIRE(sc.slices.size() == 4);
  CHECK(sc.slices[0].id == "type1_0");
  CHECK(sc.slices[1].id == "type1_1");
  CHECK(sc.slices[2].id == "type2_0");
  CHECK(sc.slices[3].id == "type3_0");

  j["slice_total"] = 5;
  CHECK_THROWS_AS(scenario_from_json(j), std::invalid_argument);
}

TEST_CASE("fat-tree scenario construction") {
  json j;
  auto& ft = j["infrastructure"]["fat_tree"];
  ft["k"] = 2;
  for (const std::string lv : {"core", "agg", "edge"}) {
    ft["levels"][lv]["compute"] = 50.0;
    ft["levels"][lv]["storage"] = 50.0;
    ft["levels"][lv]["down_link_bw"] = 40.0;
    ft["levels"][lv]["loopback_bw"] = 100.0;
  }
  ft["rrh"]["rb"] = 100.0;
  j["infrastructure"]["rrh_positions"] = {{45.0, 51.5}, {135.0, 51.5}};
  j["slices"] = json::array({{{"id", "hd"},
                              {"preset", "slice1"},
                              {"area", {0.0, 0.0, 180.0, 103.0}},
                              {"users", 20.0},
                              {"rate_down", 1e6}}});
  j["variants"] = {"jrn"};
  auto sc = scenario_from_json(j);
  auto shape = fat_tree_shape(2);
  CHECK(static_cast<int>(sc.infra.nodes().size()) == shape.total_nodes);
  CHECK(static_cast<int>(sc.infra.links().size()) == shape.directed_links);
  CHECK(sc.infra.rrh_indices().size() == 2);
}

TEST_CASE("experiment run: metrics, reports, determinism") {
  auto sc = scenario_from_json(micro_scenario_json());
  auto report = run_experiment(sc);
  REQUIRE(report.runs.size() == 3);
  for (const auto& r : report.runs) {
    REQUIRE(r.solved);
    CHECK(r.status == "optimal");
    CHECK(r.metrics.rb_utilization >= 0.0);
    CHECK(r.metrics.rb_utilization <= 1.0);
    CHECK(r.metrics.used_nodes <= static_cast<int>(sc.infra.nodes().size()));
    CHECK(r.metrics.used_links <= static_cast<int>(sc.infra.links().size()));
    CHECK(r.metrics.total_cost ==
          doctest::Approx(r.metrics.radio_cost + r.metrics.wired_cost));
    CHECK(verify_solution(sc.infra, sc.slices, sc.rates, r.solution, sc.lambda).empty());
  }
  // Exact optimum dominates, and joint radio needs no more RBs than sequential.
  CHECK(report.runs[0].metrics.total_cost <= report.runs[2].metrics.total_cost + 1e-6);
  CHECK(report.runs[1].metrics.radio_cost <= report.runs[2].metrics.radio_cost + 1e-6);

  auto m1 = metrics_csv(report);
  CHECK(m1.find("variant,status,") == 0);
  CHECK(m1.find("jrn,optimal") != std::string::npos);
  auto t1 = timings_csv(report);
  CHECK(t1.find("jrn,jrn,") != std::string::npos);
  CHECK(t1.find("sr-sn,rp[0],") != std::string::npos);

  auto report2 = run_experiment(sc);
  CHECK(metrics_csv(report2) == m1);  // time-free rows are byte-identical
}

TEST_CASE("single-rrh utilization equals the demand-implied share") {
  auto j = micro_scenario_json();
  j["infrastructure"]["nodes"].erase(2);  // drop r1
  auto& links = j["infrastructure"]["links"];
  for (int i = static_cast<int>(links.size()) - 1; i >= 0; --i)
    if (links[i]["src"] == "r1" || links[i]["dst"] == "r1") links.erase(i);
  j["slices"][0]["area"] = {0.0, 0.0, 90.0, 103.0};  // one cell
  j["slices"][0]["rate_up"] = 0.0;
  j["variants"] = {"jrn"};
  auto sc = scenario_from_json(j);
  REQUIRE(sc.rates[0].n_cells == 1);
  auto report = run_experiment(sc);
  REQUIRE(report.runs[0].solved);
  // Down-only, one RRH, one cell: minimum share is R / (a_r * b_d).
  const double expected = 20 * 1e6 / (100.0 * sc.rates[0].b_down(0, 0));
  CHECK(report.runs[0].metrics.rb_utilization == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("rb breakdown rows and capacity totals") {
  auto sc = scenario_from_json(micro_scenario_json());
  auto report = run_experiment(sc);
  auto rows = rb_breakdown(sc, report);
  const size_t n_rrh = sc.infra.rrh_indices().size();
  REQUIRE(rows.size() == report.runs.size() * n_rrh * sc.slices.size());
  for (const auto& r : rows) {
    CHECK(r.share >= -1e-9);
    CHECK(r.share <= 1.0 + 1e-9);
    CHECK(r.rbs == doctest::Approx(r.share * 100.0).epsilon(1e-12));
  }
  // Per-(variant, rrh) totals never exceed the RRH's capacity.
  std::map<std::pair<std::string, std::string>, double> totals;
  for (const auto& row : rows) totals[{row.variant, row.rrh}] += row.rbs;
  for (const auto& [key, rbs] : totals) CHECK(rbs <= 100.0 + 1e-9);
  auto csv = rb_breakdown_csv(rows);
  CHECK(csv.find("variant,rrh,slice,rb_share,rbs") == 0);

  // Joint radio never needs more RRHs than sequential radio.
  auto used_count = [&](const std::string& variant) {
    int n = 0;
    for (const auto& row : rows)
      if (row.variant == variant && row.share > 1e-9) ++n;
    return n;
  };
  CHECK(used_count("jr-jn") <= used_count("sr-sn"));
}

TEST_CASE("solution serialization round trip") {
  auto sc = scenario_from_json(micro_scenario_json());
  auto report = run_experiment(sc);
  const auto& sol = report.runs[0].solution;
  auto j = solution_to_json(sc, sol);
  auto back = solution_from_json(j);
  CHECK(back.variant == sol.variant);
  CHECK(back.total_cost == doctest::Approx(sol.total_cost).epsilon(1e-12));
  CHECK(verify_solution(sc.infra, sc.slices, sc.rates, back, sc.lambda).empty());
  auto m = compute_metrics(sc, back);
  CHECK(m.rb_utilization ==
        doctest::Approx(report.runs[0].metrics.rb_utilization).epsilon(1e-9));
  CHECK(m.used_nodes == report.runs[0].metrics.used_nodes);
  CHECK(m.used_links == report.runs[0].metrics.used_links);
}

TEST_CASE("report directory contents") {
  auto sc = scenario_from_json(micro_scenario_json());
  auto report = run_experiment(sc);
  auto dir = fs::temp_directory_path() / ("sliceprov-report-" + std::to_string(std::rand()));
  write_report(sc, report, dir.string());
  for (const std::string f : {"metrics.csv", "timings.csv", "rb_breakdown.csv", "solutions.json"})
    CHECK(fs::exists(dir / f));
  std::ifstream in(dir / "solutions.json");
  json sols;
  in >> sols;
  REQUIRE(sols.size() == 3);
  CHECK(sols[0]["status"] == "optimal");
  auto back = solution_from_json(sols[0]["solution"]);
  CHECK(verify_solution(sc.infra, sc.slices, sc.rates, back, sc.lambda).empty());
  fs::remove_all(dir);
}
