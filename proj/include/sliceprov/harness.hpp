#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sliceprov/provisioning.hpp"

namespace sliceprov {

// WGS84 coordinate in degrees.
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

// Reads "lat,lon" rows and projects them equirectangularly about `origin`
// (meters, east/north). Malformed rows throw with the 1-based row index; an
// empty file yields an empty list after printing a warning.
std::vector<Point> ingest_rrh_csv(const std::string& path, const GeoPoint& origin,
                                  std::ostream* warnings = nullptr);

// Demand-graph catalogs for the three built-in slice types ("slice1": HD
// video chain, "slice2": SD video chain, "slice3": five-function uplink
// monitoring chain). The radio endpoint is vBBU; its rate demands are filled
// in from the coverage spec at scenario load.
SrdGraph slice_preset(const std::string& name);

// Per-type slice counts for the supported totals 4, 6, and 8.
std::array<int, 3> slice_mix(int total_slices);

struct Scenario {
  InfrastructureGraph infra;
  RadioParams radio;
  std::vector<SliceSpec> slices;
  std::vector<SliceRateTable> rates;  // precomputed at load
  std::vector<Variant> variants;
  double lambda = 0.0;
  double epsilon = 1e-6;
  milp::SolveOptions solver;
};

// Parses and fully validates a scenario document; see README for the schema.
// Throws std::invalid_argument naming the offending field or invariant.
Scenario load_scenario(const std::string& path);
Scenario scenario_from_json(const nlohmann::json& j, const std::string& base_dir = ".");

struct VariantMetrics {
  double radio_cost = 0.0;
  double wired_cost = 0.0;
  double total_cost = 0.0;
  double rb_utilization = 0.0;  // provisioned RBs / total RBs
  int used_nodes = 0;
  int used_links = 0;
};

struct VariantRun {
  Variant variant = Variant::jrn;
  std::string status;  // "optimal" or "infeasible:<step>[:<slice>]"
  bool solved = false;
  ProvisioningSolution solution;  // meaningful iff solved
  VariantMetrics metrics;         // zeroed when not solved
};

struct ExperimentReport {
  std::vector<VariantRun> runs;  // one per requested variant, in request order
};

// Runs every requested variant; infeasible variants are recorded and the run
// continues. Wall-clock per problem is captured inside each solution.
ExperimentReport run_experiment(const Scenario& sc);

VariantMetrics compute_metrics(const Scenario& sc, const ProvisioningSolution& sol);

// Time-free per-variant metric rows (deterministic across reruns).
std::string metrics_csv(const ExperimentReport& report);
// Per-problem sizes and solve times, one row per (variant, problem).
std::string timings_csv(const ExperimentReport& report);

struct RbBreakdownRow {
  std::string variant;
  std::string rrh;
  std::string slice;
  double share = 0.0;  // fraction of the RRH's RB capacity
  double rbs = 0.0;    // share * a_r
};
std::vector<RbBreakdownRow> rb_breakdown(const Scenario& sc, const ExperimentReport& report);
std::string rb_breakdown_csv(const std::vector<RbBreakdownRow>& rows);

nlohmann::json solution_to_json(const Scenario& sc, const ProvisioningSolution& sol);
ProvisioningSolution solution_from_json(const nlohmann::json& j);

// Writes metrics.csv, timings.csv, rb_breakdown.csv, and solutions.json into
// `out_dir` (created if missing).
void write_report(const Scenario& sc, const ExperimentReport& report,
                  const std::string& out_dir);

}  // namespace sliceprov
