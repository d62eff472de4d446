#include "sliceprov/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace sliceprov {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kMetersPerDegree = 111320.0;
constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

const json& require(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) fail("scenario: missing field " + ctx + "." + key);
  return j.at(key);
}

double num(const json& j, const char* key, const std::string& ctx) {
  const auto& v = require(j, key, ctx);
  if (!v.is_number()) fail("scenario: field " + ctx + "." + key + " must be a number");
  return v.get<double>();
}

double num_or(const json& j, const char* key, double fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  if (!j.at(key).is_number()) fail(std::string("scenario: field ") + key + " must be a number");
  return j.at(key).get<double>();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Rect rect_from(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 4) fail("scenario: " + ctx + " must be [x, y, w, h]");
  return Rect{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

FatTreeLevelCaps level_from(const json& j, const std::string& ctx) {
  FatTreeLevelCaps c;
  c.compute = num(j, "compute", ctx);
  c.storage = num_or(j, "storage", 0.0);
  c.down_link_bw = num(j, "down_link_bw", ctx);
  c.loopback_bw = num_or(j, "loopback_bw", 0.0);
  return c;
}

InfrastructureGraph infra_from_json(const json& j, const std::string& base_dir) {
  InfrastructureGraph g;
  if (j.contains("fat_tree")) {
    const auto& ft = j.at("fat_tree");
    FatTreeSpec spec;
    spec.k = static_cast<int>(num(ft, "k", "infrastructure.fat_tree"));
    const auto& lv = require(ft, "levels", "infrastructure.fat_tree");
    spec.core = level_from(require(lv, "core", "levels"), "levels.core");
    spec.agg = level_from(require(lv, "agg", "levels"), "levels.agg");
    spec.edge = level_from(require(lv, "edge", "levels"), "levels.edge");
    if (ft.contains("rrh")) {
      const auto& r = ft.at("rrh");
      spec.rrh.rb = num_or(r, "rb", spec.rrh.rb);
      spec.rrh.compute = num_or(r, "compute", spec.rrh.compute);
      spec.rrh.storage = num_or(r, "storage", spec.rrh.storage);
      spec.rrh.loopback_bw = num_or(r, "loopback_bw", spec.rrh.loopback_bw);
    }
    if (ft.contains("costs")) {
      const auto& c = ft.at("costs");
      spec.costs.cloud_fixed = num_or(c, "cloud_fixed", spec.costs.cloud_fixed);
      spec.costs.cloud_compute = num_or(c, "cloud_compute", spec.costs.cloud_compute);
      spec.costs.cloud_storage = num_or(c, "cloud_storage", spec.costs.cloud_storage);
      spec.costs.rrh_fixed = num_or(c, "rrh_fixed", spec.costs.rrh_fixed);
      spec.costs.rrh_compute = num_or(c, "rrh_compute", spec.costs.rrh_compute);
      spec.costs.rrh_storage = num_or(c, "rrh_storage", spec.costs.rrh_storage);
      spec.costs.rrh_rb = num_or(c, "rrh_rb", spec.costs.rrh_rb);
      spec.costs.link_bw = num_or(c, "link_bw", spec.costs.link_bw);
      spec.costs.loopback_bw = num_or(c, "loopback_bw", spec.costs.loopback_bw);
    }
    std::vector<Point> positions;
    if (j.contains("rrh_positions")) {
      for (const auto& p : j.at("rrh_positions")) {
        if (!p.is_array() || p.size() != 2) fail("scenario: rrh_positions entries must be [x, y]");
        positions.push_back({p[0].get<double>(), p[1].get<double>()});
      }
    } else if (j.contains("rrh_csv")) {
      const auto& cj = j.at("rrh_csv");
      const auto& oj = require(cj, "origin", "infrastructure.rrh_csv");
      if (!oj.is_array() || oj.size() != 2) fail("scenario: rrh_csv.origin must be [lat, lon]");
      GeoPoint origin{oj[0].get<double>(), oj[1].get<double>()};
      fs::path p = require(cj, "path", "infrastructure.rrh_csv").get<std::string>();
      if (p.is_relative()) p = fs::path(base_dir) / p;
      positions = ingest_rrh_csv(p.string(), origin);
    } else {
      fail("scenario: infrastructure needs rrh_positions or rrh_csv");
    }
    g = build_fat_tree(spec, positions);
  } else if (j.contains("nodes")) {
    for (const auto& n : j.at("nodes")) {
      InfraNode node;
      node.id = require(n, "id", "nodes[]").get<std::string>();
      const std::string kind = n.value("kind", "cloud");
      if (kind == "rrh")
        node.kind = NodeKind::rrh;
      else if (kind != "cloud")
        fail("scenario: node " + node.id + " has unknown kind '" + kind + "'");
      node.compute_capacity = num_or(n, "compute", 0.0);
      node.storage_capacity = num_or(n, "storage", 0.0);
      node.rb_capacity = num_or(n, "rb", 0.0);
      if (n.contains("position")) {
        const auto& p = n.at("position");
        node.position = Point{p[0].get<double>(), p[1].get<double>()};
      }
      node.fixed_cost = num_or(n, "fixed_cost", 0.0);
      node.compute_cost = num_or(n, "compute_cost", 0.0);
      node.storage_cost = num_or(n, "storage_cost", 0.0);
      node.rb_cost = num_or(n, "rb_cost", 0.0);
      g.add_node(std::move(node));
    }
    for (const auto& l : require(j, "links", "infrastructure")) {
      InfraLink link;
      link.src = require(l, "src", "links[]").get<std::string>();
      link.dst = require(l, "dst", "links[]").get<std::string>();
      link.bandwidth = num(l, "bandwidth", "links[]");
      link.unit_cost = num_or(l, "unit_cost", 0.0);
      g.add_link(std::move(link));
    }
  } else {
    fail("scenario: infrastructure needs either fat_tree or nodes/links");
  }
  g.validate();
  return g;
}

RadioParams radio_from_json(const json& j) {
  RadioParams p;
  p.rb_bandwidth_hz = num_or(j, "rb_bandwidth_hz", p.rb_bandwidth_hz);
  p.carrier_freq_ghz = num_or(j, "carrier_freq_ghz", p.carrier_freq_ghz);
  p.tx_power_down_dbm = num_or(j, "tx_power_down_dbm", p.tx_power_down_dbm);
  p.tx_gain_down_dbi = num_or(j, "tx_gain_down_dbi", p.tx_gain_down_dbi);
  p.tx_power_up_dbm = num_or(j, "tx_power_up_dbm", p.tx_power_up_dbm);
  p.tx_gain_up_dbi = num_or(j, "tx_gain_up_dbi", p.tx_gain_up_dbi);
  p.rx_gain_down_dbi = num_or(j, "rx_gain_down_dbi", p.rx_gain_down_dbi);
  p.rx_gain_up_dbi = num_or(j, "rx_gain_up_dbi", p.rx_gain_up_dbi);
  p.noise_density_dbm_hz = num_or(j, "noise_density_dbm_hz", p.noise_density_dbm_hz);
  p.alpha = num_or(j, "alpha", p.alpha);
  p.beta = num_or(j, "beta", p.beta);
  p.gamma = num_or(j, "gamma", p.gamma);
  if (j.is_object() && j.contains("conservatism")) {
    const std::string c = j.at("conservatism").get<std::string>();
    if (c == "center")
      p.conservatism = CellPoint::center;
    else if (c == "worst_corner")
      p.conservatism = CellPoint::worst_corner;
    else
      fail("scenario: radio.conservatism must be center or worst_corner");
  }
  return p;
}

// Catalog floors are demands-per-instance rounded to table precision; the
// flow-conservation equalities make the rounded values jointly unsatisfiable
// at realistic capacities, so by default each floor is snapped to the nearest
// exact divisor of its demand.
void snap_floor(double demand, double& floor) {
  if (floor > 0 && demand > 0) floor = demand / std::max(1.0, std::round(demand / floor));
}

SliceSpec slice_from_entry(const json& e, const std::string& id, double cell_w, double cell_h,
                           bool snap_floors) {
  SliceSpec s;
  s.id = id;
  s.srd = slice_preset(require(e, "preset", "slices[]").get<std::string>());
  if (snap_floors)
    for (auto& n : s.srd.nodes) {
      snap_floor(n.compute_demand, n.min_compute);
      snap_floor(n.storage_demand, n.min_storage);
    }
  const double users = num_or(e, "users", 0.0);
  const double rate_up = num_or(e, "rate_up", 0.0);
  const double rate_down = num_or(e, "rate_down", 0.0);
  const bool has_radio = users > 0 && rate_up + rate_down > 0;
  if (has_radio) {
    Rect area = rect_from(require(e, "area", "slices[]"), "slices[].area");
    s.coverage.area = {area};
    s.coverage.density = Density::uniform(area, users);
    s.coverage.rate_up = rate_up;
    s.coverage.rate_down = rate_down;
    partition_coverage(s.coverage, cell_w, cell_h);
    auto agg = aggregate_radio_demand(s.coverage);
    auto& vr = s.srd.nodes[s.srd.radio_node_index()];
    vr.rate_up_demand = agg.up;
    vr.rate_down_demand = agg.down;
  }
  s.validate();
  return s;
}

milp::SolveStatus status_from_string(const std::string& s) {
  for (auto st : {milp::SolveStatus::optimal, milp::SolveStatus::feasible,
                  milp::SolveStatus::infeasible, milp::SolveStatus::unbounded,
                  milp::SolveStatus::timeout, milp::SolveStatus::error})
    if (milp::to_string(st) == s) return st;
  fail("solution: unknown solve status '" + s + "'");
}

}  // namespace

std::vector<Point> ingest_rrh_csv(const std::string& path, const GeoPoint& origin,
                                  std::ostream* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open RRH CSV: " + path);
  std::ostream& warn = warnings ? *warnings : std::cerr;
  const double x_scale = kMetersPerDegree * std::cos(origin.lat * kPi / 180.0);
  std::vector<Point> out;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    double lat = 0, lon = 0;
    char trailing;
    const int got = std::sscanf(line.c_str(), " %lf , %lf %c", &lat, &lon, &trailing);
    if (got != 2)
      throw std::runtime_error("RRH CSV row " + std::to_string(row) +
                               ": expected 'lat,lon', got '" + line + "'");
    out.push_back({x_scale * (lon - origin.lon), kMetersPerDegree * (lat - origin.lat)});
  }
  if (out.empty()) warn << "warning: RRH CSV '" << path << "' contains no positions\n";
  return out;
}

SrdGraph slice_preset(const std::string& name) {
  auto node = [](const char* id, double rc, double rc_min, double rs, double rs_min,
                 bool radio = false) {
    SrdNode n;
    n.id = id;
    n.compute_demand = rc;
    n.min_compute = rc_min;
    n.storage_demand = rs;
    n.min_storage = rs_min;
    n.is_radio_node = radio;
    return n;
  };
  SrdGraph g;
  if (name == "slice1") {
    g.nodes = {node("vVOC", 1.35, 0.14, 3.75, 0.38), node("vGW", 0.23, 0.02, 0.13, 0.01),
               node("vBBU", 1.00, 0.10, 0.13, 0.01, true)};
    g.links = {{"vVOC", "vGW", 1.0}, {"vGW", "vBBU", 1.0}};
  } else if (name == "slice2") {
    g.nodes = {node("vVOC", 1.08, 0.11, 1.88, 0.19), node("vGW", 0.18, 0.02, 0.06, 0.01),
               node("vBBU", 4.00, 0.40, 0.06, 0.01, true)};
    g.links = {{"vVOC", "vGW", 0.5}, {"vGW", "vBBU", 0.5}};
  } else if (name == "slice3") {
    g.nodes = {node("vIDPS", 0.535, 0.054, 0.006, 0.001), node("vVOC", 0.270, 0.027, 0.188, 0.019),
               node("vTM", 0.665, 0.067, 0.006, 0.001), node("vGW", 0.045, 0.005, 0.006, 0.001),
               node("vBBU", 0.200, 0.020, 0.006, 0.001, true)};
    g.links = {{"vIDPS", "vVOC", 0.05},
               {"vVOC", "vTM", 0.05},
               {"vTM", "vGW", 0.05},
               {"vGW", "vBBU", 0.05}};
  } else {
    fail("unknown slice preset: " + name);
  }
  return g;
}

std::array<int, 3> slice_mix(int total_slices) {
  switch (total_slices) {
    case 4: return {2, 1, 1};
    case 6: return {2, 2, 2};
    case 8: return {4, 1, 3};
  }
  fail("slice_mix: supported totals are 4, 6, 8; got " + std::to_string(total_slices));
}

Scenario scenario_from_json(const json& j, const std::string& base_dir) {
  Scenario sc;
  sc.infra = infra_from_json(require(j, "infrastructure", ""), base_dir);
  sc.radio = radio_from_json(j.contains("radio") ? j.at("radio") : json::object());
  const double cell_w = j.contains("cell") ? num(j.at("cell"), "width", "cell") : 90.0;
  const double cell_h = j.contains("cell") ? num(j.at("cell"), "height", "cell") : 103.0;

  const auto& entries = require(j, "slices", "");
  if (!entries.is_array() || entries.empty()) fail("scenario: slices must be a non-empty array");
  const bool snap_floors = j.value("snap_floors", true);
  if (j.contains("slice_total")) {
    const int total = j.at("slice_total").get<int>();
    if (entries.size() != 3)
      fail("scenario: slice_total expansion needs exactly 3 type entries, got " +
           std::to_string(entries.size()));
    const auto mix = slice_mix(total);
    for (size_t t = 0; t < 3; ++t) {
      const std::string base = entries[t].value("id", "type" + std::to_string(t + 1));
      for (int c = 0; c < mix[t]; ++c)
        sc.slices.push_back(slice_from_entry(entries[t], base + "_" + std::to_string(c), cell_w,
                                             cell_h, snap_floors));
    }
  } else {
    for (size_t e = 0; e < entries.size(); ++e) {
      const std::string base =
          entries[e].value("id", require(entries[e], "preset", "slices[]").get<std::string>());
      const int count = entries[e].value("count", 1);
      if (count < 1) fail("scenario: slices[].count must be >= 1");
      for (int c = 0; c < count; ++c)
        sc.slices.push_back(slice_from_entry(entries[e],
                                             count == 1 ? base : base + "_" + std::to_string(c),
                                             cell_w, cell_h, snap_floors));
    }
  }

  for (const auto& v : require(j, "variants", "")) {
    std::string s = v.get<std::string>();
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    sc.variants.push_back(variant_from_string(s));
  }
  if (sc.variants.empty()) fail("scenario: variants must be non-empty");

  sc.lambda = num_or(j, "lambda", 0.0);
  sc.epsilon = num_or(j, "epsilon", 1e-6);
  if (j.contains("solver")) {
    const auto& s = j.at("solver");
    sc.solver.backend = s.value("backend", "");
    sc.solver.time_limit = num_or(s, "time_limit", sc.solver.time_limit);
    sc.solver.mip_gap = num_or(s, "mip_gap", sc.solver.mip_gap);
    sc.solver.seed = static_cast<int>(num_or(s, "seed", sc.solver.seed));
  }
  sc.rates = precompute_rate_tables(sc.infra, sc.slices, sc.radio);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("scenario parse error in " + path + ": " + e.what());
  }
  return scenario_from_json(j, fs::path(path).parent_path().string());
}

VariantMetrics compute_metrics(const Scenario& sc, const ProvisioningSolution& sol) {
  VariantMetrics m;
  m.radio_cost = sol.radio_cost;
  m.wired_cost = sol.wired_cost;
  m.total_cost = sol.total_cost;

  const auto rrhs = sc.infra.rrh_indices();
  double rb_total = 0, rb_used = 0;
  for (int i : rrhs) rb_total += sc.infra.nodes()[i].rb_capacity;
  std::vector<char> node_used(sc.infra.nodes().size(), 0);
  std::vector<char> link_used(sc.infra.links().size(), 0);
  for (size_t s = 0; s < sc.slices.size(); ++s) {
    if (s < sol.radio.size() && sol.radio[s].n_rrh > 0) {
      const auto& r = sol.radio[s];
      for (size_t ri = 0; ri < rrhs.size(); ++ri) {
        const double a_r = sc.infra.nodes()[rrhs[ri]].rb_capacity;
        for (int q = 0; q < r.n_cells; ++q)
          rb_used += a_r * r.combined(static_cast<int>(ri), q);
        if (r.used[ri]) node_used[rrhs[ri]] = 1;
      }
    }
    if (s < sol.wired.size() && sol.wired[s].n_nodes > 0) {
      const auto& w = sol.wired[s];
      for (int i = 0; i < w.n_nodes; ++i)
        if (w.used[i]) node_used[i] = 1;
      for (int l = 0; l < w.n_links; ++l)
        for (int e = 0; e < w.n_srd_links; ++e)
          if (w.phi_b(l, e) > 1e-9) link_used[l] = 1;
    }
  }
  m.rb_utilization = rb_total > 0 ? rb_used / rb_total : 0.0;
  for (char u : node_used) m.used_nodes += u;
  for (char u : link_used) m.used_links += u;
  return m;
}

ExperimentReport run_experiment(const Scenario& sc) {
  ExperimentReport report;
  ProvisionOptions opts;
  opts.lambda = sc.lambda;
  opts.epsilon = sc.epsilon;
  opts.solver = sc.solver;
  for (Variant v : sc.variants) {
    VariantRun run;
    run.variant = v;
    try {
      run.solution = carp(sc.infra, sc.slices, sc.rates, v, opts);
      run.solved = true;
      run.status = "optimal";
      run.metrics = compute_metrics(sc, run.solution);
    } catch (const InfeasibleStep& e) {
      run.status = "infeasible:" + e.step + (e.slice_id.empty() ? "" : ":" + e.slice_id);
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

std::string metrics_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "variant,status,radio_cost,wired_cost,total_cost,rb_utilization,used_nodes,used_links\n";
  for (const auto& r : report.runs) {
    const auto& m = r.metrics;
    out << to_string(r.variant) << ',' << r.status << ',' << fmt(m.radio_cost) << ','
        << fmt(m.wired_cost) << ',' << fmt(m.total_cost) << ',' << fmt(m.rb_utilization) << ','
        << m.used_nodes << ',' << m.used_links << '\n';
  }
  return out.str();
}

std::string timings_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "variant,problem,variables,integer_variables,constraints,status,solve_time_s\n";
  for (const auto& r : report.runs)
    for (const auto& p : r.solution.problems)
      out << to_string(r.variant) << ',' << p.name << ',' << p.variables << ','
          << p.integer_variables << ',' << p.constraints << ',' << milp::to_string(p.status)
          << ',' << fmt(p.solve_time) << '\n';
  return out.str();
}

std::vector<RbBreakdownRow> rb_breakdown(const Scenario& sc, const ExperimentReport& report) {
  std::vector<RbBreakdownRow> rows;
  const auto rrhs = sc.infra.rrh_indices();
  for (const auto& r : report.runs) {
    if (!r.solved) continue;
    for (size_t ri = 0; ri < rrhs.size(); ++ri) {
      const auto& node = sc.infra.nodes()[rrhs[ri]];
      for (size_t s = 0; s < sc.slices.size(); ++s) {
        double share = 0;
        if (s < r.solution.radio.size() && r.solution.radio[s].n_rrh > 0) {
          const auto& rs = r.solution.radio[s];
          for (int q = 0; q < rs.n_cells; ++q) share += rs.combined(static_cast<int>(ri), q);
        }
        rows.push_back({to_string(r.variant), node.id, sc.slices[s].id, share,
                        share * node.rb_capacity});
      }
    }
  }
  return rows;
}

std::string rb_breakdown_csv(const std::vector<RbBreakdownRow>& rows) {
  std::ostringstream out;
  out << "variant,rrh,slice,rb_share,rbs\n";
  for (const auto& r : rows)
    out << r.variant << ',' << r.rrh << ',' << r.slice << ',' << fmt(r.share) << ','
        << fmt(r.rbs) << '\n';
  return out.str();
}

json solution_to_json(const Scenario& sc, const ProvisioningSolution& sol) {
  json j;
  j["variant"] = to_string(sol.variant);
  j["radio_cost"] = sol.radio_cost;
  j["wired_cost"] = sol.wired_cost;
  j["total_cost"] = sol.total_cost;
  auto& radio = j["radio"] = json::array();
  for (size_t s = 0; s < sol.radio.size(); ++s) {
    const auto& r = sol.radio[s];
    if (r.n_rrh == 0) {
      radio.push_back(nullptr);
      continue;
    }
    json e;
    e["slice"] = s < sc.slices.size() ? sc.slices[s].id : "";
    e["n_rrh"] = r.n_rrh;
    e["n_cells"] = r.n_cells;
    e["eta_up"] = r.eta_up;
    e["eta_down"] = r.eta_down;
    e["used"] = json::array();
    for (char u : r.used) e["used"].push_back(static_cast<int>(u));
    radio.push_back(std::move(e));
  }
  auto& wired = j["wired"] = json::array();
  for (size_t s = 0; s < sol.wired.size(); ++s) {
    const auto& w = sol.wired[s];
    if (w.n_nodes == 0) {
      wired.push_back(nullptr);
      continue;
    }
    json e;
    e["slice"] = s < sc.slices.size() ? sc.slices[s].id : "";
    e["n_nodes"] = w.n_nodes;
    e["n_srd_nodes"] = w.n_srd_nodes;
    e["n_links"] = w.n_links;
    e["n_srd_links"] = w.n_srd_links;
    e["compute"] = w.compute;
    e["storage"] = w.storage;
    e["vnf_count_compute"] = w.vnf_count_compute;
    e["vnf_count_storage"] = w.vnf_count_storage;
    e["used"] = json::array();
    for (char u : w.used) e["used"].push_back(static_cast<int>(u));
    e["link"] = w.link;
    wired.push_back(std::move(e));
  }
  auto& problems = j["problems"] = json::array();
  for (const auto& p : sol.problems)
    problems.push_back({{"name", p.name},
                        {"variables", p.variables},
                        {"integer_variables", p.integer_variables},
                        {"constraints", p.constraints},
                        {"solve_time", p.solve_time},
                        {"status", milp::to_string(p.status)}});
  return j;
}

ProvisioningSolution solution_from_json(const json& j) {
  ProvisioningSolution sol;
  sol.variant = variant_from_string(require(j, "variant", "solution").get<std::string>());
  sol.radio_cost = num(j, "radio_cost", "solution");
  sol.wired_cost = num(j, "wired_cost", "solution");
  sol.total_cost = num(j, "total_cost", "solution");
  for (const auto& e : require(j, "radio", "solution")) {
    SliceRadioShares r;
    if (!e.is_null()) {
      r.n_rrh = e.at("n_rrh").get<int>();
      r.n_cells = e.at("n_cells").get<int>();
      r.eta_up = e.at("eta_up").get<std::vector<double>>();
      r.eta_down = e.at("eta_down").get<std::vector<double>>();
      for (const auto& u : e.at("used")) r.used.push_back(static_cast<char>(u.get<int>()));
    }
    sol.radio.push_back(std::move(r));
  }
  for (const auto& e : require(j, "wired", "solution")) {
    SliceWiredShares w;
    if (!e.is_null()) {
      w.n_nodes = e.at("n_nodes").get<int>();
      w.n_srd_nodes = e.at("n_srd_nodes").get<int>();
      w.n_links = e.at("n_links").get<int>();
      w.n_srd_links = e.at("n_srd_links").get<int>();
      w.compute = e.at("compute").get<std::vector<double>>();
      w.storage = e.at("storage").get<std::vector<double>>();
      w.vnf_count_compute = e.at("vnf_count_compute").get<std::vector<double>>();
      w.vnf_count_storage = e.at("vnf_count_storage").get<std::vector<double>>();
      for (const auto& u : e.at("used")) w.used.push_back(static_cast<char>(u.get<int>()));
      w.link = e.at("link").get<std::vector<double>>();
    }
    sol.wired.push_back(std::move(w));
  }
  if (j.contains("problems"))
    for (const auto& p : j.at("problems")) {
      ProblemStats ps;
      ps.name = p.at("name").get<std::string>();
      ps.variables = p.at("variables").get<int>();
      ps.integer_variables = p.at("integer_variables").get<int>();
      ps.constraints = p.at("constraints").get<int>();
      ps.solve_time = p.at("solve_time").get<double>();
      ps.status = status_from_string(p.at("status").get<std::string>());
      sol.problems.push_back(std::move(ps));
    }
  return sol;
}

void write_report(const Scenario& sc, const ExperimentReport& report,
                  const std::string& out_dir) {
  fs::create_directories(out_dir);
  std::ofstream(fs::path(out_dir) / "metrics.csv") << metrics_csv(report);
  std::ofstream(fs::path(out_dir) / "timings.csv") << timings_csv(report);
  std::ofstream(fs::path(out_dir) / "rb_breakdown.csv")
      << rb_breakdown_csv(rb_breakdown(sc, report));
  json solutions = json::array();
  for (const auto& r : report.runs) {
    json e;
    e["variant"] = to_string(r.variant);
    e["status"] = r.status;
    if (r.solved) e["solution"] = solution_to_json(sc, r.solution);
    solutions.push_back(std::move(e));
  }
  std::ofstream(fs::path(out_dir) / "solutions.json") << solutions.dump(1) << '\n';
}

}  // namespace sliceprov
