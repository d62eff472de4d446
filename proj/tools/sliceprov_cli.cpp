#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sliceprov/embedding.hpp"
#include "sliceprov/harness.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<int> parse_counts(const std::string& spec) {
  std::vector<int> counts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dots = tok.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(tok.substr(0, dots));
      const int hi = std::stoi(tok.substr(dots + 2));
      for (int c = lo; c <= hi; ++c) counts.push_back(c);
    } else {
      counts.push_back(std::stoi(tok));
    }
  }
  if (counts.empty()) throw std::invalid_argument("empty --sfc-counts");
  return counts;
}

int cmd_provision(const std::string& scenario_path, const std::string& variants,
                  double* lambda_override, const std::string& out_dir) {
  auto sc = sliceprov::load_scenario(scenario_path);
  if (!variants.empty()) {
    sc.variants.clear();
    std::stringstream ss(variants);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      for (auto& ch : tok) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      sc.variants.push_back(sliceprov::variant_from_string(tok));
    }
  }
  if (lambda_override) sc.lambda = *lambda_override;
  auto report = sliceprov::run_experiment(sc);
  sliceprov::write_report(sc, report, out_dir);
  bool ok = true;
  for (const auto& r : report.runs) {
    std::cout << to_string(r.variant) << ": " << r.status;
    if (r.solved)
      std::cout << " (total cost " << r.metrics.total_cost << ", RB utilization "
                << r.metrics.rb_utilization << ")";
    std::cout << "\n";
    if (!r.solved && r.status.rfind("infeasible:", 0) != 0) ok = false;
  }
  std::cout << "report written to " << out_dir << "\n";
  return ok ? 0 : 1;
}

int cmd_compare(const std::string& scenario_path, const std::string& counts_spec,
                const std::string& out_dir) {
  auto sc = sliceprov::load_scenario(scenario_path);
  if (sc.slices.empty()) throw std::invalid_argument("scenario has no slices");
  auto counts = parse_counts(counts_spec);
  sliceprov::ProvisionOptions opts;
  opts.lambda = sc.lambda;
  opts.epsilon = sc.epsilon;
  opts.solver = sc.solver;
  auto rows = sliceprov::run_comparison(sc.infra, sc.slices[0], counts, opts);
  fs::create_directories(out_dir);
  std::ofstream out(fs::path(out_dir) / "embedding.csv");
  out << "method,sfc_count,cost,time_s,status\n";
  bool ok = true;
  for (const auto& r : rows) {
    out << r.method << ',' << r.sfc_count << ',' << r.cost << ',' << r.time_s << ',' << r.status
        << '\n';
    std::cout << r.method << " n=" << r.sfc_count << ": " << r.status << " cost " << r.cost
              << " time " << r.time_s << "s\n";
    if (r.status != "optimal" && r.status.rfind("infeasible", 0) != 0) ok = false;
  }
  std::cout << "report written to " << out_dir << "\n";
  return ok ? 0 : 1;
}

int cmd_check(const std::string& solution_path, const std::string& scenario_path) {
  auto sc = sliceprov::load_scenario(scenario_path);
  std::ifstream in(solution_path);
  if (!in) throw std::runtime_error("cannot open solution: " + solution_path);
  json doc;
  in >> doc;
  // Accept either one solution object or the solutions.json run array.
  std::vector<json> sols;
  if (doc.is_array()) {
    for (const auto& e : doc)
      if (e.contains("solution")) sols.push_back(e.at("solution"));
  } else {
    sols.push_back(doc.contains("solution") ? doc.at("solution") : doc);
  }
  if (sols.empty()) {
    std::cout << "no solved runs in " << solution_path << "\n";
    return 1;
  }
  int bad = 0;
  for (const auto& js : sols) {
    auto sol = sliceprov::solution_from_json(js);
    auto violations = sliceprov::verify_solution(sc.infra, sc.slices, sc.rates, sol, sc.lambda);
    std::cout << to_string(sol.variant) << ": "
              << (violations.empty() ? "ok" : std::to_string(violations.size()) + " violation(s)")
              << "\n";
    for (const auto& v : violations)
      std::cout << "  " << v.family << " " << v.detail << " amount " << v.amount << "\n";
    bad += !violations.empty();
  }
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverage-aware slice resource provisioning"};
  app.require_subcommand(1);

  std::string scenario, out_dir = "out", variants, counts = "2..10", solution;
  double lambda = 0.0;
  bool lambda_set = false;

  auto* prov = app.add_subcommand("provision", "provision all requested variants");
  prov->add_option("--scenario", scenario, "scenario JSON")->required();
  prov->add_option("--variants", variants, "comma-separated variant list (overrides scenario)");
  prov->add_option("--lambda", lambda, "rate-discount weight (overrides scenario)")
      ->each([&](const std::string&) { lambda_set = true; });
  prov->add_option("--out", out_dir, "output directory");

  auto* cmp = app.add_subcommand("compare-embedding",
                                 "provision-then-embed vs direct embedding sweep");
  cmp->add_option("--scenario", scenario, "scenario JSON")->required();
  cmp->add_option("--sfc-counts", counts, "counts, e.g. 2..10 or 2,4,8");
  cmp->add_option("--out", out_dir, "output directory");

  auto* chk = app.add_subcommand("check", "re-verify a serialized solution");
  chk->add_option("--solution", solution, "solution JSON (single or solutions.json)")->required();
  chk->add_option("--scenario", scenario, "scenario JSON")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (prov->parsed())
      return cmd_provision(scenario, variants, lambda_set ? &lambda : nullptr, out_dir);
    if (cmp->parsed()) return cmd_compare(scenario, counts, out_dir);
    return cmd_check(solution, scenario);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
