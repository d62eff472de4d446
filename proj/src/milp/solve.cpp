#include "sliceprov/milp/solve.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sliceprov/milp/brute_force.hpp"

namespace sliceprov::milp {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kInfSentinel = 1e30;

const char* kRunner = R"PY(
import json, sys
import numpy as np
from scipy import sparse
from scipy.optimize import milp, LinearConstraint, Bounds

INF = 1e30

def unsent(v):
    if v >= INF:
        return np.inf
    if v <= -INF:
        return -np.inf
    return v

def main():
    with open(sys.argv[1]) as f:
        m = json.load(f)
    n = len(m["c"])
    c = np.asarray(m["c"], dtype=float)
    lb = np.array([unsent(v) for v in m["lb"]])
    ub = np.array([unsent(v) for v in m["ub"]])
    integrality = np.asarray(m["integrality"], dtype=int)

    rows, cols, vals, clo, cup = [], [], [], [], []
    for i, con in enumerate(m["constraints"]):
        for idx, coef in con["terms"]:
            rows.append(i)
            cols.append(idx)
            vals.append(coef)
        rhs = con["rhs"]
        if con["sense"] == "le":
            clo.append(-np.inf)
            cup.append(rhs)
        elif con["sense"] == "ge":
            clo.append(rhs)
            cup.append(np.inf)
        else:
            clo.append(rhs)
            cup.append(rhs)
    ncon = len(m["constraints"])
    A = sparse.csr_matrix((vals, (rows, cols)), shape=(ncon, n))

    kwargs = dict(
        c=c,
        integrality=integrality,
        bounds=Bounds(lb, ub),
        options={
            "time_limit": m["time_limit"],
            "mip_rel_gap": m["mip_gap"],
            "presolve": True,
            "disp": False,
        },
    )
    if ncon:
        kwargs["constraints"] = LinearConstraint(A, clo, cup)
    res = milp(**kwargs)

    out = {
        "scipy_status": int(res.status),
        "message": str(res.message),
        "objective": float(res.fun) if res.fun is not None else None,
        "x": [float(v) for v in res.x] if res.x is not None else None,
    }
    with open(sys.argv[2], "w") as f:
        json.dump(out, f)

main()
)PY";

double sentinel(double v) {
  if (v == std::numeric_limits<double>::infinity()) return kInfSentinel;
  if (v == -std::numeric_limits<double>::infinity()) return -kInfSentinel;
  return v;
}

std::string shell_quote(const fs::path& p) { return "'" + p.string() + "'"; }

struct TempDir {
  fs::path path;
  TempDir() {
    auto base = fs::temp_directory_path();
    for (int i = 0; i < 100; ++i) {
      auto cand = base / ("sliceprov-" + std::to_string(std::rand()) + "-" + std::to_string(i));
      std::error_code ec;
      if (fs::create_directory(cand, ec)) {
        path = cand;
        return;
      }
    }
    throw std::runtime_error("could not create temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

Solution solve_scipy_highs(const Model& m, const SolveOptions& opts) {
  json jm;
  jm["time_limit"] = opts.time_limit;
  jm["mip_gap"] = opts.mip_gap;
  auto& c = jm["c"] = json::array();
  auto& lb = jm["lb"] = json::array();
  auto& ub = jm["ub"] = json::array();
  auto& integrality = jm["integrality"] = json::array();
  for (size_t i = 0; i < m.variables().size(); ++i) {
    const auto& v = m.variables()[i];
    c.push_back(m.objective()[i]);
    lb.push_back(sentinel(v.lower));
    ub.push_back(sentinel(v.upper));
    integrality.push_back(v.kind == VarKind::continuous ? 0 : 1);
  }
  auto& cons = jm["constraints"] = json::array();
  for (const auto& con : m.constraints()) {
    json jc;
    auto& terms = jc["terms"] = json::array();
    for (const auto& t : con.terms) terms.push_back(json::array({t.var, t.coeff}));
    jc["sense"] = con.sense == Sense::le ? "le" : con.sense == Sense::ge ? "ge" : "eq";
    jc["rhs"] = con.rhs;
    cons.push_back(std::move(jc));
  }

  TempDir tmp;
  const fs::path script = tmp.path / "runner.py";
  const fs::path in = tmp.path / "model.json";
  const fs::path out = tmp.path / "result.json";
  const fs::path err = tmp.path / "stderr.txt";
  std::ofstream(script) << kRunner;
  std::ofstream(in) << jm.dump();

  std::string cmd = "python3 " + shell_quote(script) + " " + shell_quote(in) + " " +
                    shell_quote(out) + " 2> " + shell_quote(err);
  auto t0 = std::chrono::steady_clock::now();
  int rc = std::system(cmd.c_str());
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (rc != 0 || !fs::exists(out)) {
    std::stringstream msg;
    msg << "scipy-highs backend failed (exit " << rc << ")";
    std::ifstream ef(err);
    std::string line;
    while (std::getline(ef, line)) msg << "\n" << line;
    throw std::runtime_error(msg.str());
  }

  json jr;
  std::ifstream(out) >> jr;
  Solution s;
  s.solve_time = wall;
  s.message = jr.value("message", "");
  int status = jr.value("scipy_status", 4);
  switch (status) {
    case 0: s.status = SolveStatus::optimal; break;
    case 1: s.status = SolveStatus::timeout; break;  // iteration or time limit
    case 2: s.status = SolveStatus::infeasible; break;
    case 3: s.status = SolveStatus::unbounded; break;
    default: s.status = SolveStatus::error; break;
  }
  if (!jr["x"].is_null()) {
    s.assignment = jr["x"].get<std::vector<double>>();
    if (s.assignment.size() != m.variables().size())
      throw std::runtime_error("scipy-highs backend returned malformed assignment");
    if (s.status == SolveStatus::timeout) s.status = SolveStatus::feasible;
  }
  if (!jr["objective"].is_null()) s.objective_value = jr["objective"].get<double>();
  return s;
}

}  // namespace

Solution solve(const Model& m, const SolveOptions& opts) {
  m.validate();
  if (m.variables().empty()) {
    Solution s;
    s.status = SolveStatus::optimal;
    for (const auto& c : m.constraints()) {
      const bool ok = c.sense == Sense::le   ? 0.0 <= c.rhs + 1e-12
                      : c.sense == Sense::ge ? 0.0 >= c.rhs - 1e-12
                                             : std::abs(c.rhs) <= 1e-12;
      if (!ok) s.status = SolveStatus::infeasible;
    }
    return s;
  }
  std::string backend = opts.backend;
  if (backend.empty()) {
    const char* env = std::getenv("SLICEPROV_SOLVER");
    backend = env && *env ? env : "scipy-highs";
  }
  if (backend == "scipy-highs") return solve_scipy_highs(m, opts);
  if (backend == "brute-force") return brute_force_solve(m);
  throw std::runtime_error("unknown solver backend: " + backend);
}

}  // namespace sliceprov::milp
