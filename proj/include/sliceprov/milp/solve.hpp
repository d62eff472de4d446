#pragma once

#include <string>

#include "sliceprov/milp/model.hpp"

namespace sliceprov::milp {

struct SolveOptions {
  double time_limit = 600.0;  // seconds
  double mip_gap = 1e-6;      // relative
  int threads = 1;
  int seed = 0;
  // Backend key; empty means: $SLICEPROV_SOLVER if set, else "scipy-highs".
  // Known backends: "scipy-highs" (HiGHS via a python subprocess),
  // "brute-force" (exhaustive oracle, tiny models only).
  std::string backend;
};

// Solves the model (minimization). Throws std::runtime_error if the backend
// is unavailable or misbehaves; solver-reported infeasibility/unboundedness
// comes back through Solution::status.
Solution solve(const Model& m, const SolveOptions& opts = {});

}  // namespace sliceprov::milp
