#pragma once

#include "sliceprov/milp/model.hpp"

namespace sliceprov::milp {

// Exhaustive oracle for tiny instances: enumerates every assignment of the
// integer/binary variables and solves the continuous residual exactly with a
// two-phase simplex. Throws if the enumeration would exceed max_combinations.
Solution brute_force_solve(const Model& m, long long max_combinations = 2'000'000);

// Exact LP solve over the continuous relaxation structure of `m`, treating
// every variable as continuous (used internally and for pure-LP models).
Solution simplex_solve(const Model& m);

}  // namespace sliceprov::milp
