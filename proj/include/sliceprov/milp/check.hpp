#pragma once

#include <string>
#include <vector>

#include "sliceprov/milp/model.hpp"

namespace sliceprov::milp {

struct Violation {
  std::string name;      // constraint or variable name
  double amount = 0.0;   // how far past the tolerance
  std::string detail;
};

// Checks every constraint, variable bound and integrality requirement against
// the assignment. Empty result <=> feasible within tol. Throws if the
// assignment does not cover all variables.
std::vector<Violation> check_feasibility(const Model& m, const std::vector<double>& assignment,
                                         double tol = 1e-6);

}  // namespace sliceprov::milp
