#include "sliceprov/milp/check.hpp"

#include <cmath>
#include <stdexcept>

namespace sliceprov::milp {

std::vector<Violation> check_feasibility(const Model& m, const std::vector<double>& assignment,
                                         double tol) {
  if (assignment.size() != m.variables().size())
    throw std::invalid_argument("check_feasibility: assignment does not cover all variables");
  std::vector<Violation> out;
  for (size_t i = 0; i < m.variables().size(); ++i) {
    const auto& v = m.variables()[i];
    double x = assignment[i];
    if (x < v.lower - tol)
      out.push_back({v.name, v.lower - x, "below lower bound"});
    if (x > v.upper + tol)
      out.push_back({v.name, x - v.upper, "above upper bound"});
    if (v.kind != VarKind::continuous) {
      double frac = std::abs(x - std::round(x));
      if (frac > tol) out.push_back({v.name, frac, "not integral"});
    }
  }
  for (const auto& c : m.constraints()) {
    double a = m.constraint_activity(c, assignment);
    double gap = 0.0;
    switch (c.sense) {
      case Sense::le: gap = a - c.rhs; break;
      case Sense::ge: gap = c.rhs - a; break;
      case Sense::eq: gap = std::abs(a - c.rhs); break;
    }
    if (gap > tol) out.push_back({c.name, gap, "constraint violated"});
  }
  return out;
}

}  // namespace sliceprov::milp
