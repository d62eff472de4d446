#include "sliceprov/milp/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sliceprov::milp {

int Model::add_variable(const std::string& name, VarKind kind, double lower, double upper) {
  if (var_index_.count(name)) throw std::invalid_argument("duplicate variable: " + name);
  if (lower > upper) throw std::invalid_argument("empty bound interval for " + name);
  int idx = static_cast<int>(variables_.size());
  variables_.push_back({name, kind, lower, upper});
  objective_.push_back(0.0);
  var_index_[name] = idx;
  return idx;
}

void Model::add_constraint(const std::string& name, std::vector<Term> terms, Sense sense,
                           double rhs) {
  std::map<int, double> merged;
  for (const auto& t : terms) {
    if (t.var < 0 || t.var >= static_cast<int>(variables_.size()))
      throw std::invalid_argument("constraint " + name + " references unknown variable");
    merged[t.var] += t.coeff;
  }
  Constraint c;
  c.name = name;
  c.sense = sense;
  c.rhs = rhs;
  for (const auto& [v, coef] : merged)
    if (coef != 0.0) c.terms.push_back({v, coef});
  constraints_.push_back(std::move(c));
}

void Model::set_objective_coeff(int var, double coeff) { objective_.at(var) = coeff; }

void Model::add_objective_coeff(int var, double coeff) { objective_.at(var) += coeff; }

int Model::variable_index(const std::string& name) const {
  auto it = var_index_.find(name);
  return it == var_index_.end() ? -1 : it->second;
}

int Model::num_integer_variables() const {
  int n = 0;
  for (const auto& v : variables_)
    if (v.kind != VarKind::continuous) ++n;
  return n;
}

double Model::evaluate_objective(const std::vector<double>& x) const {
  double obj = 0.0;
  for (size_t i = 0; i < objective_.size(); ++i) obj += objective_[i] * x[i];
  return obj;
}

double Model::constraint_activity(const Constraint& c, const std::vector<double>& x) const {
  double a = 0.0;
  for (const auto& t : c.terms) a += t.coeff * x[t.var];
  return a;
}

void Model::validate() const {
  for (const auto& c : constraints_)
    for (const auto& t : c.terms)
      if (t.var < 0 || t.var >= static_cast<int>(variables_.size()))
        throw std::logic_error("constraint " + c.name + " has dangling term");
  for (const auto& v : variables_)
    if (!std::isfinite(v.lower) && v.lower > 0)
      throw std::logic_error("bad bounds on " + v.name);
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::timeout: return "timeout";
    case SolveStatus::error: return "error";
  }
  return "unknown";
}

double Solution::value(const Model& m, const std::string& name) const {
  int idx = m.variable_index(name);
  if (idx < 0) throw std::invalid_argument("no such variable: " + name);
  return assignment.at(idx);
}

}  // namespace sliceprov::milp
