#pragma once

#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace sliceprov::milp {

enum class VarKind { continuous, integer, binary };
enum class Sense { le, eq, ge };

struct Variable {
  std::string name;
  VarKind kind = VarKind::continuous;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

struct Term {
  int var = -1;
  double coeff = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::le;
  double rhs = 0.0;
};

class Model {
 public:
  int add_variable(const std::string& name, VarKind kind, double lower, double upper);
  int add_continuous(const std::string& name, double lower, double upper) {
    return add_variable(name, VarKind::continuous, lower, upper);
  }
  int add_binary(const std::string& name) { return add_variable(name, VarKind::binary, 0.0, 1.0); }
  int add_integer(const std::string& name, double lower, double upper) {
    return add_variable(name, VarKind::integer, lower, upper);
  }

  // Terms with the same variable are merged; zero coefficients are kept out.
  void add_constraint(const std::string& name, std::vector<Term> terms, Sense sense, double rhs);

  // Objective is always minimized.
  void set_objective_coeff(int var, double coeff);
  void add_objective_coeff(int var, double coeff);
  double objective_coeff(int var) const { return objective_[var]; }

  int variable_index(const std::string& name) const;  // -1 if absent
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<double>& objective() const { return objective_; }

  int num_integer_variables() const;

  double evaluate_objective(const std::vector<double>& x) const;
  double constraint_activity(const Constraint& c, const std::vector<double>& x) const;

  void validate() const;  // term indices in range, names unique

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<double> objective_;
  std::unordered_map<std::string, int> var_index_;
};

enum class SolveStatus { optimal, feasible, infeasible, unbounded, timeout, error };

std::string to_string(SolveStatus s);

struct Solution {
  SolveStatus status = SolveStatus::error;
  std::vector<double> assignment;  // aligned with model.variables()
  double objective_value = 0.0;
  double solve_time = 0.0;  // seconds
  std::string message;

  bool has_assignment() const { return !assignment.empty(); }
  double value(const Model& m, const std::string& name) const;
};

}  // namespace sliceprov::milp
