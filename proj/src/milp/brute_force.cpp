#include "sliceprov/milp/brute_force.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sliceprov::milp {

namespace {

constexpr double kEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Standard-form LP: min c.x s.t. A x = b, x >= 0, solved with a two-phase
// dense tableau and Bland's rule. Returns {status, x, objective}.
struct LpResult {
  SolveStatus status = SolveStatus::error;
  std::vector<double> x;
  double objective = 0.0;
};

LpResult solve_standard_form(std::vector<std::vector<double>> A, std::vector<double> b,
                             std::vector<double> c) {
  const size_t m = A.size();
  const size_t n = m == 0 ? c.size() : A[0].size();
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& a : A[i]) a = -a;
      b[i] = -b[i];
    }

  // tableau: rows 0..m-1 constraints (n structural + m artificial + rhs),
  // phase handled by swapping objective rows.
  const size_t total = n + m;
  std::vector<std::vector<double>> T(m, std::vector<double>(total + 1, 0.0));
  std::vector<int> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1.0;
    T[i][total] = b[i];
    basis[i] = static_cast<int>(n + i);
  }

  auto pivot = [&](size_t r, size_t col) {
    double p = T[r][col];
    for (auto& v : T[r]) v /= p;
    for (size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = T[i][col];
      if (f == 0.0) continue;
      for (size_t j = 0; j <= total; ++j) T[i][j] -= f * T[r][j];
    }
    basis[r] = static_cast<int>(col);
  };

  // Runs simplex on reduced costs for objective `obj` restricted to columns
  // [0, limit). Returns false if unbounded.
  auto run = [&](const std::vector<double>& obj, size_t limit) -> bool {
    for (long long iter = 0;; ++iter) {
      if (iter > 50000LL * static_cast<long long>(limit + m + 1))
        throw std::runtime_error("simplex: iteration limit");
      // reduced cost of column j: obj[j] - sum_i obj[basis[i]] * T[i][j]
      int enter = -1;
      for (size_t j = 0; j < limit; ++j) {
        double rc = obj[j];
        for (size_t i = 0; i < m; ++i) rc -= obj[basis[i]] * T[i][j];
        if (rc < -kEps) {  // Bland: first improving column
          enter = static_cast<int>(j);
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = kInf;
      for (size_t i = 0; i < m; ++i) {
        if (T[i][enter] > kEps) {
          double ratio = T[i][total] / T[i][enter];
          if (ratio < best - kEps || (ratio < best + kEps &&
                                      (leave < 0 || basis[i] < basis[leave]))) {
            best = ratio;
            leave = static_cast<int>(i);
          }
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(static_cast<size_t>(leave), static_cast<size_t>(enter));
    }
  };

  // Phase 1: minimize sum of artificials.
  std::vector<double> phase1(total, 0.0);
  for (size_t j = n; j < total; ++j) phase1[j] = 1.0;
  if (!run(phase1, total)) return {SolveStatus::error, {}, 0.0};
  double art = 0.0;
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= static_cast<int>(n)) art += T[i][total];
  if (art > 1e-7) return {SolveStatus::infeasible, {}, 0.0};

  // Drive remaining artificials out of the basis where possible.
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < static_cast<int>(n)) continue;
    bool pivoted = false;
    for (size_t j = 0; j < n && !pivoted; ++j)
      if (std::abs(T[i][j]) > kEps) {
        pivot(i, j);
        pivoted = true;
      }
    // If the row is all-zero over structural columns it is redundant; the
    // artificial stays basic at value ~0, which is harmless below.
  }

  // Phase 2 over structural columns only.
  std::vector<double> phase2(total, 0.0);
  for (size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!run(phase2, n)) return {SolveStatus::unbounded, {}, 0.0};

  LpResult res;
  res.status = SolveStatus::optimal;
  res.x.assign(n, 0.0);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < static_cast<int>(n)) res.x[basis[i]] = T[i][total];
  res.objective = 0.0;
  for (size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

// Solves `model` with some variables pinned (fixed[i] = true, at value
// pin[i]); remaining variables treated as continuous.
LpResult solve_residual(const Model& model, const std::vector<bool>& fixed,
                        const std::vector<double>& pin) {
  const auto& vars = model.variables();
  // Map each free variable to standard-form columns. x = L + y (y >= 0) for
  // finite L; free variables split into y+ - y-. Finite upper bounds become
  // extra <= rows.
  struct ColMap {
    int col = -1;       // first column
    bool split = false; // true => col, col+1 are (y+, y-)
    double shift = 0.0; // x = shift + y
  };
  std::vector<ColMap> cmap(vars.size());
  size_t ncols = 0;
  size_t extra_rows = 0;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (fixed[i]) continue;
    ColMap cm;
    cm.col = static_cast<int>(ncols);
    if (vars[i].lower == -kInf) {
      cm.split = true;
      ncols += 2;
    } else {
      cm.shift = vars[i].lower;
      ncols += 1;
    }
    if (vars[i].upper != kInf) ++extra_rows;
    cmap[i] = cm;
  }

  struct Row {
    std::vector<double> a;
    Sense sense;
    double rhs;
  };
  std::vector<Row> rows;
  auto add_term = [&](std::vector<double>& a, double& rhs, int var, double coeff) {
    if (fixed[var]) {
      rhs -= coeff * pin[var];
      return;
    }
    const auto& cm = cmap[var];
    if (cm.split) {
      a[cm.col] += coeff;
      a[cm.col + 1] -= coeff;
    } else {
      a[cm.col] += coeff;
      rhs -= coeff * cm.shift;
    }
  };

  for (const auto& con : model.constraints()) {
    Row r{std::vector<double>(ncols, 0.0), con.sense, con.rhs};
    for (const auto& t : con.terms) add_term(r.a, r.rhs, t.var, t.coeff);
    rows.push_back(std::move(r));
  }
  for (size_t i = 0; i < vars.size(); ++i) {
    if (fixed[i] || vars[i].upper == kInf) continue;
    Row r{std::vector<double>(ncols, 0.0), Sense::le, vars[i].upper};
    add_term(r.a, r.rhs, static_cast<int>(i), 1.0);
    rows.push_back(std::move(r));
  }

  // Slacks for inequality rows, then hand to the equality-form solver.
  size_t nslack = 0;
  for (const auto& r : rows)
    if (r.sense != Sense::eq) ++nslack;
  const size_t width = ncols + nslack;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  size_t slack = ncols;
  for (const auto& r : rows) {
    std::vector<double> a(width, 0.0);
    std::copy(r.a.begin(), r.a.end(), a.begin());
    if (r.sense == Sense::le) a[slack++] = 1.0;
    if (r.sense == Sense::ge) a[slack++] = -1.0;
    A.push_back(std::move(a));
    b.push_back(r.rhs);
  }

  std::vector<double> c(width, 0.0);
  double const_obj = 0.0;
  for (size_t i = 0; i < vars.size(); ++i) {
    double coeff = model.objective()[i];
    if (coeff == 0.0) continue;
    if (fixed[i]) {
      const_obj += coeff * pin[i];
    } else if (cmap[i].split) {
      c[cmap[i].col] += coeff;
      c[cmap[i].col + 1] -= coeff;
    } else {
      c[cmap[i].col] += coeff;
      const_obj += coeff * cmap[i].shift;
    }
  }

  LpResult lp = solve_standard_form(std::move(A), std::move(b), c);
  if (lp.status != SolveStatus::optimal) return lp;

  LpResult out;
  out.status = SolveStatus::optimal;
  out.x.assign(vars.size(), 0.0);
  for (size_t i = 0; i < vars.size(); ++i) {
    if (fixed[i]) {
      out.x[i] = pin[i];
    } else if (cmap[i].split) {
      out.x[i] = lp.x[cmap[i].col] - lp.x[cmap[i].col + 1];
    } else {
      out.x[i] = cmap[i].shift + lp.x[cmap[i].col];
    }
  }
  out.objective = lp.objective + const_obj;
  return out;
}

}  // namespace

Solution simplex_solve(const Model& m) {
  std::vector<bool> fixed(m.variables().size(), false);
  std::vector<double> pin(m.variables().size(), 0.0);
  auto t0 = std::chrono::steady_clock::now();
  LpResult lp = solve_residual(m, fixed, pin);
  Solution s;
  s.status = lp.status;
  s.assignment = lp.x;
  s.objective_value = lp.objective;
  s.solve_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

Solution brute_force_solve(const Model& m, long long max_combinations) {
  m.validate();
  const auto& vars = m.variables();
  std::vector<int> int_vars;
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].kind != VarKind::continuous) int_vars.push_back(static_cast<int>(i));

  // Count combinations (with overflow guard).
  long long combos = 1;
  std::vector<long long> lo(int_vars.size()), hi(int_vars.size());
  for (size_t k = 0; k < int_vars.size(); ++k) {
    const auto& v = vars[int_vars[k]];
    if (v.lower == -kInf || v.upper == kInf)
      throw std::invalid_argument("brute_force_solve: unbounded integer variable " + v.name);
    lo[k] = static_cast<long long>(std::ceil(v.lower - kEps));
    hi[k] = static_cast<long long>(std::floor(v.upper + kEps));
    if (hi[k] < lo[k]) return {SolveStatus::infeasible, {}, 0.0, 0.0, "empty integer domain"};
    long long range = hi[k] - lo[k] + 1;
    if (combos > max_combinations / range + 1)
      throw std::invalid_argument("brute_force_solve: instance too large");
    combos *= range;
  }
  if (combos > max_combinations)
    throw std::invalid_argument("brute_force_solve: instance too large");

  auto t0 = std::chrono::steady_clock::now();
  std::vector<bool> fixed(vars.size(), false);
  for (int i : int_vars) fixed[i] = true;
  std::vector<double> pin(vars.size(), 0.0);
  std::vector<long long> cur(lo);

  Solution best;
  best.status = SolveStatus::infeasible;
  bool any = false;
  for (long long it = 0; it < combos; ++it) {
    for (size_t k = 0; k < int_vars.size(); ++k) pin[int_vars[k]] = static_cast<double>(cur[k]);
    LpResult lp = solve_residual(m, fixed, pin);
    if (lp.status == SolveStatus::unbounded) {
      best.status = SolveStatus::unbounded;
      best.assignment.clear();
      best.message = "unbounded residual";
      break;
    }
    if (lp.status == SolveStatus::optimal &&
        (!any || lp.objective < best.objective_value - 1e-12)) {
      any = true;
      best.status = SolveStatus::optimal;
      best.assignment = lp.x;
      best.objective_value = lp.objective;
    }
    // increment mixed-radix counter
    for (size_t k = 0; k < int_vars.size(); ++k) {
      if (++cur[k] <= hi[k]) break;
      cur[k] = lo[k];
    }
  }
  best.solve_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return best;
}

}  // namespace sliceprov::milp
