#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sliceprov/infrastructure.hpp"
#include "sliceprov/milp/model.hpp"
#include "sliceprov/milp/solve.hpp"
#include "sliceprov/radio.hpp"
#include "sliceprov/slice.hpp"

namespace sliceprov {

// jrn solves one model over all radio and wired variables; the two-step
// variants solve a radio problem (joint or per-slice sequential) followed by
// a wired problem (joint or sequential).
enum class Variant { jrn, sr_sn, sr_jn, jr_sn, jr_jn };
std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

// Radio share assignment of one slice. The model works with one combined
// share per (rrh, cell); the up/down components are recovered through the
// up/down proportionality relation and stored separately here.
struct SliceRadioShares {
  int n_rrh = 0;
  int n_cells = 0;
  std::vector<double> eta_up;    // row-major [rrh][cell]
  std::vector<double> eta_down;
  std::vector<char> used;        // [rrh] indicator

  double up(int r, int q) const { return eta_up[r * n_cells + q]; }
  double down(int r, int q) const { return eta_down[r * n_cells + q]; }
  double combined(int r, int q) const { return up(r, q) + down(r, q); }
};
using RadioShares = std::vector<SliceRadioShares>;  // indexed like the slice list

struct SliceWiredShares {
  int n_nodes = 0;      // infra nodes
  int n_srd_nodes = 0;
  int n_links = 0;      // directed infra links, loopbacks included
  int n_srd_links = 0;
  std::vector<double> compute;            // [i][v] shares
  std::vector<double> storage;
  std::vector<double> vnf_count_compute;  // [i][v], 0 where no counter exists
  std::vector<double> vnf_count_storage;
  std::vector<char> used;                 // [i] indicator
  std::vector<double> link;               // [l][e] shares

  double phi_c(int i, int v) const { return compute[i * n_srd_nodes + v]; }
  double phi_s(int i, int v) const { return storage[i * n_srd_nodes + v]; }
  double phi_b(int l, int e) const { return link[l * n_srd_links + e]; }
};
using WiredShares = std::vector<SliceWiredShares>;

struct ProblemStats {
  std::string name;
  int variables = 0;
  int integer_variables = 0;
  int constraints = 0;
  double solve_time = 0.0;
  milp::SolveStatus status = milp::SolveStatus::error;
};

struct ProvisioningSolution {
  Variant variant = Variant::jrn;
  RadioShares radio;
  WiredShares wired;
  double radio_cost = 0.0;
  double wired_cost = 0.0;
  double total_cost = 0.0;
  std::vector<ProblemStats> problems;
};

struct ProvisionOptions {
  double lambda = 0.0;    // rate discount in the radio objective
  double epsilon = 1e-6;  // strict-inequality slack for indicator linking
  milp::SolveOptions solver;
};

// Raised when a provisioning subproblem has no solution; identifies the
// failing step so callers can fall back to demand scaling.
struct InfeasibleStep : std::runtime_error {
  std::string step;      // "radio", "wired", or "joint"
  std::string slice_id;  // empty for joint steps
  milp::SolveStatus status;

  InfeasibleStep(std::string step_, std::string slice_id_, milp::SolveStatus st);
};

// Committed-share state carried across sequential solves.
struct WiredPrior {
  std::vector<double> node_compute;  // by infra node index
  std::vector<double> node_storage;
  std::vector<double> link;          // by infra link index
};

// Radio provisioning model over the slices selected by `subset` (indices into
// `slices`). One continuous share variable per (slice, rrh, cell) named
// eta_<s>_<r>_<q> plus one binary per (slice, rrh) named etat_<s>_<r>, with r
// following infra.rrh_indices() order. RRH capacity right-hand sides are
// reduced by prior_rrh_share.
milp::Model build_rp(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                     const std::vector<int>& subset, const std::vector<SliceRateTable>& rates,
                     double lambda, const std::vector<double>& prior_rrh_share,
                     double epsilon = 1e-6);

// Wired provisioning model with radio shares held fixed. Variables:
// phc/phs_<s>_<i>_<v> node shares, pht_<s>_<i> node-use binaries,
// phb_<s>_<l>_<e> link shares, kc/ks_<s>_<i>_<v> integer instance counters.
milp::Model build_np(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                     const std::vector<int>& subset, const RadioShares& radio,
                     const std::vector<SliceRateTable>& rates, const WiredPrior& prior,
                     double epsilon = 1e-6);

// Joint model: all radio and wired variables and constraints for all slices,
// radio-wired couplings kept linear.
milp::Model build_jrn(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                      const std::vector<SliceRateTable>& rates, double lambda,
                      double epsilon = 1e-6);

// Reads the share assignment of the listed slices out of a solved model.
RadioShares extract_radio(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                          const std::vector<int>& subset, const std::vector<SliceRateTable>& rates,
                          const milp::Model& m, const milp::Solution& sol);
WiredShares extract_wired(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                          const std::vector<int>& subset, const milp::Model& m,
                          const milp::Solution& sol);

// Costs recomputed from shares (same arithmetic as the model objectives).
double radio_cost(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                  const std::vector<SliceRateTable>& rates, const RadioShares& radio,
                  double lambda);
double wired_cost(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                  const WiredShares& wired);

// Two-step (or joint) provisioning orchestrator. Sequential steps process
// slices in declared order, accumulating committed shares. Throws
// InfeasibleStep when a subproblem fails.
ProvisioningSolution carp(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                          const std::vector<SliceRateTable>& rates, Variant variant,
                          const ProvisionOptions& opts = {});

// Largest uniform demand fraction delta for which provisioning succeeds,
// found by bisection; per-instance floors are left unscaled. Throws
// InfeasibleStep if even delta_tol fails.
struct DeltaResult {
  double delta = 0.0;
  ProvisioningSolution solution;
};
DeltaResult delta_scaling(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                          const std::vector<SliceRateTable>& rates, Variant variant,
                          const ProvisionOptions& opts = {}, double delta_tol = 1.0 / 64);

// Returns copies of the slices with demands scaled by delta (node, link, and
// radio demands plus per-user rates; floors untouched).
std::vector<SliceSpec> scale_demands(const std::vector<SliceSpec>& slices, double delta);

// Re-checks every constraint family and the cost decomposition by direct
// arithmetic, independent of any model object.
struct ProvViolation {
  std::string family;
  std::string detail;
  double amount = 0.0;
};
std::vector<ProvViolation> verify_solution(const InfrastructureGraph& infra,
                                           const std::vector<SliceSpec>& slices,
                                           const std::vector<SliceRateTable>& rates,
                                           const ProvisioningSolution& sol, double lambda,
                                           double tol = 1e-6);

// Closed-form problem counts and sizes per variant. Instance counters are
// excluded from the size formulas; the wired size includes the node-use
// indicators.
struct ScenarioDims {
  int n_rrh = 0;
  int n_infra_nodes = 0;
  int n_infra_links = 0;
  std::vector<int> cells_per_slice;
  std::vector<int> srd_nodes_per_slice;
  std::vector<int> srd_links_per_slice;
};
ScenarioDims scenario_dims(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices);

struct ProblemSize {
  std::string name;
  long long variables = 0;
};
std::vector<ProblemSize> count_problem_size(Variant variant, const ScenarioDims& dims);

}  // namespace sliceprov
