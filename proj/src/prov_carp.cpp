#include <cmath>
#include <stdexcept>

#include "prov_internal.hpp"

namespace sliceprov {

using milp::Model;
using milp::Solution;
using milp::SolveStatus;

namespace {

bool usable(SolveStatus s) {
  return s == SolveStatus::optimal || s == SolveStatus::feasible;
}

ProblemStats stats_of(const std::string& name, const Model& m, const Solution& sol) {
  ProblemStats st;
  st.name = name;
  st.variables = static_cast<int>(m.variables().size());
  st.integer_variables = m.num_integer_variables();
  st.constraints = static_cast<int>(m.constraints().size());
  st.solve_time = sol.solve_time;
  st.status = sol.status;
  return st;
}

}  // namespace

RadioShares extract_radio(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                          const std::vector<int>& subset, const std::vector<SliceRateTable>& rates,
                          const Model& m, const Solution& sol) {
  RadioShares out(slices.size());
  const int n_rrh = static_cast<int>(infra.rrh_indices().size());
  for (int s : subset) {
    const auto rc = detail::slice_radio_coeffs(infra, slices[s], rates[s]);
    SliceRadioShares sh;
    sh.n_rrh = n_rrh;
    sh.n_cells = rates[s].n_cells;
    sh.eta_up.assign(static_cast<size_t>(n_rrh) * sh.n_cells, 0.0);
    sh.eta_down.assign(static_cast<size_t>(n_rrh) * sh.n_cells, 0.0);
    sh.used.assign(n_rrh, 0);
    for (int r = 0; r < n_rrh; ++r) {
      sh.used[r] = sol.value(m, detail::etat_name(s, r)) > 0.5;
      for (int q = 0; q < sh.n_cells; ++q) {
        const double eta = std::max(0.0, sol.value(m, detail::eta_name(s, r, q)));
        const double up = rc.has_radio ? rc.split_up[r * sh.n_cells + q] : 0.0;
        sh.eta_up[r * sh.n_cells + q] = eta * up;
        sh.eta_down[r * sh.n_cells + q] = eta * (1.0 - up);
      }
    }
    out[s] = std::move(sh);
  }
  return out;
}

WiredShares extract_wired(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                          const std::vector<int>& subset, const Model& m, const Solution& sol) {
  WiredShares out(slices.size());
  const int n_nodes = static_cast<int>(infra.nodes().size());
  const int n_links = static_cast<int>(infra.links().size());
  for (int s : subset) {
    const auto& srd = slices[s].srd;
    SliceWiredShares sh;
    sh.n_nodes = n_nodes;
    sh.n_srd_nodes = static_cast<int>(srd.nodes.size());
    sh.n_links = n_links;
    sh.n_srd_links = static_cast<int>(srd.links.size());
    const size_t nv = static_cast<size_t>(n_nodes) * sh.n_srd_nodes;
    sh.compute.assign(nv, 0.0);
    sh.storage.assign(nv, 0.0);
    sh.vnf_count_compute.assign(nv, 0.0);
    sh.vnf_count_storage.assign(nv, 0.0);
    sh.used.assign(n_nodes, 0);
    sh.link.assign(static_cast<size_t>(n_links) * sh.n_srd_links, 0.0);
    for (int i = 0; i < n_nodes; ++i) {
      sh.used[i] = sol.value(m, detail::pht_name(s, i)) > 0.5;
      for (int v = 0; v < sh.n_srd_nodes; ++v) {
        const size_t at = static_cast<size_t>(i) * sh.n_srd_nodes + v;
        sh.compute[at] = std::max(0.0, sol.value(m, detail::phn_name('c', s, i, v)));
        sh.storage[at] = std::max(0.0, sol.value(m, detail::phn_name('s', s, i, v)));
        for (char n : {'c', 's'}) {
          int idx = m.variable_index(detail::kappa_name(n, s, i, v));
          if (idx >= 0) {
            auto& counts = n == 'c' ? sh.vnf_count_compute : sh.vnf_count_storage;
            counts[at] = std::round(sol.assignment[idx]);
          }
        }
      }
    }
    for (int l = 0; l < n_links; ++l)
      for (int e = 0; e < sh.n_srd_links; ++e)
        sh.link[static_cast<size_t>(l) * sh.n_srd_links + e] =
            std::max(0.0, sol.value(m, detail::phb_name(s, l, e)));
    out[s] = std::move(sh);
  }
  return out;
}

double radio_cost(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                  const std::vector<SliceRateTable>& rates, const RadioShares& radio,
                  double lambda) {
  const auto rrhs = infra.rrh_indices();
  double cost = 0.0;
  for (size_t s = 0; s < slices.size(); ++s) {
    if (s >= radio.size() || radio[s].eta_up.empty()) continue;
    const auto& sh = radio[s];
    for (size_t r = 0; r < rrhs.size(); ++r) {
      const auto& node = infra.nodes()[rrhs[r]];
      if (sh.used[r]) cost += node.fixed_cost;
      for (int q = 0; q < sh.n_cells; ++q) {
        const int ri = static_cast<int>(r);
        cost += node.rb_capacity * node.rb_cost * sh.combined(ri, q);
        cost -= lambda * node.rb_capacity *
                (sh.up(ri, q) * rates[s].b_up(ri, q) + sh.down(ri, q) * rates[s].b_down(ri, q));
      }
    }
  }
  return cost;
}

double wired_cost(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                  const WiredShares& wired) {
  double cost = 0.0;
  for (size_t s = 0; s < slices.size(); ++s) {
    if (s >= wired.size() || wired[s].compute.empty()) continue;
    const auto& sh = wired[s];
    for (int i = 0; i < sh.n_nodes; ++i) {
      const auto& node = infra.nodes()[i];
      if (node.kind != NodeKind::rrh && sh.used[i]) cost += node.fixed_cost;
      for (int v = 0; v < sh.n_srd_nodes; ++v) {
        cost += node.compute_capacity * node.compute_cost * sh.phi_c(i, v);
        cost += node.storage_capacity * node.storage_cost * sh.phi_s(i, v);
      }
    }
    for (int l = 0; l < sh.n_links; ++l) {
      const auto& link = infra.links()[l];
      for (int e = 0; e < sh.n_srd_links; ++e)
        cost += link.bandwidth * link.unit_cost * sh.phi_b(l, e);
    }
  }
  return cost;
}

ProvisioningSolution carp(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                          const std::vector<SliceRateTable>& rates, Variant variant,
                          const ProvisionOptions& opts) {
  if (slices.empty()) throw std::invalid_argument("carp: no slices");
  if (rates.size() != slices.size())
    throw std::invalid_argument("carp: rate table count does not match slice count");

  ProvisioningSolution out;
  out.variant = variant;
  std::vector<int> all(slices.size());
  for (size_t s = 0; s < slices.size(); ++s) all[s] = static_cast<int>(s);
  const auto rrhs = infra.rrh_indices();

  if (variant == Variant::jrn) {
    Model m = build_jrn(infra, slices, rates, opts.lambda, opts.epsilon);
    auto sol = milp::solve(m, opts.solver);
    out.problems.push_back(stats_of("jrn", m, sol));
    if (!usable(sol.status)) throw InfeasibleStep("joint", "", sol.status);
    out.radio = extract_radio(infra, slices, all, rates, m, sol);
    out.wired = extract_wired(infra, slices, all, m, sol);
  } else {
    const bool joint_radio = variant == Variant::jr_sn || variant == Variant::jr_jn;
    const bool joint_wired = variant == Variant::sr_jn || variant == Variant::jr_jn;

    out.radio.assign(slices.size(), {});
    if (joint_radio) {
      Model m = build_rp(infra, slices, all, rates, opts.lambda, {}, opts.epsilon);
      auto sol = milp::solve(m, opts.solver);
      out.problems.push_back(stats_of("rp", m, sol));
      if (!usable(sol.status)) throw InfeasibleStep("radio", "", sol.status);
      out.radio = extract_radio(infra, slices, all, rates, m, sol);
    } else {
      std::vector<double> prior(rrhs.size(), 0.0);
      for (int s : all) {
        Model m = build_rp(infra, slices, {s}, rates, opts.lambda, prior, opts.epsilon);
        auto sol = milp::solve(m, opts.solver);
        out.problems.push_back(stats_of("rp[" + std::to_string(s) + "]", m, sol));
        if (!usable(sol.status)) throw InfeasibleStep("radio", slices[s].id, sol.status);
        auto shares = extract_radio(infra, slices, {s}, rates, m, sol);
        for (size_t r = 0; r < rrhs.size(); ++r)
          for (int q = 0; q < shares[s].n_cells; ++q)
            prior[r] += shares[s].combined(static_cast<int>(r), q);
        out.radio[s] = std::move(shares[s]);
      }
    }

    out.wired.assign(slices.size(), {});
    if (joint_wired) {
      Model m = build_np(infra, slices, all, out.radio, rates, WiredPrior{}, opts.epsilon);
      auto sol = milp::solve(m, opts.solver);
      out.problems.push_back(stats_of("np", m, sol));
      if (!usable(sol.status)) throw InfeasibleStep("wired", "", sol.status);
      out.wired = extract_wired(infra, slices, all, m, sol);
    } else {
      WiredPrior prior;
      prior.node_compute.assign(infra.nodes().size(), 0.0);
      prior.node_storage.assign(infra.nodes().size(), 0.0);
      prior.link.assign(infra.links().size(), 0.0);
      for (int s : all) {
        Model m = build_np(infra, slices, {s}, out.radio, rates, prior, opts.epsilon);
        auto sol = milp::solve(m, opts.solver);
        out.problems.push_back(stats_of("np[" + std::to_string(s) + "]", m, sol));
        if (!usable(sol.status)) throw InfeasibleStep("wired", slices[s].id, sol.status);
        auto shares = extract_wired(infra, slices, {s}, m, sol);
        const auto& sh = shares[s];
        for (int i = 0; i < sh.n_nodes; ++i)
          for (int v = 0; v < sh.n_srd_nodes; ++v) {
            prior.node_compute[i] += sh.phi_c(i, v);
            prior.node_storage[i] += sh.phi_s(i, v);
          }
        for (int l = 0; l < sh.n_links; ++l)
          for (int e = 0; e < sh.n_srd_links; ++e) prior.link[l] += sh.phi_b(l, e);
        out.wired[s] = std::move(shares[s]);
      }
    }
  }

  out.radio_cost = radio_cost(infra, slices, rates, out.radio, opts.lambda);
  out.wired_cost = wired_cost(infra, slices, out.wired);
  out.total_cost = out.radio_cost + out.wired_cost;
  return out;
}

std::vector<SliceSpec> scale_demands(const std::vector<SliceSpec>& slices, double delta) {
  if (delta < 0) throw std::invalid_argument("scale_demands: negative factor");
  auto out = slices;
  for (auto& s : out) {
    for (auto& n : s.srd.nodes) {
      n.compute_demand *= delta;
      n.storage_demand *= delta;
      n.rate_up_demand *= delta;
      n.rate_down_demand *= delta;
    }
    for (auto& l : s.srd.links) l.bandwidth_demand *= delta;
    s.coverage.rate_up *= delta;
    s.coverage.rate_down *= delta;
  }
  return out;
}

DeltaResult delta_scaling(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                          const std::vector<SliceRateTable>& rates, Variant variant,
                          const ProvisionOptions& opts, double delta_tol) {
  try {
    return {1.0, carp(infra, slices, rates, variant, opts)};
  } catch (const InfeasibleStep&) {
  }
  double lo = 0.0, hi = 1.0;
  bool have_best = false;
  DeltaResult best;
  while (hi - lo > delta_tol) {
    const double mid = 0.5 * (lo + hi);
    try {
      auto sol = carp(infra, scale_demands(slices, mid), rates, variant, opts);
      best = {mid, std::move(sol)};
      have_best = true;
      lo = mid;
    } catch (const InfeasibleStep&) {
      hi = mid;
    }
  }
  if (have_best) return best;
  // Nothing between 0 and 1 worked at the bisection grid; give the smallest
  // meaningful fraction one last chance before reporting failure.
  return {delta_tol, carp(infra, scale_demands(slices, delta_tol), rates, variant, opts)};
}

}  // namespace sliceprov
