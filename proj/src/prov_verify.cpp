#include <cmath>
#include <string>

#include "prov_internal.hpp"

namespace sliceprov {

namespace {

double rel_tol(double tol, double scale) { return tol * std::max(1.0, std::abs(scale)); }

}  // namespace

std::vector<ProvViolation> verify_solution(const InfrastructureGraph& infra,
                                           const std::vector<SliceSpec>& slices,
                                           const std::vector<SliceRateTable>& rates,
                                           const ProvisioningSolution& sol, double lambda,
                                           double tol) {
  std::vector<ProvViolation> out;
  auto flag = [&](const std::string& family, const std::string& detail, double amount) {
    out.push_back({family, detail, amount});
  };
  const auto rrhs = infra.rrh_indices();
  const int n_nodes = static_cast<int>(infra.nodes().size());
  const int n_links = static_cast<int>(infra.links().size());
  std::vector<int> rrh_order(n_nodes, -1);
  for (size_t r = 0; r < rrhs.size(); ++r) rrh_order[rrhs[r]] = static_cast<int>(r);

  auto has_radio_shares = [&](size_t s) {
    return s < sol.radio.size() && !sol.radio[s].eta_up.empty();
  };
  auto has_wired_shares = [&](size_t s) {
    return s < sol.wired.size() && !sol.wired[s].compute.empty();
  };

  // --- radio side ---
  for (size_t r = 0; r < rrhs.size(); ++r) {
    double total = 0.0;
    for (size_t s = 0; s < slices.size(); ++s) {
      if (!has_radio_shares(s)) continue;
      for (int q = 0; q < sol.radio[s].n_cells; ++q)
        total += sol.radio[s].combined(static_cast<int>(r), q);
    }
    if (total > 1.0 + tol)
      flag("rb_cap", infra.nodes()[rrhs[r]].id, total - 1.0);
  }

  for (size_t s = 0; s < slices.size(); ++s) {
    const auto& slice = slices[s];
    const auto& vr = slice.srd.nodes[slice.srd.radio_node_index()];
    const bool radio_demand = vr.radio_demand() > 0;
    if (radio_demand && !has_radio_shares(s)) {
      flag("radio_missing", slice.id, vr.radio_demand());
      continue;
    }
    if (!has_radio_shares(s)) continue;
    const auto& sh = sol.radio[s];

    // Up/down split proportionality.
    for (int r = 0; r < sh.n_rrh; ++r)
      for (int q = 0; q < sh.n_cells; ++q) {
        const double lhs = sh.up(r, q) * vr.rate_down_demand * rates[s].b_up(r, q);
        const double rhs = sh.down(r, q) * vr.rate_up_demand * rates[s].b_down(r, q);
        if (std::abs(lhs - rhs) > rel_tol(tol, std::max(lhs, rhs)))
          flag("eta_split", slice.id + " rrh " + std::to_string(r), std::abs(lhs - rhs));
      }

    // Per-cell and aggregate rate coverage.
    double agg_up = 0.0, agg_down = 0.0;
    for (int q = 0; q < sh.n_cells; ++q) {
      const double users = per_cell_demand(slice.coverage, q);
      double up = 0.0, down = 0.0;
      for (int r = 0; r < sh.n_rrh; ++r) {
        const double a_r = infra.nodes()[rrhs[r]].rb_capacity;
        up += a_r * rates[s].b_up(r, q) * sh.up(r, q);
        down += a_r * rates[s].b_down(r, q) * sh.down(r, q);
      }
      agg_up += up;
      agg_down += down;
      const double need_up = slice.coverage.rate_up * users;
      const double need_down = slice.coverage.rate_down * users;
      if (vr.rate_up_demand > 0 && up + rel_tol(tol, need_up) < need_up)
        flag("cell_rate_up", slice.id + " cell " + std::to_string(q), need_up - up);
      if (vr.rate_down_demand > 0 && down + rel_tol(tol, need_down) < need_down)
        flag("cell_rate_down", slice.id + " cell " + std::to_string(q), need_down - down);
    }
    if (vr.rate_up_demand > 0 && agg_up + rel_tol(tol, vr.rate_up_demand) < vr.rate_up_demand)
      flag("agg_rate_up", slice.id, vr.rate_up_demand - agg_up);
    if (vr.rate_down_demand > 0 &&
        agg_down + rel_tol(tol, vr.rate_down_demand) < vr.rate_down_demand)
      flag("agg_rate_down", slice.id, vr.rate_down_demand - agg_down);

    // Usage indicators cover every RRH carrying load.
    for (int r = 0; r < sh.n_rrh; ++r) {
      double load = 0.0;
      for (int q = 0; q < sh.n_cells; ++q) load += sh.combined(r, q);
      if (load > tol && !sh.used[r])
        flag("rrh_used", slice.id + " rrh " + std::to_string(r), load);
    }
  }

  // --- wired side ---
  for (int i = 0; i < n_nodes; ++i) {
    double total_c = 0.0, total_s = 0.0;
    for (size_t s = 0; s < slices.size(); ++s) {
      if (!has_wired_shares(s)) continue;
      for (int v = 0; v < sol.wired[s].n_srd_nodes; ++v) {
        total_c += sol.wired[s].phi_c(i, v);
        total_s += sol.wired[s].phi_s(i, v);
      }
    }
    if (total_c > 1.0 + tol) flag("node_cap_compute", infra.nodes()[i].id, total_c - 1.0);
    if (total_s > 1.0 + tol) flag("node_cap_storage", infra.nodes()[i].id, total_s - 1.0);
  }
  for (int l = 0; l < n_links; ++l) {
    double total = 0.0;
    for (size_t s = 0; s < slices.size(); ++s) {
      if (!has_wired_shares(s)) continue;
      for (int e = 0; e < sol.wired[s].n_srd_links; ++e) total += sol.wired[s].phi_b(l, e);
    }
    if (total > 1.0 + tol)
      flag("link_cap", infra.links()[l].src + "->" + infra.links()[l].dst, total - 1.0);
  }

  for (size_t s = 0; s < slices.size(); ++s) {
    const auto& slice = slices[s];
    const auto& srd = slice.srd;
    const int vr = srd.radio_node_index();
    const bool radio_demand = srd.nodes[vr].radio_demand() > 0;
    if (!has_wired_shares(s)) {
      flag("wired_missing", slice.id, 1.0);
      continue;
    }
    const auto& sh = sol.wired[s];
    std::vector<double> p;
    if (radio_demand && has_radio_shares(s))
      p = detail::radio_proportions(infra, slice, rates[s], sol.radio[s]);

    auto share_at = [&](int i, int v) {
      if (radio_demand && rrh_order[i] >= 0 && v == vr && !p.empty()) return p[rrh_order[i]];
      return detail::node_share(infra.nodes()[i], srd.nodes[v], sh.phi_c(i, v), sh.phi_s(i, v));
    };

    // Demand satisfaction per SRD node.
    for (size_t v = 0; v < srd.nodes.size(); ++v) {
      const auto& sn = srd.nodes[v];
      double got_c = 0.0, got_s = 0.0;
      for (int i = 0; i < n_nodes; ++i) {
        got_c += infra.nodes()[i].compute_capacity * sh.phi_c(i, static_cast<int>(v));
        got_s += infra.nodes()[i].storage_capacity * sh.phi_s(i, static_cast<int>(v));
      }
      if (sn.compute_demand > 0 && got_c + rel_tol(tol, sn.compute_demand) < sn.compute_demand)
        flag("demand_compute", slice.id + " " + sn.id, sn.compute_demand - got_c);
      if (sn.storage_demand > 0 && got_s + rel_tol(tol, sn.storage_demand) < sn.storage_demand)
        flag("demand_storage", slice.id + " " + sn.id, sn.storage_demand - got_s);
    }

    for (int i = 0; i < n_nodes; ++i) {
      const auto& node = infra.nodes()[i];
      const bool rrh_radio = radio_demand && rrh_order[i] >= 0;
      for (size_t v = 0; v < srd.nodes.size(); ++v) {
        const auto& sn = srd.nodes[v];
        const bool exempt = rrh_radio && static_cast<int>(v) == vr;
        const std::string where =
            slice.id + " " + node.id + " " + sn.id;
        // Whole-instance amounts on the defining resource only (the other
        // resource follows through the balance equality).
        const char def = detail::counter_resource(sn);
        for (char n : {'c', 's'}) {
          const double cap = n == 'c' ? node.compute_capacity : node.storage_capacity;
          const double dem = n == 'c' ? sn.compute_demand : sn.storage_demand;
          const double floor = n == 'c' ? sn.min_compute : sn.min_storage;
          const double phi = n == 'c' ? sh.phi_c(i, static_cast<int>(v))
                                      : sh.phi_s(i, static_cast<int>(v));
          if (n != def || cap <= 0 || dem <= 0 || floor <= 0 || exempt) continue;
          const double units = cap * phi / floor;
          if (std::abs(units - std::round(units)) > rel_tol(tol, units))
            flag(std::string("instances_") + n, where, std::abs(units - std::round(units)));
        }
        // Compute/storage proportionality.
        if (sn.compute_demand > 0 && sn.storage_demand > 0) {
          const double c = node.compute_capacity * sh.phi_c(i, static_cast<int>(v)) /
                           sn.compute_demand;
          const double st = node.storage_capacity * sh.phi_s(i, static_cast<int>(v)) /
                            sn.storage_demand;
          if (std::abs(c - st) > rel_tol(tol, std::max(c, st)))
            flag("balance", where, std::abs(c - st));
        }
      }

      // Radio coupling at RRHs.
      if (rrh_radio && !p.empty()) {
        const auto& sn = srd.nodes[vr];
        const double want = p[rrh_order[i]];
        for (char n : {'c', 's'}) {
          const double cap = n == 'c' ? node.compute_capacity : node.storage_capacity;
          const double dem = n == 'c' ? sn.compute_demand : sn.storage_demand;
          if (dem <= 0) continue;
          const double got = cap * (n == 'c' ? sh.phi_c(i, vr) : sh.phi_s(i, vr)) / dem;
          if (std::abs(got - want) > rel_tol(tol, want))
            flag(std::string("radio_node_") + n, slice.id + " " + node.id,
                 std::abs(got - want));
        }
      }
    }

    // Radio-adjacent link consistency.
    if (radio_demand && !p.empty()) {
      for (size_t e = 0; e < srd.links.size(); ++e) {
        const auto& sl = srd.links[e];
        const bool into_vr = srd.node_index(sl.dst) == vr;
        const bool from_vr = srd.node_index(sl.src) == vr;
        if (!into_vr && !from_vr) continue;
        if (into_vr && srd.nodes[vr].rate_down_demand <= 0) continue;
        if (from_vr && srd.nodes[vr].rate_up_demand <= 0) continue;
        const double ratio = into_vr ? detail::in_ratio(srd, static_cast<int>(e))
                                     : detail::out_ratio(srd, static_cast<int>(e));
        for (size_t r = 0; r < rrhs.size(); ++r) {
          const int j = rrhs[r];
          double got = 0.0;
          for (int l = 0; l < n_links; ++l) {
            const auto& link = infra.links()[l];
            if (link.is_loopback()) continue;
            const std::string& ext = into_vr ? link.src : link.dst;
            const std::string& rrh_end = into_vr ? link.dst : link.src;
            if (infra.node_index(rrh_end) != j) continue;
            if (infra.nodes()[infra.node_index(ext)].kind == NodeKind::rrh) continue;
            got += link.bandwidth * sh.phi_b(l, static_cast<int>(e)) / sl.bandwidth_demand;
          }
          const double want = ratio * p[r];
          if (std::abs(got - want) > rel_tol(tol, want))
            flag(into_vr ? "radio_link_down" : "radio_link_up",
                 slice.id + " " + infra.nodes()[j].id + " " + sl.src + "->" + sl.dst,
                 std::abs(got - want));
        }
      }
    }

    // Flow conservation and loopback floors.
    for (int i = 0; i < n_nodes; ++i) {
      for (size_t e = 0; e < srd.links.size(); ++e) {
        const auto& sl = srd.links[e];
        const int v = srd.node_index(sl.src);
        const int w = srd.node_index(sl.dst);
        double outflow = 0.0, inflow = 0.0, loop_out = 0.0;
        for (int l = 0; l < n_links; ++l) {
          const auto& link = infra.links()[l];
          const double carried =
              link.bandwidth * sh.phi_b(l, static_cast<int>(e)) / sl.bandwidth_demand;
          if (link.is_loopback()) {
            if (infra.node_index(link.src) == i) loop_out += carried;
            continue;
          }
          if (infra.node_index(link.src) == i) outflow += carried;
          if (infra.node_index(link.dst) == i) inflow += carried;
        }
        const double o_ratio = detail::out_ratio(srd, static_cast<int>(e));
        const double i_ratio = detail::in_ratio(srd, static_cast<int>(e));
        const double src_term = o_ratio * share_at(i, v);
        const double dst_term = i_ratio * share_at(i, w);
        const std::string where =
            slice.id + " " + infra.nodes()[i].id + " " + sl.src + "->" + sl.dst;
        const double gap = (outflow - inflow) - (src_term - dst_term);
        if (std::abs(gap) > rel_tol(tol, std::max(src_term, dst_term)))
          flag("flow", where, std::abs(gap));
        if (outflow + loop_out + rel_tol(tol, src_term) < src_term)
          flag("loopback", where, src_term - (outflow + loop_out));
      }
    }

    // Node-use indicators.
    for (int i = 0; i < n_nodes; ++i) {
      double load = 0.0;
      for (int v = 0; v < sh.n_srd_nodes; ++v) load += sh.phi_c(i, v) + sh.phi_s(i, v);
      if (load > tol && !sh.used[i])
        flag("node_used", slice.id + " " + infra.nodes()[i].id, load);
    }
  }

  // Cost decomposition.
  const double rr = radio_cost(infra, slices, rates, sol.radio, lambda);
  const double wr = wired_cost(infra, slices, sol.wired);
  if (std::abs(rr - sol.radio_cost) > rel_tol(tol, rr))
    flag("cost_radio", "recomputed vs reported", std::abs(rr - sol.radio_cost));
  if (std::abs(wr - sol.wired_cost) > rel_tol(tol, wr))
    flag("cost_wired", "recomputed vs reported", std::abs(wr - sol.wired_cost));
  if (std::abs(rr + wr - sol.total_cost) > rel_tol(tol, rr + wr))
    flag("cost_total", "recomputed vs reported", std::abs(rr + wr - sol.total_cost));

  return out;
}

}  // namespace sliceprov
