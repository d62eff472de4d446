#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "prov_internal.hpp"

namespace sliceprov {

using milp::Model;
using milp::Sense;
using milp::Term;

std::string to_string(Variant v) {
  switch (v) {
    case Variant::jrn: return "jrn";
    case Variant::sr_sn: return "sr-sn";
    case Variant::sr_jn: return "sr-jn";
    case Variant::jr_sn: return "jr-sn";
    case Variant::jr_jn: return "jr-jn";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "jrn") return Variant::jrn;
  if (s == "sr-sn") return Variant::sr_sn;
  if (s == "sr-jn") return Variant::sr_jn;
  if (s == "jr-sn") return Variant::jr_sn;
  if (s == "jr-jn") return Variant::jr_jn;
  throw std::invalid_argument("unknown variant: " + s);
}

InfeasibleStep::InfeasibleStep(std::string step_, std::string slice_id_, milp::SolveStatus st)
    : std::runtime_error("provisioning step '" + step_ + "'" +
                         (slice_id_.empty() ? "" : " for slice '" + slice_id_ + "'") +
                         " returned " + milp::to_string(st)),
      step(std::move(step_)),
      slice_id(std::move(slice_id_)),
      status(st) {}

namespace detail {

SliceRadioCoeffs slice_radio_coeffs(const InfrastructureGraph& infra, const SliceSpec& slice,
                                    const SliceRateTable& rates) {
  SliceRadioCoeffs c;
  const auto& vr = slice.srd.nodes[slice.srd.radio_node_index()];
  c.r_up = vr.rate_up_demand;
  c.r_down = vr.rate_down_demand;
  c.has_radio = c.r_up + c.r_down > 0;
  c.n_cells = rates.n_cells;
  const auto rrhs = infra.rrh_indices();
  c.h.assign(rrhs.size() * rates.n_cells, 0.0);
  c.split_up.assign(rrhs.size() * rates.n_cells, 0.0);
  if (!c.has_radio) return c;
  for (size_t r = 0; r < rrhs.size(); ++r) {
    const double a_r = infra.nodes()[rrhs[r]].rb_capacity;
    for (int q = 0; q < rates.n_cells; ++q) {
      const double bu = rates.b_up(static_cast<int>(r), q);
      const double bd = rates.b_down(static_cast<int>(r), q);
      const double d = c.r_up * bd + c.r_down * bu;
      c.h[r * rates.n_cells + q] = a_r * bu * bd / d;
      c.split_up[r * rates.n_cells + q] = c.r_up * bd / d;
    }
  }
  return c;
}

std::vector<double> radio_proportions(const InfrastructureGraph& infra, const SliceSpec& slice,
                                      const SliceRateTable& rates,
                                      const SliceRadioShares& shares) {
  const auto rrhs = infra.rrh_indices();
  std::vector<double> p(rrhs.size(), 0.0);
  const auto& vr = slice.srd.nodes[slice.srd.radio_node_index()];
  const double r_r = vr.rate_up_demand + vr.rate_down_demand;
  if (r_r <= 0) return p;
  for (size_t r = 0; r < rrhs.size(); ++r) {
    const double a_r = infra.nodes()[rrhs[r]].rb_capacity;
    double acc = 0.0;
    for (int q = 0; q < rates.n_cells; ++q)
      acc += shares.up(static_cast<int>(r), q) * rates.b_up(static_cast<int>(r), q) +
             shares.down(static_cast<int>(r), q) * rates.b_down(static_cast<int>(r), q);
    p[r] = a_r * acc / r_r;
  }
  return p;
}

double node_share(const InfraNode& node, const SrdNode& srd, double phi_c, double phi_s) {
  if (srd.compute_demand > 0) return node.compute_capacity * phi_c / srd.compute_demand;
  if (srd.storage_demand > 0) return node.storage_capacity * phi_s / srd.storage_demand;
  return 0.0;
}

char counter_resource(const SrdNode& srd) {
  if (srd.compute_demand > 0 && srd.min_compute > 0) return 'c';
  if (srd.storage_demand > 0 && srd.min_storage > 0) return 's';
  return '\0';
}

double out_ratio(const SrdGraph& g, int link_idx) {
  const auto& e = g.links[link_idx];
  double total = 0.0;
  for (const auto& l : g.links)
    if (l.src == e.src) total += l.bandwidth_demand;
  return e.bandwidth_demand / total;
}

double in_ratio(const SrdGraph& g, int link_idx) {
  const auto& e = g.links[link_idx];
  double total = 0.0;
  for (const auto& l : g.links)
    if (l.dst == e.dst) total += l.bandwidth_demand;
  return e.bandwidth_demand / total;
}

namespace {

// Appends the node-share expression a_n(i) phi_n(i,v) / r_n(v) (resource
// picked as in node_share) scaled by `factor`.
void add_share_terms(const Model& m, std::vector<Term>& terms, const InfrastructureGraph& infra,
                     const SrdGraph& srd, int s, int i, int v, double factor) {
  const auto& node = infra.nodes()[i];
  const auto& sn = srd.nodes[v];
  if (sn.compute_demand > 0) {
    int var = m.variable_index(phn_name('c', s, i, v));
    terms.push_back({var, factor * node.compute_capacity / sn.compute_demand});
  } else if (sn.storage_demand > 0) {
    int var = m.variable_index(phn_name('s', s, i, v));
    terms.push_back({var, factor * node.storage_capacity / sn.storage_demand});
  }
}

// Appends the radio-proportion expression sum_q h(r,q) eta(s,r,q) scaled by
// `factor` (joint model), used where the two-step model has a constant.
void add_proportion_terms(const Model& m, std::vector<Term>& terms, const SliceRadioCoeffs& rc,
                          int s, int r, double factor) {
  for (int q = 0; q < rc.n_cells; ++q)
    terms.push_back({m.variable_index(eta_name(s, r, q)), factor * rc.h[r * rc.n_cells + q]});
}

void add_radio_variables(Model& m, const InfrastructureGraph& infra,
                         const std::vector<SliceSpec>& slices, const std::vector<int>& subset,
                         const std::vector<SliceRateTable>& rates) {
  const auto rrhs = infra.rrh_indices();
  for (int s : subset) {
    const auto rc = slice_radio_coeffs(infra, slices[s], rates[s]);
    for (size_t r = 0; r < rrhs.size(); ++r) {
      for (int q = 0; q < rates[s].n_cells; ++q)
        m.add_continuous(eta_name(s, static_cast<int>(r), q), 0.0, rc.has_radio ? 1.0 : 0.0);
      m.add_binary(etat_name(s, static_cast<int>(r)));
    }
  }
}

void add_radio_constraints(Model& m, const InfrastructureGraph& infra,
                           const std::vector<SliceSpec>& slices, const std::vector<int>& subset,
                           const std::vector<SliceRateTable>& rates,
                           const std::vector<double>& prior_rrh_share, double epsilon) {
  const auto rrhs = infra.rrh_indices();
  // Per-RRH capacity, across all slices of the subset, net of committed use.
  for (size_t r = 0; r < rrhs.size(); ++r) {
    const double residual = 1.0 - (prior_rrh_share.empty() ? 0.0 : prior_rrh_share[r]);
    if (residual < -1e-12)
      throw std::invalid_argument("negative residual radio capacity at " +
                                  infra.nodes()[rrhs[r]].id);
    std::vector<Term> terms;
    for (int s : subset)
      for (int q = 0; q < rates[s].n_cells; ++q)
        terms.push_back({m.variable_index(eta_name(s, static_cast<int>(r), q)), 1.0});
    m.add_constraint("rb_cap_" + std::to_string(r), terms, Sense::le, residual);
  }

  for (int s : subset) {
    const auto& slice = slices[s];
    const auto rc = slice_radio_coeffs(infra, slice, rates[s]);
    const std::string tag = "_" + std::to_string(s);
    if (rc.has_radio) {
      // Per-cell rate coverage, one row per direction with positive demand.
      for (int q = 0; q < rates[s].n_cells; ++q) {
        const double users = per_cell_demand(slice.coverage, q);
        for (int dir = 0; dir < 2; ++dir) {
          const double rate = dir == 0 ? slice.coverage.rate_up : slice.coverage.rate_down;
          const double r_dir = dir == 0 ? rc.r_up : rc.r_down;
          if (r_dir <= 0) continue;
          std::vector<Term> terms;
          for (size_t r = 0; r < rrhs.size(); ++r)
            terms.push_back({m.variable_index(eta_name(s, static_cast<int>(r), q)),
                             r_dir * rc.h[r * rc.n_cells + q]});
          m.add_constraint((dir == 0 ? "cell_up" : "cell_down") + tag + "_" + std::to_string(q),
                           terms, Sense::ge, rate * users);
        }
      }
      // Aggregate demand of the radio node (implied by the per-cell rows but
      // kept as an explicit family).
      for (int dir = 0; dir < 2; ++dir) {
        const double r_dir = dir == 0 ? rc.r_up : rc.r_down;
        if (r_dir <= 0) continue;
        std::vector<Term> terms;
        for (size_t r = 0; r < rrhs.size(); ++r)
          for (int q = 0; q < rc.n_cells; ++q)
            terms.push_back({m.variable_index(eta_name(s, static_cast<int>(r), q)),
                             r_dir * rc.h[r * rc.n_cells + q]});
        m.add_constraint((dir == 0 ? "agg_up" : "agg_down") + tag, terms, Sense::ge, r_dir);
      }
    }
    // Indicator linking: sum_q eta <= etat <= sum_q eta + 1 - eps.
    for (size_t r = 0; r < rrhs.size(); ++r) {
      std::vector<Term> lo{{m.variable_index(etat_name(s, static_cast<int>(r))), 1.0}};
      std::vector<Term> hi = lo;
      for (int q = 0; q < rates[s].n_cells; ++q) {
        int var = m.variable_index(eta_name(s, static_cast<int>(r), q));
        lo.push_back({var, -1.0});
        hi.push_back({var, -1.0});
      }
      m.add_constraint("rrh_used_lo" + tag + "_" + std::to_string(r), lo, Sense::ge, 0.0);
      m.add_constraint("rrh_used_hi" + tag + "_" + std::to_string(r), hi, Sense::le,
                       1.0 - epsilon);
    }
  }
}

void add_radio_objective(Model& m, const InfrastructureGraph& infra,
                         const std::vector<SliceSpec>& slices, const std::vector<int>& subset,
                         const std::vector<SliceRateTable>& rates, double lambda) {
  const auto rrhs = infra.rrh_indices();
  for (int s : subset) {
    const auto rc = slice_radio_coeffs(infra, slices[s], rates[s]);
    for (size_t r = 0; r < rrhs.size(); ++r) {
      const auto& node = infra.nodes()[rrhs[r]];
      m.add_objective_coeff(m.variable_index(etat_name(s, static_cast<int>(r))), node.fixed_cost);
      for (int q = 0; q < rates[s].n_cells; ++q) {
        if (lambda > 0) {
          const double b_max =
              std::max(rates[s].b_up(static_cast<int>(r), q), rates[s].b_down(static_cast<int>(r), q));
          if (node.rb_cost - lambda * b_max < -1e-12)
            throw std::invalid_argument(
                "rate discount too large: negative effective radio unit cost at " + node.id);
        }
        const double coeff =
            node.rb_capacity * node.rb_cost -
            lambda * (rc.r_up + rc.r_down) * rc.h[r * rc.n_cells + q];
        m.add_objective_coeff(m.variable_index(eta_name(s, static_cast<int>(r), q)), coeff);
      }
    }
  }
}

// Marks (i, v, n) combinations whose share variable is structurally zero.
bool pinned(const InfraNode& node, const SrdNode& srd, char n) {
  const double cap = n == 'c' ? node.compute_capacity : node.storage_capacity;
  const double dem = n == 'c' ? srd.compute_demand : srd.storage_demand;
  return cap <= 0 || dem <= 0;
}

void add_wired_variables(Model& m, const InfrastructureGraph& infra,
                         const std::vector<SliceSpec>& slices, const std::vector<int>& subset) {
  const int n_nodes = static_cast<int>(infra.nodes().size());
  const int n_links = static_cast<int>(infra.links().size());
  for (int s : subset) {
    const auto& srd = slices[s].srd;
    const int vr = srd.radio_node_index();
    const bool has_radio = srd.nodes[vr].radio_demand() > 0;
    for (int i = 0; i < n_nodes; ++i) {
      const auto& node = infra.nodes()[i];
      for (size_t v = 0; v < srd.nodes.size(); ++v) {
        const auto& sn = srd.nodes[v];
        const char def = counter_resource(sn);
        for (char n : {'c', 's'}) {
          const bool zero = pinned(node, sn, n);
          m.add_continuous(phn_name(n, s, i, static_cast<int>(v)), 0.0, zero ? 0.0 : 1.0);
          // Instance counter on the defining resource only; skipped where the
          // share is pinned to zero and at (rrh, radio node), where the radio
          // coupling fixes the share.
          const bool exempt =
              has_radio && node.kind == NodeKind::rrh && static_cast<int>(v) == vr;
          const double cap = n == 'c' ? node.compute_capacity : node.storage_capacity;
          const double floor = n == 'c' ? sn.min_compute : sn.min_storage;
          if (n == def && !zero && !exempt && floor > 0)
            m.add_integer(kappa_name(n, s, i, static_cast<int>(v)), 0.0,
                          std::ceil(cap / floor));
        }
      }
      m.add_binary(pht_name(s, i));
    }
    for (int l = 0; l < n_links; ++l)
      for (size_t e = 0; e < srd.links.size(); ++e)
        m.add_continuous(phb_name(s, l, static_cast<int>(e)), 0.0, 1.0);
  }
}

// `proportions`: fixed per-rrh radio proportion per subset slice (two-step),
// or nullptr in the joint model where the expression stays linear in eta.
void add_wired_constraints(Model& m, const InfrastructureGraph& infra,
                           const std::vector<SliceSpec>& slices, const std::vector<int>& subset,
                           const std::vector<SliceRateTable>& rates,
                           const std::vector<std::vector<double>>* proportions,
                           const WiredPrior& prior, double epsilon) {
  const int n_nodes = static_cast<int>(infra.nodes().size());
  const int n_links = static_cast<int>(infra.links().size());
  const auto rrhs = infra.rrh_indices();
  std::vector<int> rrh_order(n_nodes, -1);
  for (size_t r = 0; r < rrhs.size(); ++r) rrh_order[rrhs[r]] = static_cast<int>(r);

  for (int s : subset)
    for (const auto& l : slices[s].srd.links)
      if (l.bandwidth_demand <= 0)
        throw std::invalid_argument("slice " + slices[s].id + ": SRD link " + l.src + "->" +
                                    l.dst + " has no bandwidth demand");

  // Node and link share caps across the subset, net of committed shares.
  for (int i = 0; i < n_nodes; ++i) {
    for (char n : {'c', 's'}) {
      const auto& committed = n == 'c' ? prior.node_compute : prior.node_storage;
      const double residual = 1.0 - (committed.empty() ? 0.0 : committed[i]);
      if (residual < -1e-12)
        throw std::invalid_argument("negative residual node capacity at " + infra.nodes()[i].id);
      std::vector<Term> terms;
      for (int s : subset)
        for (size_t v = 0; v < slices[s].srd.nodes.size(); ++v)
          terms.push_back({m.variable_index(phn_name(n, s, i, static_cast<int>(v))), 1.0});
      m.add_constraint(std::string("node_cap_") + n + "_" + std::to_string(i), terms, Sense::le,
                       residual);
    }
  }
  for (int l = 0; l < n_links; ++l) {
    const double residual = 1.0 - (prior.link.empty() ? 0.0 : prior.link[l]);
    if (residual < -1e-12)
      throw std::invalid_argument("negative residual link capacity on " + infra.links()[l].src +
                                  "->" + infra.links()[l].dst);
    std::vector<Term> terms;
    for (int s : subset)
      for (size_t e = 0; e < slices[s].srd.links.size(); ++e)
        terms.push_back({m.variable_index(phb_name(s, l, static_cast<int>(e))), 1.0});
    m.add_constraint("link_cap_" + std::to_string(l), terms, Sense::le, residual);
  }

  for (size_t si = 0; si < subset.size(); ++si) {
    const int s = subset[si];
    const auto& slice = slices[s];
    const auto& srd = slice.srd;
    const int vr = srd.radio_node_index();
    const auto rc = slice_radio_coeffs(infra, slice, rates[s]);
    const std::string tag = "_" + std::to_string(s);

    // Demand satisfaction per SRD node and resource.
    for (size_t v = 0; v < srd.nodes.size(); ++v) {
      const auto& sn = srd.nodes[v];
      for (char n : {'c', 's'}) {
        const double dem = n == 'c' ? sn.compute_demand : sn.storage_demand;
        if (dem <= 0) continue;
        std::vector<Term> terms;
        for (int i = 0; i < n_nodes; ++i) {
          const double cap =
              n == 'c' ? infra.nodes()[i].compute_capacity : infra.nodes()[i].storage_capacity;
          if (cap > 0)
            terms.push_back({m.variable_index(phn_name(n, s, i, static_cast<int>(v))), cap});
        }
        m.add_constraint(std::string("demand_") + n + tag + "_" + std::to_string(v), terms,
                         Sense::ge, dem);
      }
    }

    for (int i = 0; i < n_nodes; ++i) {
      const auto& node = infra.nodes()[i];
      for (size_t v = 0; v < srd.nodes.size(); ++v) {
        const auto& sn = srd.nodes[v];
        const std::string iv = tag + "_" + std::to_string(i) + "_" + std::to_string(v);
        const bool exempt =
            rc.has_radio && node.kind == NodeKind::rrh && static_cast<int>(v) == vr;
        // Whole-instance provisioning: a_n phi_n is a multiple of the floor,
        // imposed on the defining resource (the other follows via balance).
        const char def = counter_resource(sn);
        for (char n : {'c', 's'}) {
          const double cap = n == 'c' ? node.compute_capacity : node.storage_capacity;
          const double floor = n == 'c' ? sn.min_compute : sn.min_storage;
          if (n != def || pinned(node, sn, n) || exempt || floor <= 0) continue;
          m.add_constraint(std::string("instances_") + n + iv,
                           {{m.variable_index(phn_name(n, s, i, static_cast<int>(v))), cap},
                            {m.variable_index(kappa_name(n, s, i, static_cast<int>(v))), -floor}},
                           Sense::eq, 0.0);
        }
        // Compute/storage balance.
        if (sn.compute_demand > 0 && sn.storage_demand > 0) {
          m.add_constraint(
              "balance" + iv,
              {{m.variable_index(phn_name('c', s, i, static_cast<int>(v))),
                node.compute_capacity / sn.compute_demand},
               {m.variable_index(phn_name('s', s, i, static_cast<int>(v))),
                -node.storage_capacity / sn.storage_demand}},
              Sense::eq, 0.0);
        }
      }

      // Radio coupling at RRHs: node shares of the radio SRD node track the
      // provisioned radio proportion.
      if (rc.has_radio && node.kind == NodeKind::rrh) {
        const int r = rrh_order[i];
        for (char n : {'c', 's'}) {
          const auto& sn = srd.nodes[vr];
          const double dem = n == 'c' ? sn.compute_demand : sn.storage_demand;
          if (dem <= 0) continue;
          const double cap = n == 'c' ? node.compute_capacity : node.storage_capacity;
          std::vector<Term> terms{{m.variable_index(phn_name(n, s, i, vr)), cap / dem}};
          double rhs = 0.0;
          if (proportions) {
            rhs = (*proportions)[si][r];
          } else {
            add_proportion_terms(m, terms, rc, s, r, -1.0);
          }
          m.add_constraint(std::string("radio_node_") + n + tag + "_" + std::to_string(i), terms,
                           Sense::eq, rhs);
        }
      }
    }

    // Radio-adjacent link consistency: external links feeding (downlink) or
    // leaving (uplink) each RRH carry its share of the radio-node traffic.
    for (size_t e = 0; e < srd.links.size(); ++e) {
      const auto& sl = srd.links[e];
      const bool into_vr = srd.node_index(sl.dst) == vr;
      const bool from_vr = srd.node_index(sl.src) == vr;
      if (!into_vr && !from_vr) continue;
      if (into_vr && rc.r_down <= 0) continue;
      if (from_vr && rc.r_up <= 0) continue;
      const double ratio = into_vr ? in_ratio(srd, static_cast<int>(e))
                                   : out_ratio(srd, static_cast<int>(e));
      for (size_t r = 0; r < rrhs.size(); ++r) {
        const int j = rrhs[r];
        std::vector<Term> terms;
        for (int l = 0; l < n_links; ++l) {
          const auto& link = infra.links()[l];
          if (link.is_loopback()) continue;
          const std::string& ext = into_vr ? link.src : link.dst;
          const std::string& rrh_end = into_vr ? link.dst : link.src;
          if (infra.node_index(rrh_end) != j) continue;
          if (infra.nodes()[infra.node_index(ext)].kind == NodeKind::rrh) continue;
          terms.push_back({m.variable_index(phb_name(s, l, static_cast<int>(e))),
                           link.bandwidth / sl.bandwidth_demand});
        }
        double rhs = 0.0;
        if (proportions) {
          rhs = ratio * (*proportions)[si][r];
        } else {
          add_proportion_terms(m, terms, rc, s, static_cast<int>(r), -ratio);
        }
        m.add_constraint(std::string(into_vr ? "radio_link_down" : "radio_link_up") + tag + "_" +
                             std::to_string(j) + "_" + std::to_string(e),
                         terms, Sense::eq, rhs);
      }
    }

    // Flow conservation and loopback floors, per infra node and SRD link.
    for (int i = 0; i < n_nodes; ++i) {
      for (size_t e = 0; e < srd.links.size(); ++e) {
        const auto& sl = srd.links[e];
        const int v = srd.node_index(sl.src);
        const int w = srd.node_index(sl.dst);
        const double o_ratio = out_ratio(srd, static_cast<int>(e));
        const double i_ratio = in_ratio(srd, static_cast<int>(e));
        const std::string ie = tag + "_" + std::to_string(i) + "_" + std::to_string(e);

        std::vector<Term> flow;
        std::vector<Term> loop;
        for (int l = 0; l < n_links; ++l) {
          const auto& link = infra.links()[l];
          const int src = infra.node_index(link.src);
          const int dst = infra.node_index(link.dst);
          const double coeff = link.bandwidth / sl.bandwidth_demand;
          const int var = m.variable_index(phb_name(s, l, static_cast<int>(e)));
          if (link.is_loopback()) {
            if (src == i) loop.push_back({var, coeff});
            continue;
          }
          if (src == i) {
            flow.push_back({var, coeff});
            loop.push_back({var, coeff});
          }
          if (dst == i) flow.push_back({var, -coeff});
        }
        // Source and sink terms; the radio coupling substitutes the radio
        // proportion for the radio node's share at RRHs.
        double rhs = 0.0;
        auto add_endpoint = [&](std::vector<Term>& terms, int srd_node, double factor) {
          if (rc.has_radio && infra.nodes()[i].kind == NodeKind::rrh && srd_node == vr &&
              proportions == nullptr) {
            add_proportion_terms(m, terms, rc, s, rrh_order[i], factor);
          } else if (rc.has_radio && infra.nodes()[i].kind == NodeKind::rrh && srd_node == vr &&
                     proportions != nullptr &&
                     srd.nodes[vr].compute_demand <= 0 && srd.nodes[vr].storage_demand <= 0) {
            rhs -= factor * (*proportions)[si][rrh_order[i]];
          } else {
            add_share_terms(m, terms, infra, srd, s, i, srd_node, factor);
          }
        };
        add_endpoint(flow, v, -o_ratio);
        add_endpoint(flow, w, i_ratio);
        m.add_constraint("flow" + ie, flow, Sense::eq, rhs);

        rhs = 0.0;
        add_endpoint(loop, v, -o_ratio);
        m.add_constraint("loop" + ie, loop, Sense::ge, rhs);
      }
    }

    // Node-use indicators.
    const double denom = 2.0 * static_cast<double>(srd.nodes.size());
    for (int i = 0; i < n_nodes; ++i) {
      std::vector<Term> lo{{m.variable_index(pht_name(s, i)), 1.0}};
      std::vector<Term> hi = lo;
      for (size_t v = 0; v < srd.nodes.size(); ++v)
        for (char n : {'c', 's'}) {
          int var = m.variable_index(phn_name(n, s, i, static_cast<int>(v)));
          lo.push_back({var, -1.0 / denom});
          hi.push_back({var, -1.0 / denom});
        }
      m.add_constraint("node_used_lo" + tag + "_" + std::to_string(i), lo, Sense::ge, 0.0);
      m.add_constraint("node_used_hi" + tag + "_" + std::to_string(i), hi, Sense::le,
                       1.0 - epsilon);
    }
  }
}

void add_wired_objective(Model& m, const InfrastructureGraph& infra,
                         const std::vector<SliceSpec>& slices, const std::vector<int>& subset) {
  const int n_nodes = static_cast<int>(infra.nodes().size());
  const int n_links = static_cast<int>(infra.links().size());
  for (int s : subset) {
    const auto& srd = slices[s].srd;
    for (int i = 0; i < n_nodes; ++i) {
      const auto& node = infra.nodes()[i];
      if (node.kind != NodeKind::rrh)
        m.add_objective_coeff(m.variable_index(pht_name(s, i)), node.fixed_cost);
      for (size_t v = 0; v < srd.nodes.size(); ++v) {
        m.add_objective_coeff(m.variable_index(phn_name('c', s, i, static_cast<int>(v))),
                              node.compute_capacity * node.compute_cost);
        m.add_objective_coeff(m.variable_index(phn_name('s', s, i, static_cast<int>(v))),
                              node.storage_capacity * node.storage_cost);
      }
    }
    for (int l = 0; l < n_links; ++l) {
      const auto& link = infra.links()[l];
      for (size_t e = 0; e < srd.links.size(); ++e)
        m.add_objective_coeff(m.variable_index(phb_name(s, l, static_cast<int>(e))),
                              link.bandwidth * link.unit_cost);
    }
  }
}

}  // namespace

}  // namespace detail

milp::Model build_rp(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                     const std::vector<int>& subset, const std::vector<SliceRateTable>& rates,
                     double lambda, const std::vector<double>& prior_rrh_share, double epsilon) {
  if (subset.empty()) throw std::invalid_argument("build_rp: empty slice subset");
  Model m;
  detail::add_radio_variables(m, infra, slices, subset, rates);
  detail::add_radio_constraints(m, infra, slices, subset, rates, prior_rrh_share, epsilon);
  detail::add_radio_objective(m, infra, slices, subset, rates, lambda);
  return m;
}

milp::Model build_np(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                     const std::vector<int>& subset, const RadioShares& radio,
                     const std::vector<SliceRateTable>& rates, const WiredPrior& prior,
                     double epsilon) {
  if (subset.empty()) throw std::invalid_argument("build_np: empty slice subset");
  std::vector<std::vector<double>> proportions;
  for (int s : subset) {
    const auto rc = detail::slice_radio_coeffs(infra, slices[s], rates[s]);
    if (rc.has_radio &&
        (static_cast<size_t>(s) >= radio.size() || radio[s].eta_up.empty()))
      throw std::invalid_argument("build_np: missing radio shares for slice " + slices[s].id);
    proportions.push_back(detail::radio_proportions(infra, slices[s], rates[s],
                                                    rc.has_radio ? radio[s]
                                                                 : SliceRadioShares{}));
  }
  Model m;
  detail::add_wired_variables(m, infra, slices, subset);
  detail::add_wired_constraints(m, infra, slices, subset, rates, &proportions, prior, epsilon);
  detail::add_wired_objective(m, infra, slices, subset);
  return m;
}

milp::Model build_jrn(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices,
                      const std::vector<SliceRateTable>& rates, double lambda, double epsilon) {
  std::vector<int> all(slices.size());
  for (size_t s = 0; s < slices.size(); ++s) all[s] = static_cast<int>(s);
  if (all.empty()) throw std::invalid_argument("build_jrn: no slices");
  Model m;
  detail::add_radio_variables(m, infra, slices, all, rates);
  detail::add_wired_variables(m, infra, slices, all);
  detail::add_radio_constraints(m, infra, slices, all, rates, {}, epsilon);
  detail::add_wired_constraints(m, infra, slices, all, rates, nullptr, WiredPrior{}, epsilon);
  detail::add_radio_objective(m, infra, slices, all, rates, lambda);
  detail::add_wired_objective(m, infra, slices, all);
  return m;
}

ScenarioDims scenario_dims(const InfrastructureGraph& infra, const std::vector<SliceSpec>& slices) {
  ScenarioDims d;
  d.n_rrh = static_cast<int>(infra.rrh_indices().size());
  d.n_infra_nodes = static_cast<int>(infra.nodes().size());
  d.n_infra_links = static_cast<int>(infra.links().size());
  for (const auto& s : slices) {
    d.cells_per_slice.push_back(static_cast<int>(s.coverage.subareas.size()));
    d.srd_nodes_per_slice.push_back(static_cast<int>(s.srd.nodes.size()));
    d.srd_links_per_slice.push_back(static_cast<int>(s.srd.links.size()));
  }
  return d;
}

std::vector<ProblemSize> count_problem_size(Variant variant, const ScenarioDims& dims) {
  const size_t ns = dims.cells_per_slice.size();
  auto rp_size = [&](size_t s) {
    return static_cast<long long>(dims.n_rrh) * (1 + dims.cells_per_slice[s]);
  };
  auto np_size = [&](size_t s) {
    return 2LL * dims.n_infra_nodes * dims.srd_nodes_per_slice[s] + dims.n_infra_nodes +
           static_cast<long long>(dims.n_infra_links) * dims.srd_links_per_slice[s];
  };
  long long rp_all = 0, np_all = 0;
  for (size_t s = 0; s < ns; ++s) {
    rp_all += rp_size(s);
    np_all += np_size(s);
  }
  std::vector<ProblemSize> out;
  const bool joint_radio = variant == Variant::jr_sn || variant == Variant::jr_jn;
  const bool joint_wired = variant == Variant::sr_jn || variant == Variant::jr_jn;
  if (variant == Variant::jrn) {
    out.push_back({"jrn", rp_all + np_all});
    return out;
  }
  if (joint_radio) {
    out.push_back({"rp", rp_all});
  } else {
    for (size_t s = 0; s < ns; ++s) out.push_back({"rp[" + std::to_string(s) + "]", rp_size(s)});
  }
  if (joint_wired) {
    out.push_back({"np", np_all});
  } else {
    for (size_t s = 0; s < ns; ++s) out.push_back({"np[" + std::to_string(s) + "]", np_size(s)});
  }
  return out;
}

}  // namespace sliceprov
