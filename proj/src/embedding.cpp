#include <chrono>
#include <cmath>
#include <stdexcept>

#include "sliceprov/embedding.hpp"

namespace sliceprov {

using milp::Model;
using milp::Sense;
using milp::Term;

namespace {

std::string x_name(int f, int i, int v) {
  return "x_" + std::to_string(f) + "_" + std::to_string(i) + "_" + std::to_string(v);
}
std::string u_name(int i) { return "u_" + std::to_string(i); }
std::string y_name(int f, int l, int e) {
  return "y_" + std::to_string(f) + "_" + std::to_string(l) + "_" + std::to_string(e);
}

double instance_ratio(const SrdNode& n) {
  if (n.compute_demand > 0) return n.min_compute / n.compute_demand;
  if (n.storage_demand > 0) return n.min_storage / n.storage_demand;
  return 1.0;
}

}  // namespace

int SfcInstance::node_index(const std::string& id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("unknown SFC VNF: " + id);
}

SfcInstance sfc_from_slice(const SliceSpec& slice) {
  SfcInstance sfc;
  for (const auto& n : slice.srd.nodes) sfc.nodes.push_back({n.id, n.min_compute, n.min_storage});
  for (const auto& l : slice.srd.links) {
    const auto& src = slice.srd.nodes[slice.srd.node_index(l.src)];
    sfc.links.push_back({l.src, l.dst, l.bandwidth_demand * instance_ratio(src)});
  }
  return sfc;
}

SliceSpec slice_for_sfc_count(const SliceSpec& slice, int count) {
  if (count <= 0) throw std::invalid_argument("SFC count must be positive");
  auto sfc = sfc_from_slice(slice);
  SliceSpec out = slice;
  out.id = slice.id + "x" + std::to_string(count);
  for (auto& n : out.srd.nodes) {
    n.compute_demand = count * n.min_compute;
    n.storage_demand = count * n.min_storage;
    n.rate_up_demand = 0.0;
    n.rate_down_demand = 0.0;
  }
  for (size_t e = 0; e < out.srd.links.size(); ++e)
    out.srd.links[e].bandwidth_demand = count * sfc.links[e].bandwidth;
  out.coverage.rate_up = 0.0;
  out.coverage.rate_down = 0.0;
  return out;
}

EmbedUsage EmbedUsage::zero(const InfrastructureGraph& infra) {
  EmbedUsage u;
  u.node_compute.assign(infra.nodes().size(), 0.0);
  u.node_storage.assign(infra.nodes().size(), 0.0);
  u.link_bw.assign(infra.links().size(), 0.0);
  u.node_used.assign(infra.nodes().size(), 0);
  return u;
}

milp::Model build_embedding_ilp(const InfrastructureGraph& infra,
                                const std::vector<SfcInstance>& sfcs, EmbedMode mode,
                                const EmbedUsage& usage) {
  if (sfcs.empty()) throw std::invalid_argument("embedding: empty SFC list");
  if (mode == EmbedMode::sequential_step && sfcs.size() != 1)
    throw std::invalid_argument("embedding: sequential step takes one SFC");
  if (infra.nodes().empty()) throw std::invalid_argument("embedding: empty infrastructure");
  const int n_nodes = static_cast<int>(infra.nodes().size());
  const int n_links = static_cast<int>(infra.links().size());
  const int n_sfc = static_cast<int>(sfcs.size());

  Model m;
  for (int f = 0; f < n_sfc; ++f) {
    for (int i = 0; i < n_nodes; ++i)
      for (size_t v = 0; v < sfcs[f].nodes.size(); ++v)
        m.add_binary(x_name(f, i, static_cast<int>(v)));
    for (int l = 0; l < n_links; ++l) {
      if (infra.links()[l].is_loopback()) continue;
      for (size_t e = 0; e < sfcs[f].links.size(); ++e)
        m.add_continuous(y_name(f, l, static_cast<int>(e)), 0.0,
                         std::numeric_limits<double>::infinity());
    }
  }
  for (int i = 0; i < n_nodes; ++i)
    if (!usage.node_used.empty() && !usage.node_used[i]) m.add_binary(u_name(i));

  // Each VNF on exactly one node.
  for (int f = 0; f < n_sfc; ++f)
    for (size_t v = 0; v < sfcs[f].nodes.size(); ++v) {
      std::vector<Term> terms;
      for (int i = 0; i < n_nodes; ++i)
        terms.push_back({m.variable_index(x_name(f, i, static_cast<int>(v))), 1.0});
      m.add_constraint("place_" + std::to_string(f) + "_" + std::to_string(v), terms, Sense::eq,
                       1.0);
    }

  // Cumulative node capacities, net of committed amounts.
  for (int i = 0; i < n_nodes; ++i) {
    const auto& node = infra.nodes()[i];
    for (int res = 0; res < 2; ++res) {
      const double cap = res == 0 ? node.compute_capacity : node.storage_capacity;
      const double used = usage.node_compute.empty()
                              ? 0.0
                              : (res == 0 ? usage.node_compute[i] : usage.node_storage[i]);
      if (cap - used < -1e-9)
        throw std::invalid_argument("embedding: committed use exceeds capacity at " + node.id);
      std::vector<Term> terms;
      for (int f = 0; f < n_sfc; ++f)
        for (size_t v = 0; v < sfcs[f].nodes.size(); ++v) {
          const double d = res == 0 ? sfcs[f].nodes[v].compute : sfcs[f].nodes[v].storage;
          if (d > 0)
            terms.push_back({m.variable_index(x_name(f, i, static_cast<int>(v))), d});
        }
      m.add_constraint(std::string(res == 0 ? "cap_c_" : "cap_s_") + std::to_string(i), terms,
                       Sense::le, cap - used);
    }
  }

  // Cumulative link capacities.
  for (int l = 0; l < n_links; ++l) {
    if (infra.links()[l].is_loopback()) continue;
    const double used = usage.link_bw.empty() ? 0.0 : usage.link_bw[l];
    if (infra.links()[l].bandwidth - used < -1e-9)
      throw std::invalid_argument("embedding: committed use exceeds link capacity");
    std::vector<Term> terms;
    for (int f = 0; f < n_sfc; ++f)
      for (size_t e = 0; e < sfcs[f].links.size(); ++e)
        terms.push_back({m.variable_index(y_name(f, l, static_cast<int>(e))), 1.0});
    m.add_constraint("bw_" + std::to_string(l), terms, Sense::le,
                     infra.links()[l].bandwidth - used);
  }

  // Per-SFC-link flow conservation; co-located endpoints need no flow.
  for (int f = 0; f < n_sfc; ++f)
    for (size_t e = 0; e < sfcs[f].links.size(); ++e) {
      const int sv = sfcs[f].node_index(sfcs[f].links[e].src);
      const int dv = sfcs[f].node_index(sfcs[f].links[e].dst);
      const double demand = sfcs[f].links[e].bandwidth;
      for (int i = 0; i < n_nodes; ++i) {
        std::vector<Term> terms;
        for (int l = 0; l < n_links; ++l) {
          const auto& link = infra.links()[l];
          if (link.is_loopback()) continue;
          const int var = m.variable_index(y_name(f, l, static_cast<int>(e)));
          if (infra.node_index(link.src) == i) terms.push_back({var, 1.0});
          if (infra.node_index(link.dst) == i) terms.push_back({var, -1.0});
        }
        terms.push_back({m.variable_index(x_name(f, i, sv)), -demand});
        terms.push_back({m.variable_index(x_name(f, i, dv)), demand});
        m.add_constraint("route_" + std::to_string(f) + "_" + std::to_string(e) + "_" +
                             std::to_string(i),
                         terms, Sense::eq, 0.0);
      }
    }

  // Node-use indicators and objective.
  for (int i = 0; i < n_nodes; ++i) {
    const auto& node = infra.nodes()[i];
    const bool pay_fixed = usage.node_used.empty() || !usage.node_used[i];
    for (int f = 0; f < n_sfc; ++f)
      for (size_t v = 0; v < sfcs[f].nodes.size(); ++v) {
        const int xv = m.variable_index(x_name(f, i, static_cast<int>(v)));
        if (pay_fixed && node.kind != NodeKind::rrh)
          m.add_constraint(
              "use_" + std::to_string(f) + "_" + std::to_string(i) + "_" + std::to_string(v),
              {{m.variable_index(u_name(i)), 1.0}, {xv, -1.0}}, Sense::ge, 0.0);
        m.add_objective_coeff(xv, sfcs[f].nodes[v].compute * node.compute_cost +
                                      sfcs[f].nodes[v].storage * node.storage_cost);
      }
    if (pay_fixed && node.kind != NodeKind::rrh)
      m.add_objective_coeff(m.variable_index(u_name(i)), node.fixed_cost);
  }
  for (int l = 0; l < n_links; ++l) {
    if (infra.links()[l].is_loopback()) continue;
    for (int f = 0; f < n_sfc; ++f)
      for (size_t e = 0; e < sfcs[f].links.size(); ++e)
        m.add_objective_coeff(m.variable_index(y_name(f, l, static_cast<int>(e))),
                              infra.links()[l].unit_cost);
  }
  return m;
}

namespace {

std::vector<std::vector<int>> extract_placement(const InfrastructureGraph& infra,
                                                const std::vector<SfcInstance>& sfcs,
                                                const Model& m, const milp::Solution& sol,
                                                int f_offset = 0) {
  std::vector<std::vector<int>> placement;
  for (size_t f = 0; f < sfcs.size(); ++f) {
    std::vector<int> row(sfcs[f].nodes.size(), -1);
    for (size_t v = 0; v < sfcs[f].nodes.size(); ++v)
      for (size_t i = 0; i < infra.nodes().size(); ++i)
        if (sol.value(m, x_name(static_cast<int>(f) + f_offset, static_cast<int>(i),
                                static_cast<int>(v))) > 0.5)
          row[v] = static_cast<int>(i);
    placement.push_back(std::move(row));
  }
  return placement;
}

}  // namespace

EmbeddingSolution embed_joint(const InfrastructureGraph& infra,
                              const std::vector<SfcInstance>& sfcs, const EmbedUsage& usage,
                              const milp::SolveOptions& opts) {
  auto m = build_embedding_ilp(infra, sfcs, EmbedMode::joint, usage);
  auto sol = milp::solve(m, opts);
  EmbeddingSolution out;
  out.status = sol.status;
  out.solve_time = sol.solve_time;
  if (sol.status == milp::SolveStatus::optimal || sol.status == milp::SolveStatus::feasible) {
    out.cost = sol.objective_value;
    out.placement = extract_placement(infra, sfcs, m, sol);
  }
  return out;
}

EmbeddingSolution embed_sequential(const InfrastructureGraph& infra,
                                   const std::vector<SfcInstance>& sfcs, EmbedUsage usage,
                                   const milp::SolveOptions& opts) {
  if (usage.node_compute.empty()) usage = EmbedUsage::zero(infra);
  EmbeddingSolution out;
  for (const auto& sfc : sfcs) {
    auto m = build_embedding_ilp(infra, {sfc}, EmbedMode::sequential_step, usage);
    auto sol = milp::solve(m, opts);
    out.solve_time += sol.solve_time;
    out.status = sol.status;
    if (sol.status != milp::SolveStatus::optimal && sol.status != milp::SolveStatus::feasible)
      return out;
    out.cost += sol.objective_value;
    auto placed = extract_placement(infra, {sfc}, m, sol);
    out.placement.push_back(placed[0]);
    for (size_t v = 0; v < sfc.nodes.size(); ++v) {
      const int i = placed[0][v];
      usage.node_compute[i] += sfc.nodes[v].compute;
      usage.node_storage[i] += sfc.nodes[v].storage;
      usage.node_used[i] = 1;
    }
    for (size_t l = 0; l < infra.links().size(); ++l) {
      if (infra.links()[l].is_loopback()) continue;
      for (size_t e = 0; e < sfc.links.size(); ++e)
        usage.link_bw[l] += sol.value(m, y_name(0, static_cast<int>(l), static_cast<int>(e)));
    }
  }
  return out;
}

InfrastructureGraph reduce_graph(const InfrastructureGraph& infra,
                                 const std::vector<SliceSpec>& slices,
                                 const ProvisioningSolution& prov, int slice_index) {
  (void)slices;
  const size_t s = static_cast<size_t>(slice_index);
  const bool has_wired = s < prov.wired.size() && !prov.wired[s].compute.empty();
  const bool has_radio = s < prov.radio.size() && !prov.radio[s].eta_up.empty();
  const auto rrhs = infra.rrh_indices();
  std::vector<int> rrh_order(infra.nodes().size(), -1);
  for (size_t r = 0; r < rrhs.size(); ++r) rrh_order[rrhs[r]] = static_cast<int>(r);
  constexpr double kSlack = 1e-6;  // keeps exact-fit embeddings feasible

  std::vector<char> keep(infra.nodes().size(), 0);
  std::vector<double> link_share(infra.links().size(), 0.0);
  for (size_t i = 0; i < infra.nodes().size(); ++i) {
    if (has_wired && prov.wired[s].used[i]) keep[i] = 1;
    if (has_radio && rrh_order[i] >= 0 && prov.radio[s].used[rrh_order[i]]) keep[i] = 1;
  }
  for (size_t l = 0; l < infra.links().size(); ++l) {
    if (!has_wired) break;
    for (int e = 0; e < prov.wired[s].n_srd_links; ++e)
      link_share[l] += prov.wired[s].phi_b(static_cast<int>(l), e);
    if (link_share[l] > 1e-9) {
      keep[infra.node_index(infra.links()[l].src)] = 1;
      keep[infra.node_index(infra.links()[l].dst)] = 1;
    }
  }

  InfrastructureGraph out;
  for (size_t i = 0; i < infra.nodes().size(); ++i) {
    if (!keep[i]) continue;
    auto node = infra.nodes()[i];
    double c = 0.0, st = 0.0, rb = 0.0;
    if (has_wired)
      for (int v = 0; v < prov.wired[s].n_srd_nodes; ++v) {
        c += prov.wired[s].phi_c(static_cast<int>(i), v);
        st += prov.wired[s].phi_s(static_cast<int>(i), v);
      }
    if (has_radio && rrh_order[i] >= 0)
      for (int q = 0; q < prov.radio[s].n_cells; ++q)
        rb += prov.radio[s].combined(rrh_order[i], q);
    node.compute_capacity *= c * (1.0 + kSlack);
    node.storage_capacity *= st * (1.0 + kSlack);
    node.rb_capacity *= rb * (1.0 + kSlack);
    out.add_node(node);
  }
  for (size_t l = 0; l < infra.links().size(); ++l) {
    if (link_share[l] <= 1e-9) continue;
    auto link = infra.links()[l];
    link.bandwidth *= link_share[l] * (1.0 + kSlack);
    out.add_link(link);
  }
  return out;
}

std::vector<ComparisonRow> run_comparison(const InfrastructureGraph& infra,
                                          const SliceSpec& slice,
                                          const std::vector<int>& sfc_counts,
                                          const ProvisionOptions& opts) {
  for (int c : sfc_counts)
    if (c <= 0) throw std::invalid_argument("SFC counts must be positive");
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };
  const auto sfc = sfc_from_slice(slice);
  const int n_rrh = static_cast<int>(infra.rrh_indices().size());
  std::vector<ComparisonRow> rows;

  for (int count : sfc_counts) {
    const std::vector<SfcInstance> sfcs(count, sfc);

    for (bool joint : {true, false}) {
      auto t0 = clock::now();
      auto sol = joint ? embed_joint(infra, sfcs, EmbedUsage::zero(infra), opts.solver)
                       : embed_sequential(infra, sfcs, EmbedUsage::zero(infra), opts.solver);
      rows.push_back({joint ? "dir-joint-emb" : "dir-seq-emb", count, sol.cost,
                      seconds(t0, clock::now()), milp::to_string(sol.status)});
    }

    auto t0 = clock::now();
    bool prov_ok = true;
    ProvisioningSolution prov;
    std::string prov_status;
    try {
      auto scaled = slice_for_sfc_count(slice, count);
      std::vector<SliceRateTable> rates(1);
      rates[0].n_rrh = n_rrh;
      prov = carp(infra, {scaled}, rates, Variant::jr_jn, opts);
    } catch (const InfeasibleStep& e) {
      prov_ok = false;
      prov_status = milp::to_string(e.status);
    }
    const double prov_time = seconds(t0, clock::now());
    for (bool joint : {true, false}) {
      const std::string method = joint ? "prov-joint-emb" : "prov-seq-emb";
      if (!prov_ok) {
        rows.push_back({method, count, 0.0, prov_time, prov_status});
        continue;
      }
      auto reduced = reduce_graph(infra, {slice}, prov, 0);
      auto t1 = clock::now();
      auto sol = joint ? embed_joint(reduced, sfcs, EmbedUsage::zero(reduced), opts.solver)
                       : embed_sequential(reduced, sfcs, EmbedUsage::zero(reduced), opts.solver);
      rows.push_back({method, count, sol.cost, prov_time + seconds(t1, clock::now()),
                      milp::to_string(sol.status)});
    }
  }
  return rows;
}

}  // namespace sliceprov
