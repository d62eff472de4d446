#include "sliceprov/slice.hpp"

#include <cmath>
#include <stdexcept>

namespace sliceprov {

double CoverageSpec::area_measure() const {
  double a = 0.0;
  for (const auto& r : area) a += r.area();
  return a;
}

void CoverageSpec::validate() const {
  if (rate_up < 0 || rate_down < 0)
    throw std::invalid_argument("coverage: negative per-user rate");
  if (area.empty()) throw std::invalid_argument("coverage: empty area");
  const double total = area_measure();
  if (total <= 0.0) throw std::invalid_argument("coverage: degenerate area");
  double cells = 0.0;
  for (const auto& s : subareas) cells += s.rect.area();
  if (std::abs(cells - total) > 1e-6 * total)
    throw std::invalid_argument("coverage: subareas do not tile the area");
  for (size_t i = 0; i < subareas.size(); ++i)
    for (size_t j = i + 1; j < subareas.size(); ++j)
      if (overlap_area(subareas[i].rect, subareas[j].rect) > 1e-9 * total)
        throw std::invalid_argument("coverage: overlapping subareas");
}

void partition_coverage(CoverageSpec& cov, double cell_w, double cell_h) {
  cov.subareas.clear();
  for (const auto& r : cov.area) {
    auto cells = partition_area(r, cell_w, cell_h);
    cov.subareas.insert(cov.subareas.end(), cells.begin(), cells.end());
  }
}

RadioDemand aggregate_radio_demand(const CoverageSpec& cov) {
  double users = 0.0;
  for (const auto& r : cov.area) users += cov.density.mass(r);
  return {cov.rate_up * users, cov.rate_down * users};
}

double per_cell_demand(const CoverageSpec& cov, int q) {
  if (q < 0 || q >= static_cast<int>(cov.subareas.size()))
    throw std::out_of_range("per_cell_demand: invalid subarea index");
  return cov.density.mass(cov.subareas[q].rect);
}

int SrdGraph::node_index(const std::string& id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("unknown SRD node: " + id);
}

int SrdGraph::radio_node_index() const {
  int idx = -1;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].is_radio_node) {
      if (idx >= 0) throw std::invalid_argument("SRD graph has multiple radio nodes");
      idx = static_cast<int>(i);
    }
  if (idx < 0) throw std::invalid_argument("SRD graph has no radio node");
  return idx;
}

void SrdGraph::validate() const {
  radio_node_index();  // exactly one
  for (const auto& n : nodes) {
    if (n.compute_demand < 0 || n.storage_demand < 0 || n.min_compute < 0 || n.min_storage < 0)
      throw std::invalid_argument("negative demand at SRD node " + n.id);
    if (n.min_compute > n.compute_demand || n.min_storage > n.storage_demand)
      throw std::invalid_argument("per-instance floor exceeds aggregate demand at " + n.id);
    if (n.compute_demand > 0 && n.min_compute <= 0)
      throw std::invalid_argument("positive compute demand needs a positive floor at " + n.id);
    if (n.storage_demand > 0 && n.min_storage <= 0)
      throw std::invalid_argument("positive storage demand needs a positive floor at " + n.id);
    if (!n.is_radio_node && (n.rate_up_demand != 0 || n.rate_down_demand != 0))
      throw std::invalid_argument("radio demand on non-radio SRD node " + n.id);
  }
  for (const auto& l : links) {
    if (l.src == l.dst) throw std::invalid_argument("SRD self-loop at " + l.src);
    node_index(l.src);
    node_index(l.dst);
    if (l.bandwidth_demand < 0)
      throw std::invalid_argument("negative bandwidth demand on " + l.src + "->" + l.dst);
  }
}

void SliceSpec::validate() const {
  srd.validate();
  const auto& vr = srd.nodes[srd.radio_node_index()];
  if (coverage.area.empty()) {
    // Wired-only slice: no coverage spec, so the radio node must be inert.
    if (vr.radio_demand() > 0)
      throw std::invalid_argument("slice " + id + ": radio demand without a coverage area");
    return;
  }
  coverage.validate();
  const RadioDemand agg = aggregate_radio_demand(coverage);
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), 1.0});
  };
  if (!close(vr.rate_up_demand, agg.up) || !close(vr.rate_down_demand, agg.down))
    throw std::invalid_argument("slice " + id +
                                ": radio node demand disagrees with coverage aggregation");
}

}  // namespace sliceprov
