#pragma once

#include <string>
#include <vector>

#include "sliceprov/geometry.hpp"

namespace sliceprov {

// Coverage demand of one slice: area, user density, per-user rate targets,
// and the subarea partition the radio constraints are written over.
struct CoverageSpec {
  std::vector<Rect> area;  // union of disjoint rectangles
  Density density;
  double rate_up = 0.0;    // bps per user
  double rate_down = 0.0;  // bps per user
  std::vector<Subarea> subareas;

  double area_measure() const;
  // Disjointness and completeness of the subarea partition; throws on failure.
  void validate() const;
};

// Builds the subarea list of `cov` by gridding each area rectangle.
void partition_coverage(CoverageSpec& cov, double cell_w, double cell_h);

// Aggregated radio demand, r_u = rate_up * integral of density over the area
// (and likewise downlink), in bps.
struct RadioDemand {
  double up = 0.0;
  double down = 0.0;
};
RadioDemand aggregate_radio_demand(const CoverageSpec& cov);

// Expected user count inside subarea q (exact integral of the density).
double per_cell_demand(const CoverageSpec& cov, int q);

struct SrdNode {
  std::string id;
  double compute_demand = 0.0;      // r_c, CPUs
  double storage_demand = 0.0;      // r_s, GBytes
  double min_compute = 0.0;         // single-VNF floor
  double min_storage = 0.0;
  bool is_radio_node = false;
  double rate_up_demand = 0.0;      // bps, radio node only
  double rate_down_demand = 0.0;    // bps, radio node only

  double radio_demand() const { return rate_up_demand + rate_down_demand; }
};

struct SrdLink {
  std::string src;
  std::string dst;
  double bandwidth_demand = 0.0;  // Gbps
};

struct SrdGraph {
  std::vector<SrdNode> nodes;
  std::vector<SrdLink> links;

  int node_index(const std::string& id) const;
  int radio_node_index() const;  // index of the unique radio node
  void validate() const;
};

struct SliceSpec {
  std::string id;
  SrdGraph srd;
  CoverageSpec coverage;

  // Checks SRD invariants and that the radio node's (r_u, r_d) agree with the
  // aggregation of the coverage spec within 1e-9 relative.
  void validate() const;
};

}  // namespace sliceprov
