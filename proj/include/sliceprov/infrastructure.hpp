#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sliceprov/geometry.hpp"

namespace sliceprov {

enum class NodeKind { cloud, rrh };

struct InfraNode {
  std::string id;
  NodeKind kind = NodeKind::cloud;
  double compute_capacity = 0.0;  // CPUs
  double storage_capacity = 0.0;  // GBytes
  double rb_capacity = 0.0;       // resource blocks per time unit, rrh only
  std::optional<Point> position;  // required for rrh
  double fixed_cost = 0.0;
  double compute_cost = 0.0;  // per CPU
  double storage_cost = 0.0;  // per GByte
  double rb_cost = 0.0;       // per RB
};

struct InfraLink {
  std::string src;
  std::string dst;
  double bandwidth = 0.0;  // Gbps
  double unit_cost = 0.0;  // per Gbps

  bool is_loopback() const { return src == dst; }
};

class InfrastructureGraph {
 public:
  void add_node(InfraNode node);
  void add_link(InfraLink link);

  const std::vector<InfraNode>& nodes() const { return nodes_; }
  const std::vector<InfraLink>& links() const { return links_; }

  bool has_node(const std::string& id) const;
  const InfraNode& node(const std::string& id) const;
  int node_index(const std::string& id) const;

  std::vector<int> rrh_indices() const;
  std::vector<int> cloud_indices() const;
  // Index into links() of link src->dst, or -1.
  int link_index(const std::string& src, const std::string& dst) const;

  // Checks id uniqueness, endpoint existence, capacity/cost signs, rrh
  // positions. Throws std::invalid_argument on violation.
  void validate() const;

 private:
  std::vector<InfraNode> nodes_;
  std::vector<InfraLink> links_;
  std::unordered_map<std::string, int> node_index_;
  std::unordered_map<std::string, int> link_index_;
};

struct FatTreeLevelCaps {
  double compute = 0.0;
  double storage = 0.0;
  double down_link_bw = 0.0;  // bandwidth of links toward the next level down
  double loopback_bw = 0.0;
};

struct FatTreeCosts {
  double cloud_fixed = 20.0;
  double cloud_compute = 1.0;
  double cloud_storage = 1.0;
  double rrh_fixed = 25.0;
  double rrh_compute = 1.0;
  double rrh_storage = 1.0;
  double rrh_rb = 0.05;
  double link_bw = 1.0;
  double loopback_bw = 0.01;
};

struct RrhCaps {
  double rb = 100.0;
  double compute = 0.0;
  double storage = 0.0;
  double loopback_bw = 0.0;
};

struct FatTreeSpec {
  int k = 4;  // even, >= 2
  FatTreeLevelCaps core;
  FatTreeLevelCaps agg;
  FatTreeLevelCaps edge;  // edge.down_link_bw feeds the RRH leaves
  RrhCaps rrh;
  FatTreeCosts costs;
};

// k-ary fat-tree with core/aggregation/edge cloud layers and k^3/4 RRH leaves
// at the given positions. All inter-level links are bidirectional (two
// directed links); every node gets a loopback link.
InfrastructureGraph build_fat_tree(const FatTreeSpec& spec,
                                   const std::vector<Point>& rrh_positions);

struct FatTreeShape {
  int core_nodes;
  int agg_nodes;
  int edge_nodes;
  int rrh_nodes;
  int total_nodes;
  int directed_links;  // including loopbacks
};

FatTreeShape fat_tree_shape(int k);

}  // namespace sliceprov
