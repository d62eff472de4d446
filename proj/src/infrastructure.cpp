#include "sliceprov/infrastructure.hpp"

#include <stdexcept>

namespace sliceprov {

void InfrastructureGraph::add_node(InfraNode node) {
  if (node_index_.count(node.id))
    throw std::invalid_argument("duplicate infrastructure node id: " + node.id);
  node_index_[node.id] = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
}

void InfrastructureGraph::add_link(InfraLink link) {
  if (!has_node(link.src) || !has_node(link.dst))
    throw std::invalid_argument("link endpoint not in graph: " + link.src + "->" + link.dst);
  std::string key = link.src + "\x1f" + link.dst;
  if (link_index_.count(key))
    throw std::invalid_argument("duplicate infrastructure link: " + link.src + "->" + link.dst);
  link_index_[key] = static_cast<int>(links_.size());
  links_.push_back(std::move(link));
}

bool InfrastructureGraph::has_node(const std::string& id) const {
  return node_index_.count(id) > 0;
}

const InfraNode& InfrastructureGraph::node(const std::string& id) const {
  return nodes_[node_index(id)];
}

int InfrastructureGraph::node_index(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end())
    throw std::invalid_argument("unknown infrastructure node: " + id);
  return it->second;
}

std::vector<int> InfrastructureGraph::rrh_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].kind == NodeKind::rrh) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> InfrastructureGraph::cloud_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].kind == NodeKind::cloud) out.push_back(static_cast<int>(i));
  return out;
}

int InfrastructureGraph::link_index(const std::string& src, const std::string& dst) const {
  auto it = link_index_.find(src + "\x1f" + dst);
  return it == link_index_.end() ? -1 : it->second;
}

void InfrastructureGraph::validate() const {
  for (const auto& n : nodes_) {
    if (n.compute_capacity < 0 || n.storage_capacity < 0 || n.rb_capacity < 0)
      throw std::invalid_argument("negative capacity at node " + n.id);
    if (n.fixed_cost < 0 || n.compute_cost < 0 || n.storage_cost < 0 || n.rb_cost < 0)
      throw std::invalid_argument("negative cost at node " + n.id);
    if (n.rb_capacity > 0 && n.kind != NodeKind::rrh)
      throw std::invalid_argument("non-rrh node with radio capacity: " + n.id);
    if (n.kind == NodeKind::rrh && !n.position)
      throw std::invalid_argument("rrh node without position: " + n.id);
  }
  for (const auto& l : links_) {
    if (l.bandwidth < 0)
      throw std::invalid_argument("negative bandwidth on " + l.src + "->" + l.dst);
    if (!has_node(l.src) || !has_node(l.dst))
      throw std::invalid_argument("dangling link endpoint");
  }
}

FatTreeShape fat_tree_shape(int k) {
  FatTreeShape s{};
  s.core_nodes = (k / 2) * (k / 2);
  s.agg_nodes = k * k / 2;
  s.edge_nodes = k * k / 2;
  s.rrh_nodes = k * k * k / 4;
  s.total_nodes = s.core_nodes + s.agg_nodes + s.edge_nodes + s.rrh_nodes;
  // core-agg + agg-edge + edge-rrh undirected pairs, doubled, plus loopbacks.
  int undirected = s.agg_nodes * (k / 2) + k * (k / 2) * (k / 2) + s.rrh_nodes;
  s.directed_links = 2 * undirected + s.total_nodes;
  return s;
}

InfrastructureGraph build_fat_tree(const FatTreeSpec& spec,
                                   const std::vector<Point>& rrh_positions) {
  const int k = spec.k;
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("fat-tree arity k must be even and >= 2");
  const FatTreeShape shape = fat_tree_shape(k);
  if (static_cast<int>(rrh_positions.size()) != shape.rrh_nodes)
    throw std::invalid_argument("expected " + std::to_string(shape.rrh_nodes) +
                                " rrh positions, got " + std::to_string(rrh_positions.size()));

  InfrastructureGraph g;
  auto cloud = [&](const std::string& id, const FatTreeLevelCaps& caps) {
    InfraNode n;
    n.id = id;
    n.kind = NodeKind::cloud;
    n.compute_capacity = caps.compute;
    n.storage_capacity = caps.storage;
    n.fixed_cost = spec.costs.cloud_fixed;
    n.compute_cost = spec.costs.cloud_compute;
    n.storage_cost = spec.costs.cloud_storage;
    g.add_node(n);
  };

  for (int c = 0; c < shape.core_nodes; ++c) cloud("core" + std::to_string(c), spec.core);
  for (int a = 0; a < shape.agg_nodes; ++a) cloud("agg" + std::to_string(a), spec.agg);
  for (int e = 0; e < shape.edge_nodes; ++e) cloud("edge" + std::to_string(e), spec.edge);
  for (int r = 0; r < shape.rrh_nodes; ++r) {
    InfraNode n;
    n.id = "rrh" + std::to_string(r);
    n.kind = NodeKind::rrh;
    n.compute_capacity = spec.rrh.compute;
    n.storage_capacity = spec.rrh.storage;
    n.rb_capacity = spec.rrh.rb;
    n.position = rrh_positions[r];
    n.fixed_cost = spec.costs.rrh_fixed;
    n.compute_cost = spec.costs.rrh_compute;
    n.storage_cost = spec.costs.rrh_storage;
    n.rb_cost = spec.costs.rrh_rb;
    g.add_node(n);
  }

  auto bidir = [&](const std::string& a, const std::string& b, double bw) {
    g.add_link({a, b, bw, spec.costs.link_bw});
    g.add_link({b, a, bw, spec.costs.link_bw});
  };

  const int half = k / 2;
  // Core <-> aggregation: aggregation switch j of a pod connects to core
  // switches [j*k/2, (j+1)*k/2).
  for (int pod = 0; pod < k; ++pod) {
    for (int j = 0; j < half; ++j) {
      int agg = pod * half + j;
      for (int c = j * half; c < (j + 1) * half; ++c)
        bidir("core" + std::to_string(c), "agg" + std::to_string(agg), spec.core.down_link_bw);
    }
  }
  // Aggregation <-> edge: complete bipartite within a pod.
  for (int pod = 0; pod < k; ++pod)
    for (int j = 0; j < half; ++j)
      for (int e = 0; e < half; ++e)
        bidir("agg" + std::to_string(pod * half + j), "edge" + std::to_string(pod * half + e),
              spec.agg.down_link_bw);
  // Edge <-> rrh leaves: each edge switch hosts k/2 leaves.
  for (int e = 0; e < shape.edge_nodes; ++e)
    for (int j = 0; j < half; ++j)
      bidir("edge" + std::to_string(e), "rrh" + std::to_string(e * half + j),
            spec.edge.down_link_bw);

  auto loop = [&](const std::string& id, double bw) {
    g.add_link({id, id, bw, spec.costs.loopback_bw});
  };
  for (int c = 0; c < shape.core_nodes; ++c) loop("core" + std::to_string(c), spec.core.loopback_bw);
  for (int a = 0; a < shape.agg_nodes; ++a) loop("agg" + std::to_string(a), spec.agg.loopback_bw);
  for (int e = 0; e < shape.edge_nodes; ++e) loop("edge" + std::to_string(e), spec.edge.loopback_bw);
  for (int r = 0; r < shape.rrh_nodes; ++r) loop("rrh" + std::to_string(r), spec.rrh.loopback_bw);

  g.validate();
  return g;
}

}  // namespace sliceprov
