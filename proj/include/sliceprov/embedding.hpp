#pragma once

#include <string>
#include <vector>

#include "sliceprov/infrastructure.hpp"
#include "sliceprov/milp/model.hpp"
#include "sliceprov/milp/solve.hpp"
#include "sliceprov/provisioning.hpp"
#include "sliceprov/slice.hpp"

namespace sliceprov {

// One service chain instance: per-instance demands, each VNF placed on
// exactly one infrastructure node.
struct SfcVnf {
  std::string id;
  double compute = 0.0;  // CPUs per instance
  double storage = 0.0;  // GBytes per instance
};

struct SfcLink {
  std::string src;
  std::string dst;
  double bandwidth = 0.0;  // Gbps per instance
};

struct SfcInstance {
  std::vector<SfcVnf> nodes;
  std::vector<SfcLink> links;

  int node_index(const std::string& id) const;
};

// Per-instance chain derived from a slice's aggregate demand graph: VNF
// demands are the single-instance floors; link bandwidth is the aggregate
// bandwidth scaled by the source VNF's floor-to-demand ratio.
SfcInstance sfc_from_slice(const SliceSpec& slice);

// The slice whose aggregate demand equals `count` instances of the chain
// (radio demand cleared; the baseline embeds the wired part only).
SliceSpec slice_for_sfc_count(const SliceSpec& slice, int count);

// Absolute resource amounts already committed on the infrastructure.
struct EmbedUsage {
  std::vector<double> node_compute;  // by node index
  std::vector<double> node_storage;
  std::vector<double> link_bw;       // by link index
  std::vector<char> node_used;       // fixed cost already paid

  static EmbedUsage zero(const InfrastructureGraph& infra);
};

enum class EmbedMode { joint, sequential_step };

// Placement ILP: binaries x_<f>_<i>_<v> (SFC f, node i, VNF v), node-use
// binaries u_<i>, link flows y_<f>_<l>_<e> in Gbps. Capacities are reduced by
// `usage`; sequential_step requires exactly one SFC.
milp::Model build_embedding_ilp(const InfrastructureGraph& infra,
                                const std::vector<SfcInstance>& sfcs, EmbedMode mode,
                                const EmbedUsage& usage);

struct EmbeddingSolution {
  milp::SolveStatus status = milp::SolveStatus::error;
  std::vector<std::vector<int>> placement;  // [sfc][vnf] -> infra node index
  double cost = 0.0;
  double solve_time = 0.0;  // solver time, summed over steps
};

EmbeddingSolution embed_joint(const InfrastructureGraph& infra,
                              const std::vector<SfcInstance>& sfcs, const EmbedUsage& usage,
                              const milp::SolveOptions& opts = {});
// Embeds one SFC at a time in list order, accumulating committed resources.
EmbeddingSolution embed_sequential(const InfrastructureGraph& infra,
                                   const std::vector<SfcInstance>& sfcs, EmbedUsage usage,
                                   const milp::SolveOptions& opts = {});

// Infrastructure restricted to what a provisioning solution reserved for one
// slice: used nodes and loaded links, capacities scaled to the provisioned
// shares (with a relative 1e-6 slack so exact-fit embeddings stay feasible).
InfrastructureGraph reduce_graph(const InfrastructureGraph& infra,
                                 const std::vector<SliceSpec>& slices,
                                 const ProvisioningSolution& prov, int slice_index);

struct ComparisonRow {
  std::string method;  // prov-joint-emb | prov-seq-emb | dir-joint-emb | dir-seq-emb
  int sfc_count = 0;
  double cost = 0.0;
  double time_s = 0.0;  // wall clock; prov-* rows include the provisioning solve
  std::string status;
};

// Embedding-cost/time sweep: for each count, embeds that many copies of the
// slice's chain directly on the full graph and on the provision-reduced graph,
// jointly and sequentially. Infeasibility is recorded per row.
std::vector<ComparisonRow> run_comparison(const InfrastructureGraph& infra,
                                          const SliceSpec& slice,
                                          const std::vector<int>& sfc_counts,
                                          const ProvisionOptions& opts = {});

}  // namespace sliceprov
