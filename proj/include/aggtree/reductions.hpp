#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aggtree/instance.hpp"

namespace aggtree {

// ---------------------------------------------------------------------------
// Edge-cost -> positive node-cost normalization
// ---------------------------------------------------------------------------

struct SplitResult {
  // One edge-model sub-instance per root child; each keeps the root node.
  std::vector<Instance> parts;
  // Requests at the root, serviced for free.
  std::vector<Request> dropped_requests;
};

SplitResult split_at_root(const Instance& edge_instance);

struct NormalizedInstance {
  Instance node_instance;  // Node model, strictly positive costs
  Instance original;       // the edge-model part this was derived from
  // Normalized node id -> original node ids it stands for: the node itself
  // first, then any zero-cost nodes merged into it.
  std::map<int, std::vector<int>> provenance;
  // Original node id -> normalized node id. Covers every original node of
  // the part except the root and removed zero-cost roots.
  std::map<int, int> survivor_of;
  std::vector<Request> dropped_requests;  // serviced for free
};

// Single-instance reduction: push each edge cost to its lower endpoint, drop
// the root, merge zero-cost nodes into their parents (requests re-target to
// the survivor). Pre: edge model, root with exactly one child, no requests
// at the root. Throws SemanticError when the result cannot be one positive
// tree ("degenerate zero-cost tree", "zero-cost root splits instance");
// normalize_instance handles those cases.
NormalizedInstance edge_to_node(const Instance& part);

struct NormalizationResult {
  std::vector<NormalizedInstance> parts;
  // Every request serviced for free: requests at the root plus requests
  // whose whole root path carries zero cost. Not attributed to parts.
  std::vector<Request> dropped_requests;
};

// Full pipeline for arbitrary edge instances: splits at the root, pushes
// costs down, and splits again at any zero-cost root that appears.
NormalizationResult normalize_instance(const Instance& edge_instance);

struct MappedSubtree {
  std::vector<int> node_ids;              // original nodes, sorted
  std::vector<std::pair<int, int>> edges;  // (parent id, child id), sorted
  Rat cost;                               // edge-model cost
};

// Expands a rooted node set of the normalized tree into the corresponding
// original edge-model subtree (un-merging zero-cost nodes, re-attaching the
// original root). Total cost is identical by construction.
MappedSubtree map_back(const std::vector<int>& normalized_nodes,
                       const NormalizedInstance& normalized);

// ---------------------------------------------------------------------------
// Forest of 3-decreasing trees
// ---------------------------------------------------------------------------

struct ForestDecomposition {
  std::vector<CostTree> trees;             // Node model, each 3-decreasing
  std::map<int, std::vector<int>> b_sets;  // node id -> B_u, bottom-up from u
  std::map<int, int> tree_of_node;         // node id -> tree index
  std::map<int, int> request_partition;    // request id -> tree index
  int source_depth = 0;                    // depth of the decomposed tree
};

// Connects each node u to the first ancestor v with c(v) >= 3*c(u); nodes
// with no such ancestor become forest roots. B_u is the original path from u
// up to (excluding) v, or up to and including the original root when u is a
// forest root. Trees are indexed by ascending root id.
ForestDecomposition decompose_forest(const Instance& node_instance);

// Debug dump ({"trees":[...],"b_sets":{...}}); not a stable format.
std::string serialize_decomposition(const ForestDecomposition& decomposition);

}  // namespace aggtree
