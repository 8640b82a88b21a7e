#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aggtree/rational.hpp"

namespace aggtree {

// Edge: node.cost is the cost of the edge to the parent (0 at the root).
// Node: node.cost is the node's own cost, strictly positive.
enum class CostModel { Edge, Node };

std::string cost_model_str(CostModel model);
CostModel cost_model_from(const std::string& text);

struct TreeNode {
  int id = 0;       // external id, unique but not necessarily dense
  int parent = -1;  // index into CostTree::nodes, -1 at the root
  Rat cost;
  std::vector<int> children;  // indices, in node-list order
};

struct NodeSpec {
  int id = 0;
  std::optional<int> parent_id;
  Rat cost;
};

struct CostTree {
  CostModel model = CostModel::Node;
  std::vector<TreeNode> nodes;  // file / construction order
  int root = -1;                // index
  int depth = 0;                // max parent links on any root-to-leaf path
  std::unordered_map<int, int> index_by_id;

  int size() const { return static_cast<int>(nodes.size()); }
  bool has_node(int id) const { return index_by_id.count(id) != 0; }
  int index_of(int id) const;  // throws SemanticError on unknown id
  int id_at(int idx) const { return nodes[idx].id; }
  const Rat& cost_at(int idx) const { return nodes[idx].cost; }
  bool in_subtree(int ancestor_idx, int idx) const;
  // idx first, root last
  std::vector<int> path_to_root(int idx) const;
};

// Validates and assembles a tree: exactly one root, parent links that reach
// every node (anything else is "not a tree"), and cost signs per model.
CostTree build_tree(CostModel model, const std::vector<NodeSpec>& specs);

// True iff every non-root node u with parent v satisfies 3*c(u) <= c(v).
// Rejects edge-model input.
bool validate_3decreasing(const CostTree& tree);

}  // namespace aggtree
