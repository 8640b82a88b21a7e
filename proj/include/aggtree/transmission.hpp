#pragma once

#include <map>
#include <string>
#include <vector>

#include "aggtree/reductions.hpp"

namespace aggtree {

// Output of one budgeted selection on a 3-decreasing tree.
struct VirtualTransmission {
  int tree_index = 0;
  Rat time;                 // selection time
  std::vector<int> nodes;   // T in insertion order; nodes.front() is the root
  std::map<int, Rat> budgets;
  // Per node of T, in insertion order, the nodes it pulled in (may be empty).
  std::map<int, std::vector<int>> a_sets;
  std::map<int, int> levels;  // root 0; members of A_u get level(u) + 1
  std::vector<int> serviced;  // request ids, ascending
  Rat cost;                   // sum of node costs over T
};

// Grows the transmission tree from the root. The root starts with budget
// 2*c(r); each dequeued node u keeps adding the root path of the
// earliest-deadline active request below it while c(A_u) <= budget(u)/2
// holds before the addition (ties broken by arrival, then request id), then
// splits its budget among the added nodes proportionally to their cost.
// Queue discipline is FIFO; A_u members enqueue in insertion order, topmost
// new path node first.
VirtualTransmission select_transmission_tree(const CostTree& tree,
                                             const std::vector<Request>& active,
                                             const Rat& now);

struct ConcreteTransmission {
  std::vector<int> node_union;  // union of B_u over u in T, sorted ids
  Rat union_cost;               // cost of the union in the normalized tree
  Rat multiset_cost;            // sum of c(B_u), counting duplicates
};

ConcreteTransmission expand_concrete(const VirtualTransmission& virt,
                                     const ForestDecomposition& decomposition,
                                     const CostTree& normalized_tree);

struct InvariantViolation {
  std::string check;
  int node_id = -1;  // witnessing node when applicable
  std::string detail;
};

// Empty result iff the transmission satisfies every per-transmission
// inequality: budget conservation and dominance, the A-set cost bound, the
// per-level budget bound, the virtual cost bound 2(D+1)c(r) on the forest
// tree, the concrete bound union <= multiset <= 6(D+1)c(r) on the source
// tree, root-connectivity of both node sets, and service progress (the
// progress check against the earliest deadline runs when `active` is given).
std::vector<InvariantViolation> check_transmission_invariants(
    const VirtualTransmission& virt, const ConcreteTransmission& conc,
    const CostTree& forest_tree, const CostTree& normalized_tree,
    const std::vector<Request>* active = nullptr);

}  // namespace aggtree
