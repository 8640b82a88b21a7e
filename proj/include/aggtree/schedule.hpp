#pragma once

#include <string>
#include <vector>

#include "aggtree/instance.hpp"

namespace aggtree {

// One transmitted rooted subtree. node_ids are sorted ascending.
struct Transmission {
  Rat time;
  std::vector<int> node_ids;
  Rat cost;
};

struct Schedule {
  std::vector<Transmission> transmissions;  // time-ordered
  Rat total_cost;
};

// Cost of transmitting node_ids in tree: node-cost sum in the Node model,
// parent-edge sum over non-root members in the Edge model.
Rat transmission_cost(const CostTree& tree, const std::vector<int>& node_ids);

inline constexpr int kUnserviced = -1;

struct FeasibilityReport {
  // Root-connectivity, node validity and cost-consistency problems. These
  // are distinct from infeasibility: a structurally broken schedule is not
  // judged on service at all.
  std::vector<std::string> structural_errors;
  // Per request (instance order): index of the servicing transmission, or
  // kUnserviced.
  std::vector<int> serviced_by;
  bool feasible = false;
  bool structurally_valid() const { return structural_errors.empty(); }
};

FeasibilityReport verify_feasible(const Schedule& schedule, const Instance& instance);

std::string serialize_schedule(const Schedule& schedule);
Schedule parse_schedule(const std::string& text);

}  // namespace aggtree
