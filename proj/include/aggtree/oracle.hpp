#pragma once

#include <vector>

#include "aggtree/simulator.hpp"

namespace aggtree {

// The search enumerates one candidate time per request, so its size is
// bounded by times^requests (with pruning). Instances over the caps are
// refused with CapsExceeded, never answered heuristically.
struct OracleLimits {
  int max_requests = 10;
  int max_times = 8;
};

struct OptSolution {
  Rat cost;
  Schedule schedule;  // minimum-cost witness
  long long placements_tried = 0;
};

// Distinct deadlines, ascending. Any feasible schedule can be shifted so
// every transmission lands on one of these without changing its cost: each
// transmission moves forward to the earliest deadline among the requests it
// services, which stays inside every serviced window.
std::vector<Rat> candidate_times(const std::vector<Request>& requests);

// Exact offline optimum over a Node-model instance: assigns each request a
// transmission time from candidate_times within its window, merges requests
// assigned the same time into one transmission (the union of their root
// paths), and minimizes total cost by exhaustive search with incumbent
// pruning. Deterministic: the lexicographically earliest witness wins ties.
OptSolution solve_opt(const Instance& instance, const OracleLimits& limits = {});

// Optimum for the requests left after the first i events, on the full tree.
Rat opt_suffix(const Transcript& transcript, int i, const OracleLimits& limits = {});
// Per-tree form: forest tree `tree_index` with its own suffix set.
Rat opt_suffix_tree(const Transcript& transcript, int tree_index, int i,
                    const OracleLimits& limits = {});

}  // namespace aggtree
