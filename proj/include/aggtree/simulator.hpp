#pragma once

#include <string>
#include <vector>

#include "aggtree/schedule.hpp"
#include "aggtree/transmission.hpp"

namespace aggtree {

struct TranscriptEvent {
  Rat time;
  int tree_index = 0;
  VirtualTransmission virt;
  ConcreteTransmission conc;
  std::vector<int> serviced;  // request ids, ascending
};

// Full record of one online run over a Node-model instance.
struct Transcript {
  Instance instance;
  ForestDecomposition decomposition;
  std::vector<TranscriptEvent> events;  // time-ordered; ties by tree index
  Rat alg_cost;                         // sum of concrete union costs
  std::vector<int> per_tree_count;      // transmissions per forest tree
};

// Deadline-triggered online run: arrivals are revealed first at each
// timestamp, then trees with a matured active request transmit (lowest tree
// index first), repeating at the same timestamp until none remains.
// Terminates with every request serviced; anything else is an internal
// error.
Transcript run_online(const Instance& node_instance);

// Requests not yet serviced after the first i events (includes requests
// that arrive later). 0 <= i <= events count.
std::vector<Request> suffix_requests(const Transcript& transcript, int i);
// Same, scoped to one forest tree and its own first i transmissions.
std::vector<Request> suffix_requests_tree(const Transcript& transcript,
                                          int tree_index, int i);

// The concrete transmissions as a plain schedule over the instance tree.
Schedule transcript_schedule(const Transcript& transcript);

std::string serialize_transcript(const Transcript& transcript);

// Re-checks every event of the transcript, reconstructing the active set at
// each point so the progress check runs too.
std::vector<InvariantViolation> check_transcript_invariants(const Transcript& transcript);

}  // namespace aggtree
