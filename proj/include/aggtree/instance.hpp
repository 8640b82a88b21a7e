#pragma once

#include <string>
#include <vector>

#include "aggtree/tree.hpp"

namespace aggtree {

// A deadline request: must be serviced by a transmission whose time lies in
// the closed window [arrival, deadline] and whose node set contains node_id.
struct Request {
  int id = 0;
  int node_id = 0;
  Rat arrival;
  Rat deadline;
};

struct Instance {
  CostTree tree;
  std::vector<Request> requests;
  std::string comment;  // free-form note, carried through serialization
};

// Canonical instance file format:
//   {"cost_model":"edge"|"node",
//    "nodes":[{"id":int,"parent":int|null,"cost":"<p/q or decimal>"}],
//    "requests":[{"id":int,"node":int,"arrival":"<rational>","deadline":"<rational>"}]}
// Rationals are strings (or JSON integers); floats are rejected as inexact.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

void validate_instance(const Instance& instance);  // throws SemanticError

const Request* find_request(const Instance& instance, int request_id);

}  // namespace aggtree
