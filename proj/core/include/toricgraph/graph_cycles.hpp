#pragma once

#include <vector>

#include "toricgraph/graph.hpp"

namespace toricgraph {

// Every simple cycle of g, each as edge ids in traversal order. The list is
// sorted by (length, sorted id set) so results are stable across runs.
// Exhaustive enumeration is only offered for p <= 12; larger graphs raise
// CapabilityError instead of risking a truncated answer.
std::vector<std::vector<int>> simple_cycles(const Graph& g);

struct EdgeCycleProfile {
    bool in_some_even_cycle = false;
    bool in_every_odd_cycle = false;  // vacuously true when g has no odd cycle
};

EdgeCycleProfile edge_cycle_profile(const Graph& g, int edge_id);

}  // namespace toricgraph
