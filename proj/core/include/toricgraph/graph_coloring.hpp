#pragma once

#include "toricgraph/graph.hpp"

namespace toricgraph {

// Exact chromatic number by branch and bound (DSATUR vertex selection, greedy
// clique lower bound). Exhaustive for p <= 16; larger graphs raise
// CapabilityError.
int exact_chromatic_number(const Graph& g);

// True iff 0 <= chi(g) - chi(g minus the edge) <= 1, both sides exact.
bool chromatic_drop_check(const Graph& g, int edge_id);

}  // namespace toricgraph
