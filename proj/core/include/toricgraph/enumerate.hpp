#pragma once

#include <vector>

#include "toricgraph/graph.hpp"
#include "toricgraph/rng.hpp"

namespace toricgraph {

// One representative per isomorphism class of connected graphs on exactly p
// vertices, deterministically ordered.  Supported through p = 7 (853
// classes); beyond that raises CapabilityError.  The per-size class counts
// are asserted against the known table.
std::vector<Graph> connected_graphs(int p);

// Concatenation of connected_graphs(1..max_p).
std::vector<Graph> connected_graphs_up_to(int max_p);

// Random spanning tree plus each remaining pair with probability
// extra_percent/100; byte-identical for a fixed seed.
Graph random_connected_graph(Rng& rng, int p, int extra_percent);

}  // namespace toricgraph
