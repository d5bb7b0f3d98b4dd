#pragma once

#include <string>
#include <vector>

#include "toricgraph/graph.hpp"
#include "toricgraph/ideal.hpp"

namespace toricgraph {

struct PropertyResult {
    std::string name;
    bool pass = false;
    bool applicable = true;  // false: precondition not met (counts as pass)
    std::string detail;
};

struct VerifyOptions {
    int graver_edge_cap = 12;     // skip the two-backend comparison above this
    int cycle_vertex_cap = 12;    // skip bridge/cycle cross-check above this
    int random_orders = 5;        // chromatic bound checked under this many orders
    std::uint64_t seed = 0;
    BuchbergerOptions buchberger;
};

// Runs every per-graph identity and consistency check; a thrown error inside
// a property is reported as its failure.
std::vector<PropertyResult> verify_graph(const Graph& g, const VerifyOptions& options = {});

bool all_pass(const std::vector<PropertyResult>& results);

}  // namespace toricgraph
