// Exact minimum vertex cover (transversal) of a small hypergraph via branch
// and bound.  Vertices are ring slots; hyperedges are monomial supports.
#pragma once

#include <cstddef>
#include <vector>

namespace toricgraph {

struct Hypergraph {
    std::size_t nvertices = 0;
    std::vector<std::vector<std::size_t>> edges;
};

// Lexicographically least minimum cover (as a sorted slot list).  Errors on
// an empty hyperedge, which no vertex set can cover.
std::vector<std::size_t> min_vertex_cover(const Hypergraph& h);

// Every minimum cover, sorted lexicographically.
std::vector<std::vector<std::size_t>> all_minimum_covers(const Hypergraph& h);

}  // namespace toricgraph
