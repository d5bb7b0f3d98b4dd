// Finite simple graphs with stable edge labels.  Vertices are 1..p; edges
// keep the id assigned at parse time, so deleting edge e3 leaves e1,e2,e4,...
// intact.  Ring slot j of algebraic objects corresponds to edges()[j].
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace toricgraph {

struct Edge {
    int id;
    int u;
    int v;

    bool operator==(const Edge&) const = default;
};

class Graph {
public:
    // fresh graph; edge ids are assigned 1..q in list order
    Graph(int p, const std::vector<std::pair<int, int>>& endpoints);

    // file format: optional '#' comment and blank lines, first data line is
    // the vertex count, then one "u v" pair per line
    static Graph parse(const std::string& text);
    static Graph parse_file(const std::string& path);

    int p() const { return p_; }
    int q() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t slot) const { return edges_.at(slot); }
    const Edge& edge_by_id(int id) const;
    std::size_t slot_of_id(int id) const;
    bool has_edge_id(int id) const;

    Graph delete_edge(int id) const;

    // adjacency among vertices (1-based)
    bool adjacent(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    // per-slot variable names "e<id>"
    std::vector<std::string> labels() const;

    std::string str() const;

private:
    friend Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

    Graph() = default;
    static Graph from_edges(int p, std::vector<Edge> edges);

    int p_ = 0;
    std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);

struct Bipartition {
    std::vector<int> side_a;  // sorted vertex lists
    std::vector<int> side_b;
};

// nullopt when some component has an odd cycle
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// edge ids whose removal disconnects their component, ascending
std::vector<int> bridges(const Graph& g);

int max_degree(const Graph& g);

// vertex sets of connected components, each sorted, ordered by least vertex
std::vector<std::vector<int>> components(const Graph& g);

// subgraph induced by a vertex set, keeping original vertex numbers compacted
// to 1..k in sorted order and original edge ids
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace toricgraph
