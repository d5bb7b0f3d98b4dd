#include "toricgraph/graph_cycles.hpp"

#include <algorithm>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

struct CycleSearch {
    const Graph& g;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, slot)
    std::vector<bool> on_path;
    std::vector<int> path_vertices;
    std::vector<int> path_slots;
    int root = 0;
    std::vector<std::vector<int>> found;

    explicit CycleSearch(const Graph& graph)
        : g(graph),
          adj(static_cast<std::size_t>(graph.p()) + 1),
          on_path(static_cast<std::size_t>(graph.p()) + 1, false) {
        for (std::size_t slot = 0; slot < g.edges().size(); ++slot) {
            const Edge& e = g.edges()[slot];
            adj[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<int>(slot)});
            adj[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<int>(slot)});
        }
    }

    void run() {
        for (root = 1; root <= g.p(); ++root) {
            on_path[static_cast<std::size_t>(root)] = true;
            path_vertices = {root};
            path_slots.clear();
            dfs(root);
            on_path[static_cast<std::size_t>(root)] = false;
        }
    }

    // Each cycle is rooted at its least vertex and recorded once: of the two
    // traversal directions, keep the one whose first step is the smaller
    // neighbor of the root.
    void dfs(int v) {
        for (auto [w, slot] : adj[static_cast<std::size_t>(v)]) {
            if (w == root) {
                if (path_vertices.size() >= 3 && path_vertices[1] < v) {
                    std::vector<int> cycle;
                    cycle.reserve(path_slots.size() + 1);
                    for (int s : path_slots) {
                        cycle.push_back(g.edges()[static_cast<std::size_t>(s)].id);
                    }
                    cycle.push_back(g.edges()[static_cast<std::size_t>(slot)].id);
                    found.push_back(std::move(cycle));
                }
                continue;
            }
            if (w < root || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            path_vertices.push_back(w);
            path_slots.push_back(slot);
            dfs(w);
            path_slots.pop_back();
            path_vertices.pop_back();
            on_path[static_cast<std::size_t>(w)] = false;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> simple_cycles(const Graph& g) {
    if (g.p() > 12) {
        throw CapabilityError("cycle enumeration supports at most 12 vertices, got " +
                              std::to_string(g.p()));
    }
    CycleSearch search(g);
    search.run();
    std::vector<std::pair<std::vector<int>, std::vector<int>>> keyed;
    keyed.reserve(search.found.size());
    for (auto& cycle : search.found) {
        std::vector<int> key = cycle;
        std::sort(key.begin(), key.end());
        keyed.push_back({std::move(key), std::move(cycle)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<std::vector<int>> out;
    out.reserve(keyed.size());
    for (auto& [key, cycle] : keyed) out.push_back(std::move(cycle));
    return out;
}

EdgeCycleProfile edge_cycle_profile(const Graph& g, int edge_id) {
    g.slot_of_id(edge_id);  // validates the id
    EdgeCycleProfile out;
    out.in_every_odd_cycle = true;
    for (const auto& cycle : simple_cycles(g)) {
        bool through = std::find(cycle.begin(), cycle.end(), edge_id) != cycle.end();
        if (cycle.size() % 2 == 0) {
            if (through) out.in_some_even_cycle = true;
        } else if (!through) {
            out.in_every_odd_cycle = false;
        }
    }
    return out;
}

}  // namespace toricgraph
