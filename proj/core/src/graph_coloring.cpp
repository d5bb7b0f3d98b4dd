#include "toricgraph/graph_coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

struct ColorSearch {
    int n;
    int k;
    std::vector<std::uint32_t> adj;  // 0-based vertex bitmasks
    std::vector<int> color;          // 0 = unassigned
    std::vector<int> degree;

    bool solve(int colored, int used) {
        if (colored == n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != 0) continue;
            std::uint32_t seen = 0;
            std::uint32_t m = adj[static_cast<std::size_t>(v)];
            while (m != 0) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (int c = color[static_cast<std::size_t>(w)]; c != 0) seen |= 1u << c;
            }
            int sat = std::popcount(seen);
            int deg = degree[static_cast<std::size_t>(v)];
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::uint32_t blocked = 0;
        std::uint32_t m = adj[static_cast<std::size_t>(pick)];
        while (m != 0) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (int c = color[static_cast<std::size_t>(w)]; c != 0) blocked |= 1u << c;
        }
        int cap = std::min(used + 1, k);  // colors beyond the first fresh one are symmetric
        for (int c = 1; c <= cap; ++c) {
            if ((blocked & (1u << c)) != 0) continue;
            color[static_cast<std::size_t>(pick)] = c;
            if (solve(colored + 1, std::max(used, c))) return true;
            color[static_cast<std::size_t>(pick)] = 0;
        }
        return false;
    }
};

int greedy_clique_bound(int n, const std::vector<std::uint32_t>& adj) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = std::popcount(adj[static_cast<std::size_t>(a)]);
        int db = std::popcount(adj[static_cast<std::size_t>(b)]);
        if (da != db) return da > db;
        return a < b;
    });
    int best = n > 0 ? 1 : 0;
    for (int seed : order) {
        std::uint32_t clique = 1u << seed;
        int size = 1;
        for (int v : order) {
            if (((clique >> v) & 1u) != 0) continue;
            if ((clique & ~adj[static_cast<std::size_t>(v)]) == 0) {
                clique |= 1u << v;
                ++size;
            }
        }
        best = std::max(best, size);
    }
    return best;
}

}  // namespace

int exact_chromatic_number(const Graph& g) {
    if (g.p() > 16) {
        throw CapabilityError("exact coloring supports at most 16 vertices, got " +
                              std::to_string(g.p()));
    }
    int n = g.p();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u - 1)] |= 1u << (e.v - 1);
        adj[static_cast<std::size_t>(e.v - 1)] |= 1u << (e.u - 1);
    }
    if (g.q() == 0) return 1;
    int lower = greedy_clique_bound(n, adj);
    for (int k = lower; k <= n; ++k) {
        ColorSearch search;
        search.n = n;
        search.k = k;
        search.adj = adj;
        search.color.assign(static_cast<std::size_t>(n), 0);
        search.degree.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            search.degree[static_cast<std::size_t>(v)] =
                std::popcount(adj[static_cast<std::size_t>(v)]);
        }
        if (search.solve(0, 0)) return k;
    }
    throw StructuralViolation("no k-coloring found up to k = p");
}

bool chromatic_drop_check(const Graph& g, int edge_id) {
    int before = exact_chromatic_number(g);
    int after = exact_chromatic_number(g.delete_edge(edge_id));
    return before >= after && before - after <= 1;
}

}  // namespace toricgraph
