#include "toricgraph/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

constexpr int kMaxEnum = 7;
// isomorphism classes of all / connected graphs on n = 1..7 vertices
constexpr std::array<std::size_t, 8> kAllCounts{0, 1, 2, 4, 11, 34, 156, 1044};
constexpr std::array<std::size_t, 8> kConnectedCounts{0, 1, 1, 2, 6, 21, 112, 853};

struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, 8> rows{};  // adjacency bitmasks
};

std::uint32_t pack_key(const SmallGraph& g, const std::array<int, 8>& perm) {
    std::uint32_t key = 0;
    int bit = 0;
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j, ++bit) {
            if ((g.rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >>
                 perm[static_cast<std::size_t>(j)]) &
                1) {
                key |= 1u << bit;
            }
        }
    }
    return key;
}

// Minimum packed adjacency over all isomorphisms.  Restricting to
// degree-preserving permutations is complete: the permitted permutation sets
// of isomorphic graphs correspond under any isomorphism, so the minima
// coincide; and the key reconstructs the graph, so distinct classes cannot
// collide.
std::uint32_t canonical_key(const SmallGraph& g) {
    std::array<int, 8> order{};
    std::iota(order.begin(), order.begin() + g.n, 0);
    std::sort(order.begin(), order.begin() + g.n, [&](int a, int b) {
        int da = std::popcount(g.rows[static_cast<std::size_t>(a)]);
        int db = std::popcount(g.rows[static_cast<std::size_t>(b)]);
        if (da != db) return da < db;
        return a < b;
    });
    std::vector<std::pair<int, int>> blocks;  // (start, length) of equal-degree runs
    for (int i = 0; i < g.n;) {
        int j = i;
        auto deg = [&](int k) {
            return std::popcount(g.rows[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]);
        };
        while (j < g.n && deg(j) == deg(i)) ++j;
        blocks.push_back({i, j - i});
        i = j;
    }
    std::uint32_t best = UINT32_MAX;
    std::array<int, 8> perm = order;
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            best = std::min(best, pack_key(g, perm));
            return;
        }
        auto [start, len] = blocks[b];
        std::sort(perm.begin() + start, perm.begin() + start + len);
        do {
            self(self, b + 1);
        } while (std::next_permutation(perm.begin() + start, perm.begin() + start + len));
    };
    rec(rec, 0);
    return best;
}

SmallGraph from_key(int n, std::uint32_t key) {
    SmallGraph g;
    g.n = n;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((key >> bit) & 1) {
                g.rows[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
                g.rows[static_cast<std::size_t>(j)] |= static_cast<std::uint8_t>(1u << i);
            }
        }
    }
    return g;
}

bool small_connected(const SmallGraph& g) {
    std::uint8_t seen = 1;
    std::uint8_t frontier = 1;
    while (frontier != 0) {
        std::uint8_t next = 0;
        std::uint8_t m = frontier;
        while (m != 0) {
            int v = std::countr_zero(m);
            m = static_cast<std::uint8_t>(m & (m - 1));
            next |= g.rows[static_cast<std::size_t>(v)];
        }
        frontier = static_cast<std::uint8_t>(next & ~seen);
        seen |= next;
    }
    return std::popcount(seen) >= g.n;
}

// every isomorphism class on each level, by extending every class one
// vertex below with every attachment mask
std::vector<std::set<std::uint32_t>> levels_up_to(int max_p) {
    std::vector<std::set<std::uint32_t>> levels(static_cast<std::size_t>(max_p) + 1);
    if (max_p >= 1) levels[1] = {0};
    for (int n = 2; n <= max_p; ++n) {
        for (std::uint32_t below : levels[static_cast<std::size_t>(n - 1)]) {
            SmallGraph base = from_key(n - 1, below);
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                SmallGraph g = base;
                g.n = n;
                g.rows[static_cast<std::size_t>(n - 1)] = static_cast<std::uint8_t>(mask);
                std::uint32_t m = mask;
                while (m != 0) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    g.rows[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1u << (n - 1));
                }
                levels[static_cast<std::size_t>(n)].insert(canonical_key(g));
            }
        }
        if (levels[static_cast<std::size_t>(n)].size() != kAllCounts[static_cast<std::size_t>(n)]) {
            throw StructuralViolation("graph enumeration lost an isomorphism class at p = " +
                                      std::to_string(n));
        }
    }
    return levels;
}

Graph to_graph(const SmallGraph& g) {
    std::vector<std::pair<int, int>> endpoints;
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            if ((g.rows[static_cast<std::size_t>(i)] >> j) & 1) endpoints.push_back({i + 1, j + 1});
        }
    }
    return Graph(g.n, endpoints);
}

}  // namespace

std::vector<Graph> connected_graphs(int p) {
    if (p < 1 || p > kMaxEnum) {
        throw CapabilityError("exhaustive enumeration supports 1 <= p <= " +
                              std::to_string(kMaxEnum) + ", got " + std::to_string(p));
    }
    auto levels = levels_up_to(p);
    std::vector<Graph> out;
    for (std::uint32_t key : levels[static_cast<std::size_t>(p)]) {
        SmallGraph g = from_key(p, key);
        if (small_connected(g)) out.push_back(to_graph(g));
    }
    if (out.size() != kConnectedCounts[static_cast<std::size_t>(p)]) {
        throw StructuralViolation("connected-class count mismatch at p = " + std::to_string(p));
    }
    return out;
}

std::vector<Graph> connected_graphs_up_to(int max_p) {
    std::vector<Graph> out;
    for (int p = 1; p <= max_p; ++p) {
        auto batch = connected_graphs(p);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

Graph random_connected_graph(Rng& rng, int p, int extra_percent) {
    if (p < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::set<std::pair<int, int>> chosen;
    for (int v = 2; v <= p; ++v) {
        int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(v - 1))) + 1;
        chosen.insert({parent, v});
    }
    for (int u = 1; u <= p; ++u) {
        for (int v = u + 1; v <= p; ++v) {
            if (rng.below(100) < static_cast<std::uint64_t>(extra_percent)) chosen.insert({u, v});
        }
    }
    return Graph(p, {chosen.begin(), chosen.end()});
}

}  // namespace toricgraph
