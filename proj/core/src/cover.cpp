#include "toricgraph/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace toricgraph {

namespace {

struct CoverSearch {
    const std::vector<std::uint64_t>& edges;
    std::size_t nvertices;
    std::size_t best_size;
    std::vector<std::vector<std::size_t>> best_covers;  // only filled when collecting all
    bool collect_all;

    // disjoint uncovered hyperedges each demand a distinct vertex
    std::size_t matching_bound(std::uint64_t chosen) const {
        std::uint64_t blocked = 0;
        std::size_t bound = 0;
        for (std::uint64_t e : edges) {
            if ((e & chosen) != 0) continue;
            if ((e & blocked) != 0) continue;
            blocked |= e;
            ++bound;
        }
        return bound;
    }

    void record(std::uint64_t chosen, std::size_t size) {
        if (!collect_all) {
            if (size < best_size) {
                best_size = size;
                best_covers.assign(1, unpack(chosen));
            }
            return;
        }
        if (size < best_size) {
            best_size = size;
            best_covers.clear();
        }
        if (size == best_size) best_covers.push_back(unpack(chosen));
    }

    std::vector<std::size_t> unpack(std::uint64_t mask) const {
        std::vector<std::size_t> slots;
        for (std::size_t i = 0; i < nvertices; ++i) {
            if (mask & (std::uint64_t{1} << i)) slots.push_back(i);
        }
        return slots;
    }

    void run(std::uint64_t chosen, std::uint64_t forbidden, std::size_t size) {
        std::size_t allowed = collect_all ? best_size : best_size - 1;
        if (size + matching_bound(chosen) > allowed) return;
        // smallest uncovered hyperedge, first in generator order on ties
        const std::uint64_t* pick = nullptr;
        int pick_count = 0;
        for (const std::uint64_t& e : edges) {
            if ((e & chosen) != 0) continue;
            int count = std::popcount(e);
            if (pick == nullptr || count < pick_count) {
                pick = &e;
                pick_count = count;
            }
        }
        if (pick == nullptr) {
            record(chosen, size);
            return;
        }
        std::uint64_t candidates = *pick & ~forbidden;
        std::uint64_t already_tried = 0;
        for (std::size_t v = 0; v < nvertices; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (!(candidates & bit)) continue;
            run(chosen | bit, forbidden | already_tried, size + 1);
            already_tried |= bit;
        }
    }
};

std::vector<std::uint64_t> pack_edges(const Hypergraph& h) {
    std::vector<std::uint64_t> packed;
    packed.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        if (e.empty()) {
            throw std::invalid_argument("hypergraph has an empty hyperedge; no cover exists");
        }
        std::uint64_t mask = 0;
        for (std::size_t v : e) {
            if (v >= h.nvertices) throw std::invalid_argument("hyperedge vertex out of range");
            mask |= std::uint64_t{1} << v;
        }
        packed.push_back(mask);
    }
    return packed;
}

}  // namespace

std::vector<std::size_t> min_vertex_cover(const Hypergraph& h) {
    auto covers = all_minimum_covers(h);
    return covers.front();
}

std::vector<std::vector<std::size_t>> all_minimum_covers(const Hypergraph& h) {
    auto packed = pack_edges(h);
    if (packed.empty()) return {{}};
    CoverSearch first{packed, h.nvertices, h.nvertices + 1, {}, false};
    first.run(0, 0, 0);
    CoverSearch all{packed, h.nvertices, first.best_size, {}, true};
    all.run(0, 0, 0);
    std::sort(all.best_covers.begin(), all.best_covers.end());
    all.best_covers.erase(std::unique(all.best_covers.begin(), all.best_covers.end()),
                          all.best_covers.end());
    return all.best_covers;
}

}  // namespace toricgraph
