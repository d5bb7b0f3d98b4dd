#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toricgraph/graph.hpp"
#include "toricgraph/ideal.hpp"
#include "toricgraph/monomial.hpp"
#include "toricgraph/order.hpp"

namespace toricgraph {

// Vertices are the ring slots; hyperedges are the supports of the minimal
// generators of an initial ideal.
struct SupportHypergraph {
    std::size_t nvars = 0;
    std::vector<std::vector<std::size_t>> hyperedges;
};

SupportHypergraph support_hypergraph(std::size_t nvars, const std::vector<Monomial>& init_gens);

// Exact minimum covers by variable slots; the deterministic pick is the
// lexicographically least among the minimum covers.
std::vector<std::size_t> min_variable_cover(const SupportHypergraph& h);
std::vector<std::vector<std::size_t>> all_min_variable_covers(const SupportHypergraph& h);

struct ChromaticCertificate {
    MonomialOrder order;
    std::vector<Monomial> init_gens;
    std::vector<std::size_t> cover;    // slots, ascending
    int bound = 3;                     // |cover| + 3
    int exact_chi = 0;
    int delta_plus_one = 0;
    bool cover_is_minimum = true;
    std::vector<std::size_t> witness;  // per init generator: its covering slot

    explicit ChromaticCertificate(MonomialOrder o) : order(std::move(o)) {}
};

// Builds the bound certificate and mechanically checks containment of the
// initial ideal in the cover ideal, minimality of the cover, and the bound
// itself; violations raise StructuralViolation.
ChromaticCertificate chromatic_certificate(const Graph& g, const MonomialOrder& order,
                                           const BuchbergerOptions& options = {});

// 3 when the toric ideal is zero, 4 when its reduced basis is a single
// element, absent otherwise.
std::optional<int> principal_shortcut(const Graph& g, const BuchbergerOptions& options = {});

// Evaluates a deterministic stream of lex orders (identity, degree-sorted,
// then seeded random permutations) and returns the certificate with the
// smallest bound; ties break on the order's serialization.
ChromaticCertificate order_search(const Graph& g, int budget, std::uint64_t seed = 0,
                                  const BuchbergerOptions& options = {});

}  // namespace toricgraph
