#include "toricgraph/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toricgraph/cover.hpp"
#include "toricgraph/errors.hpp"
#include "toricgraph/graph_coloring.hpp"
#include "toricgraph/rng.hpp"
#include "toricgraph/toric.hpp"

namespace toricgraph {

SupportHypergraph support_hypergraph(std::size_t nvars, const std::vector<Monomial>& init_gens) {
    SupportHypergraph h;
    h.nvars = nvars;
    for (const Monomial& m : init_gens) {
        if (m.is_one()) throw std::invalid_argument("unit generator has an empty support");
        h.hyperedges.push_back(m.support());
    }
    return h;
}

std::vector<std::size_t> min_variable_cover(const SupportHypergraph& h) {
    return min_vertex_cover({h.nvars, h.hyperedges});
}

std::vector<std::vector<std::size_t>> all_min_variable_covers(const SupportHypergraph& h) {
    return all_minimum_covers({h.nvars, h.hyperedges});
}

ChromaticCertificate chromatic_certificate(const Graph& g, const MonomialOrder& order,
                                           const BuchbergerOptions& options) {
    if (!is_connected(g)) {
        throw std::invalid_argument("chromatic certificates are defined for connected graphs");
    }
    ChromaticCertificate cert(order);
    cert.init_gens = initial_ideal(g, order, options);
    SupportHypergraph h = support_hypergraph(static_cast<std::size_t>(g.q()), cert.init_gens);
    cert.cover = min_variable_cover(h);
    cert.bound = static_cast<int>(cert.cover.size()) + 3;
    cert.exact_chi = exact_chromatic_number(g);
    cert.delta_plus_one = max_degree(g) + 1;

    for (const Monomial& m : cert.init_gens) {
        std::size_t covering = h.nvars;
        for (std::size_t slot : cert.cover) {
            if (m[slot] > 0) {
                covering = slot;
                break;
            }
        }
        if (covering == h.nvars) {
            throw StructuralViolation("cover misses initial-ideal generator " + m.str(g.labels()));
        }
        cert.witness.push_back(covering);
    }
    for (std::size_t keep : cert.cover) {
        bool needed = std::any_of(cert.init_gens.begin(), cert.init_gens.end(), [&](const Monomial& m) {
            if (m[keep] == 0) return false;
            return std::none_of(cert.cover.begin(), cert.cover.end(), [&](std::size_t other) {
                return other != keep && m[other] > 0;
            });
        });
        if (!needed) {
            throw StructuralViolation("cover is not minimal: slot " + std::to_string(keep) +
                                      " is redundant");
        }
    }
    if (cert.exact_chi > cert.bound) {
        throw StructuralViolation("chromatic number " + std::to_string(cert.exact_chi) +
                                  " exceeds the certified bound " + std::to_string(cert.bound));
    }
    return cert;
}

std::optional<int> principal_shortcut(const Graph& g, const BuchbergerOptions& options) {
    BinomialIdeal ideal = toric_ideal(g, options);
    if (ideal.is_zero()) return 3;
    BinomialIdeal gb = buchberger(ideal, reference_order(static_cast<std::size_t>(g.q())), options);
    if (gb.generators().size() == 1) return 4;
    return std::nullopt;
}

ChromaticCertificate order_search(const Graph& g, int budget, std::uint64_t seed,
                                  const BuchbergerOptions& options) {
    if (budget < 1) throw std::invalid_argument("order search needs a positive budget");
    std::size_t q = static_cast<std::size_t>(g.q());

    std::vector<std::vector<std::size_t>> perms;
    std::set<std::vector<std::size_t>> seen;
    auto add = [&](std::vector<std::size_t> perm) {
        if (static_cast<int>(perms.size()) < budget && seen.insert(perm).second) {
            perms.push_back(std::move(perm));
        }
    };

    std::vector<std::size_t> identity(q);
    std::iota(identity.begin(), identity.end(), 0);
    add(identity);

    // heavier edges (by endpoint degree sum) first
    std::vector<std::size_t> by_weight = identity;
    std::stable_sort(by_weight.begin(), by_weight.end(), [&](std::size_t a, std::size_t b) {
        const Edge& ea = g.edges()[a];
        const Edge& eb = g.edges()[b];
        int wa = g.degree(ea.u) + g.degree(ea.v);
        int wb = g.degree(eb.u) + g.degree(eb.v);
        if (wa != wb) return wa > wb;
        return ea.id < eb.id;
    });
    add(by_weight);

    Rng rng(seed);
    // small rings can exhaust their distinct permutations before the budget
    for (long attempts = 20L * budget + 100; attempts > 0 && static_cast<int>(perms.size()) < budget;
         --attempts) {
        std::vector<std::size_t> perm = identity;
        rng.shuffle(perm);
        add(perm);
    }

    std::optional<ChromaticCertificate> best;
    std::string best_spec;
    for (const auto& perm : perms) {
        ChromaticCertificate cert = chromatic_certificate(g, MonomialOrder::lex(perm), options);
        std::string spec = cert.order.spec(g.labels());
        if (!best || cert.bound < best->bound || (cert.bound == best->bound && spec < best_spec)) {
            best = std::move(cert);
            best_spec = std::move(spec);
        }
    }
    return *best;
}

}  // namespace toricgraph
