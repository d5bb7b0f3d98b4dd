#include "toricgraph/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "toricgraph/errors.hpp"
#include "toricgraph/graph_cycles.hpp"

namespace toricgraph {

BinomialIdeal toric_ideal(const Graph& g, const BuchbergerOptions& options) {
    std::size_t q = static_cast<std::size_t>(g.q());
    std::vector<Binomial> gens;
    for (const auto& v : integer_kernel_basis(incidence_matrix(g))) {
        gens.push_back(Binomial(Monomial::from_signed_vector_positive(v),
                                Monomial::from_signed_vector_negative(v)));
    }
    return saturate_all(BinomialIdeal(q, std::move(gens)), options);
}

namespace {

// DFS over [-2,2]^q with per-vertex conservation pruning; only vectors whose
// first nonzero entry is positive are emitted (the other orientation is the
// same binomial).
struct KernelBox {
    const Graph& g;
    std::vector<std::vector<std::size_t>> incident;  // vertex (0-based) -> slots
    std::vector<int> remaining;                      // unassigned incident slots per vertex
    std::vector<long long> sum;                      // partial balance per vertex
    std::vector<long long> value;
    bool has_nonzero = false;
    std::vector<std::vector<long long>> out;

    explicit KernelBox(const Graph& graph)
        : g(graph),
          incident(static_cast<std::size_t>(graph.p())),
          remaining(static_cast<std::size_t>(graph.p()), 0),
          sum(static_cast<std::size_t>(graph.p()), 0),
          value(static_cast<std::size_t>(graph.q()), 0) {
        for (std::size_t slot = 0; slot < g.edges().size(); ++slot) {
            const Edge& e = g.edges()[slot];
            incident[static_cast<std::size_t>(e.u - 1)].push_back(slot);
            incident[static_cast<std::size_t>(e.v - 1)].push_back(slot);
            ++remaining[static_cast<std::size_t>(e.u - 1)];
            ++remaining[static_cast<std::size_t>(e.v - 1)];
        }
    }

    bool feasible(std::size_t vertex) const {
        long long s = sum[vertex];
        long long slack = 2LL * remaining[vertex];
        return s == 0 ? true : std::llabs(s) <= slack;
    }

    void dfs(std::size_t slot) {
        if (slot == value.size()) {
            if (has_nonzero) out.push_back(value);
            return;
        }
        const Edge& e = g.edges()[slot];
        std::size_t a = static_cast<std::size_t>(e.u - 1);
        std::size_t b = static_cast<std::size_t>(e.v - 1);
        --remaining[a];
        --remaining[b];
        long long lo = has_nonzero ? -2 : 0;
        for (long long val = lo; val <= 2; ++val) {
            sum[a] += val;
            sum[b] += val;
            value[slot] = val;
            bool fresh = !has_nonzero && val != 0;
            if (fresh) has_nonzero = true;
            if (feasible(a) && feasible(b)) dfs(slot + 1);
            if (fresh) has_nonzero = false;
            sum[a] -= val;
            sum[b] -= val;
        }
        value[slot] = 0;
        ++remaining[a];
        ++remaining[b];
    }
};

bool dominates(const Binomial& s, const Binomial& c) {
    if (s.plus().divides(c.plus()) && s.minus().divides(c.minus())) return true;
    return s.plus().divides(c.minus()) && s.minus().divides(c.plus());
}

WalkBinomial make_walk(const Graph& g, Binomial b) {
    WalkBinomial w{std::move(b), {}};
    for (std::size_t slot = 0; slot < static_cast<std::size_t>(g.q()); ++slot) {
        int mult = w.binomial.plus()[slot] + w.binomial.minus()[slot];
        if (mult > 0) w.walk_edges.push_back({g.edges()[slot].id, mult});
    }
    return w;
}

std::vector<WalkBinomial> sorted_walks(const Graph& g, std::vector<Binomial> binomials) {
    std::sort(binomials.begin(), binomials.end(), [](const Binomial& a, const Binomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return cmp_binomials_identity_lex(a, b) < 0;
    });
    std::vector<WalkBinomial> out;
    out.reserve(binomials.size());
    for (auto& b : binomials) out.push_back(make_walk(g, std::move(b)));
    return out;
}

}  // namespace

std::vector<WalkBinomial> graver_basis(const Graph& g, const GraverOptions& options) {
    if (g.q() > options.edge_cap) {
        throw CapabilityError("kernel-box enumeration capped at " +
                              std::to_string(options.edge_cap) + " edges, got " +
                              std::to_string(g.q()));
    }
    KernelBox box(g);
    box.dfs(0);
    std::vector<Binomial> candidates;
    candidates.reserve(box.out.size());
    for (const auto& v : box.out) {
        candidates.push_back(Binomial(Monomial::from_signed_vector_positive(v),
                                      Monomial::from_signed_vector_negative(v))
                                 .canonical());
    }
    // A dominated candidate is always dominated by some *primitive* one of
    // strictly smaller degree, so filtering against survivors suffices.
    std::sort(candidates.begin(), candidates.end(), [](const Binomial& a, const Binomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return cmp_binomials_identity_lex(a, b) < 0;
    });
    std::vector<Binomial> survivors;
    for (const auto& cand : candidates) {
        bool primitive = true;
        for (const auto& s : survivors) {
            if (dominates(s, cand)) {
                primitive = false;
                break;
            }
        }
        if (primitive) survivors.push_back(cand);
    }
    return sorted_walks(g, std::move(survivors));
}

std::vector<WalkBinomial> graver_basis_lawrence(const Graph& g, const BuchbergerOptions& options) {
    std::size_t q = static_cast<std::size_t>(g.q());
    if (2 * q > kMaxVariables) {
        throw CapabilityError("Lawrence lifting needs 2q <= " + std::to_string(kMaxVariables) +
                              " variables, got q = " + std::to_string(q));
    }
    std::vector<Binomial> gens;
    for (const auto& v : integer_kernel_basis(incidence_matrix(g))) {
        std::vector<long long> lifted(2 * q);
        for (std::size_t j = 0; j < q; ++j) {
            lifted[j] = v[j];
            lifted[q + j] = -v[j];
        }
        gens.push_back(Binomial(Monomial::from_signed_vector_positive(lifted),
                                Monomial::from_signed_vector_negative(lifted)));
    }
    BinomialIdeal lawrence = saturate_all(BinomialIdeal(2 * q, std::move(gens)), options);
    BinomialIdeal gb = buchberger(lawrence, reference_order(2 * q), options);
    std::vector<Binomial> projected;
    for (const Binomial& f : gb.generators()) {
        const Monomial& P = f.plus();
        const Monomial& M = f.minus();
        for (std::size_t j = 0; j < q; ++j) {
            if (P[q + j] != M[j] || M[q + j] != P[j]) {
                throw StructuralViolation(
                    "Lawrence basis element is not of the lifted form e^u+ z^u- - e^u- z^u+");
            }
        }
        std::vector<long long> u(q);
        for (std::size_t j = 0; j < q; ++j) u[j] = P[j] - M[j];
        projected.push_back(Binomial(Monomial::from_signed_vector_positive(u),
                                     Monomial::from_signed_vector_negative(u))
                                .canonical());
    }
    return sorted_walks(g, std::move(projected));
}

bool primitive_check(const Binomial& b, const std::vector<Binomial>& pool) {
    Binomial self = b.canonical();
    for (const Binomial& c : pool) {
        if (c.canonical() == self) continue;
        if (dominates(c, b)) return false;
    }
    return true;
}

PrimitiveShape classify_primitive_subgraph(const WalkBinomial& w, const Graph& g) {
    std::vector<std::pair<int, int>> endpoints;
    bool all_single = true;
    for (auto [id, mult] : w.walk_edges) {
        const Edge& e = g.edge_by_id(id);
        endpoints.push_back({e.u, e.v});
        if (mult != 1) all_single = false;
    }
    Graph support(g.p(), endpoints);
    auto cycles = simple_cycles(support);
    if (all_single && cycles.size() == 1 &&
        cycles.front().size() == static_cast<std::size_t>(support.q()) &&
        cycles.front().size() % 2 == 0) {
        return PrimitiveShape::even_cycle;
    }
    std::vector<std::vector<int>> odd;
    for (auto& c : cycles) {
        if (c.size() % 2 == 1) {
            std::sort(c.begin(), c.end());
            odd.push_back(std::move(c));
        }
    }
    for (std::size_t i = 0; i < odd.size(); ++i) {
        for (std::size_t j = i + 1; j < odd.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(odd[i].begin(), odd[i].end(), odd[j].begin(), odd[j].end(),
                                  std::back_inserter(common));
            if (common.empty()) return PrimitiveShape::contains_two_edge_disjoint_odd_cycles;
        }
    }
    throw StructuralViolation("primitive support is neither an even cycle nor two edge-disjoint odd cycles: " +
                              w.binomial.str(g.labels()));
}

std::vector<int> materialize_walk(const WalkBinomial& w, const Graph& g) {
    std::size_t q = static_cast<std::size_t>(g.q());
    std::vector<int> plus_rem(q), minus_rem(q);
    int total = 0;
    for (std::size_t slot = 0; slot < q; ++slot) {
        plus_rem[slot] = w.binomial.plus()[slot];
        minus_rem[slot] = w.binomial.is_monomial() ? 0 : w.binomial.minus()[slot];
        total += plus_rem[slot] + minus_rem[slot];
    }
    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(g.p()) + 1);
    for (std::size_t slot = 0; slot < q; ++slot) {
        if (plus_rem[slot] + minus_rem[slot] == 0) continue;
        incident[static_cast<std::size_t>(g.edges()[slot].u)].push_back(slot);
        incident[static_cast<std::size_t>(g.edges()[slot].v)].push_back(slot);
    }

    auto subwalk = [&](int anchor, bool start_plus) {
        std::vector<int> seq{anchor};
        int v = anchor;
        bool plus_side = start_plus;
        while (true) {
            std::size_t pick = q;
            for (std::size_t slot : incident[static_cast<std::size_t>(v)]) {
                if ((plus_side ? plus_rem : minus_rem)[slot] > 0) {
                    pick = slot;
                    break;
                }
            }
            if (pick == q) break;
            --(plus_side ? plus_rem : minus_rem)[pick];
            const Edge& e = g.edges()[pick];
            v = (e.u == v) ? e.v : e.u;
            seq.push_back(v);
            plus_side = !plus_side;
        }
        if (v != anchor || plus_side != start_plus) {
            throw StructuralViolation("walk did not close with alternating parity");
        }
        return seq;
    };

    int start = 0;
    for (int v = 1; v <= g.p() && start == 0; ++v) {
        if (!incident[static_cast<std::size_t>(v)].empty()) start = v;
    }
    if (start == 0) throw std::invalid_argument("cannot materialize a walk from an empty support");

    std::vector<int> circuit = subwalk(start, true);
    auto leftovers = [&]() {
        for (std::size_t slot = 0; slot < q; ++slot) {
            if (plus_rem[slot] + minus_rem[slot] > 0) return true;
        }
        return false;
    };
    while (leftovers()) {
        bool spliced = false;
        for (std::size_t j = 0; j + 1 < circuit.size() && !spliced; ++j) {
            int v = circuit[j];
            bool any = false;
            for (std::size_t slot : incident[static_cast<std::size_t>(v)]) {
                if (plus_rem[slot] + minus_rem[slot] > 0) any = true;
            }
            if (!any) continue;
            std::vector<int> sub = subwalk(v, j % 2 == 0);
            if (sub.size() <= 1) continue;
            circuit.insert(circuit.begin() + static_cast<std::ptrdiff_t>(j) + 1, sub.begin() + 1,
                           sub.end());
            spliced = true;
        }
        if (!spliced) {
            throw StructuralViolation("walk support is not connected to the anchored circuit");
        }
    }
    if (circuit.size() != static_cast<std::size_t>(total) + 1 || total % 2 != 0) {
        throw StructuralViolation("materialized walk has the wrong length");
    }
    return circuit;
}

std::vector<Monomial> initial_ideal(const Graph& g, const MonomialOrder& order,
                                    const BuchbergerOptions& options) {
    BinomialIdeal gb = buchberger(toric_ideal(g, options), order, options);
    return monomial_ideal_min_gens(leading_terms(gb.generators(), order));
}

HeightToric height_toric(const Graph& g, const BuchbergerOptions& options) {
    HeightToric out;
    for (const auto& comp : components(g)) {
        Graph h = induced_subgraph(g, comp);
        out.formula += h.q() - h.p() + (is_bipartite(h) ? 1 : 0);
    }
    out.degeneration = monomial_ideal_height(
        initial_ideal(g, reference_order(static_cast<std::size_t>(g.q())), options));
    if (!out.agree()) {
        throw StructuralViolation("height formula " + std::to_string(out.formula) +
                                  " != initial-ideal height " + std::to_string(out.degeneration));
    }
    return out;
}

ZeroIdealStructure zero_ideal_structure(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("zero_ideal_structure needs a connected graph");
    if (!toric_ideal(g).is_zero()) return ZeroIdealStructure::nonzero_ideal;
    if (g.q() == g.p() - 1) return ZeroIdealStructure::tree;
    if (g.q() == g.p() && !is_bipartite(g)) return ZeroIdealStructure::unicyclic_odd;
    throw StructuralViolation("connected graph with zero toric ideal is neither a tree nor odd-unicyclic");
}

std::string export_m2(const Graph& g) {
    std::ostringstream out;
    bool contiguous = true;
    for (std::size_t slot = 0; slot < g.edges().size(); ++slot) {
        if (g.edges()[slot].id != static_cast<int>(slot) + 1) contiguous = false;
    }
    if (contiguous) {
        out << "R = QQ[e1..e" << g.q() << "];\n";
    } else {
        out << "R = QQ[";
        auto names = g.labels();
        for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
        out << "];\n";
    }
    out << "S = QQ[v1..v" << g.p() << "];\n";
    out << "phi = map(S, R, {";
    for (std::size_t slot = 0; slot < g.edges().size(); ++slot) {
        const Edge& e = g.edges()[slot];
        out << (slot ? ", " : "") << "v" << e.u << "*v" << e.v;
    }
    out << "});\n";
    out << "I = ker phi;\n";
    out << "gens gb I\n";
    return out.str();
}

}  // namespace toricgraph
