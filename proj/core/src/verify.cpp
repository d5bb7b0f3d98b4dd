#include "toricgraph/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>

#include "toricgraph/chromatic.hpp"
#include "toricgraph/graph_coloring.hpp"
#include "toricgraph/graph_cycles.hpp"
#include "toricgraph/kmy.hpp"
#include "toricgraph/lattice.hpp"
#include "toricgraph/rng.hpp"
#include "toricgraph/toric.hpp"

namespace toricgraph {

namespace {

struct Suite {
    const Graph& g;
    const VerifyOptions& opts;
    std::vector<PropertyResult> results;

    void run(const std::string& name, const std::function<PropertyResult()>& body) {
        PropertyResult r;
        r.name = name;
        try {
            r = body();
            r.name = name;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

PropertyResult pass(std::string detail = "") { return {"", true, true, std::move(detail)}; }
PropertyResult fail(std::string detail) { return {"", false, true, std::move(detail)}; }
PropertyResult skip(std::string detail) { return {"", true, false, std::move(detail)}; }

}  // namespace

std::vector<PropertyResult> verify_graph(const Graph& g, const VerifyOptions& opts) {
    Suite suite{g, opts, {}};
    const BuchbergerOptions& bo = opts.buchberger;
    std::size_t q = static_cast<std::size_t>(g.q());

    suite.run("incidence-rank", [&] {
        auto kernel = integer_kernel(incidence_matrix(g));
        int expected = 0;
        for (const auto& comp : components(g)) {
            Graph h = induced_subgraph(g, comp);
            expected += h.p() - (is_bipartite(h) ? 1 : 0);
        }
        if (kernel.rank != expected) {
            return fail("rank " + std::to_string(kernel.rank) + ", expected " +
                        std::to_string(expected));
        }
        if (static_cast<int>(kernel.basis.size()) != g.q() - expected) {
            return fail("kernel basis size " + std::to_string(kernel.basis.size()));
        }
        return pass();
    });

    suite.run("bridges-match-cycles", [&] {
        if (g.p() > opts.cycle_vertex_cap) return skip("p exceeds cycle cap");
        auto cycles = simple_cycles(g);
        auto bridge_ids = bridges(g);
        for (const Edge& e : g.edges()) {
            bool on_cycle = std::any_of(cycles.begin(), cycles.end(), [&](const auto& c) {
                return std::find(c.begin(), c.end(), e.id) != c.end();
            });
            bool bridge = std::binary_search(bridge_ids.begin(), bridge_ids.end(), e.id);
            if (bridge == on_cycle) {
                return fail("edge e" + std::to_string(e.id) + " bridge=" + std::to_string(bridge) +
                            " on_cycle=" + std::to_string(on_cycle));
            }
        }
        return pass();
    });

    suite.run("bipartite-iff-two-colorable", [&] {
        if (g.q() == 0) return skip("edgeless");
        bool two = exact_chromatic_number(g) <= 2;
        return is_bipartite(g) == two ? pass() : fail("disagreement");
    });

    suite.run("height-formula-vs-initial-ideal", [&] {
        HeightToric h = height_toric(g, bo);  // throws on mismatch
        return pass("height " + std::to_string(h.formula));
    });

    suite.run("height-vs-deletion-count", [&] {
        int height = height_toric(g, bo).formula;
        auto seq = deletion_sequence(g, bo);
        if (static_cast<int>(seq.size()) != height) {
            return fail(std::to_string(seq.size()) + " steps, height " + std::to_string(height));
        }
        return pass();
    });

    suite.run("deletion-identity-all-edges", [&] {
        for (const Edge& e : g.edges()) {
            if (!deletion_identity_check(g, e.id, bo)) {
                return fail("fails at e" + std::to_string(e.id));
            }
        }
        return pass();
    });

    suite.run("degeneracy-consistency", [&] {
        BinomialIdeal ideal = toric_ideal(g, bo);
        for (const Edge& e : g.edges()) {
            std::size_t slot = g.slot_of_id(e.id);
            auto order = MonomialOrder::y_top(slot, reference_order(q));
            KMYDecomposition dec = kmy_decompose(ideal, slot, order, bo);
            bool avoids = std::none_of(dec.gb.generators().begin(), dec.gb.generators().end(),
                                       [&](const Binomial& b) { return b.involves(slot); });
            bool degenerate = is_degenerate_toric(g, e.id, bo);
            if (degenerate != dec.degenerate || degenerate != avoids) {
                return fail("e" + std::to_string(e.id) + ": criterion=" + std::to_string(degenerate) +
                            " C=N:" + std::to_string(dec.degenerate) +
                            " avoids:" + std::to_string(avoids));
            }
        }
        return pass();
    });

    suite.run("height-chain-nondegenerate", [&] {
        bool any = false;
        for (const Edge& e : g.edges()) {
            if (is_degenerate_toric(g, e.id, bo)) continue;
            any = true;
            auto order = MonomialOrder::y_top(g.slot_of_id(e.id), reference_order(q));
            if (!height_chain_check(g, e.id, order, bo)) {
                return fail("chain broken at e" + std::to_string(e.id));
            }
        }
        return any ? pass() : skip("no nondegenerate edge");
    });

    suite.run("degenerate-gb-avoids-y", [&] {
        bool any = false;
        for (const Edge& e : g.edges()) {
            if (!is_degenerate_toric(g, e.id, bo)) continue;
            any = true;
            auto order = MonomialOrder::y_top(g.slot_of_id(e.id), reference_order(q));
            if (!degenerate_gb_avoids_y_check(g, e.id, order, bo)) {
                return fail("fails at e" + std::to_string(e.id));
            }
        }
        return any ? pass() : skip("no degenerate edge");
    });

    suite.run("bipartite-preservation", [&] {
        if (is_bipartite(g)) return skip("bipartite input");
        bool any = false;
        for (const Edge& e : g.edges()) {
            if (is_degenerate_toric(g, e.id, bo)) continue;
            any = true;
            if (!bipartite_preservation_check(g, e.id, bo)) {
                return fail("G minus e" + std::to_string(e.id) + " became bipartite");
            }
        }
        return any ? pass() : skip("no nondegenerate edge");
    });

    suite.run("chromatic-bound", [&] {
        if (!is_connected(g)) return skip("disconnected");
        order_search(g, std::max(1, opts.random_orders), opts.seed, bo);  // asserts per order
        return pass();
    });

    suite.run("chromatic-drop", [&] {
        for (const Edge& e : g.edges()) {
            if (!chromatic_drop_check(g, e.id)) return fail("fails at e" + std::to_string(e.id));
        }
        return pass();
    });

    suite.run("zero-ideal-structure", [&] {
        if (!is_connected(g)) return skip("disconnected");
        auto shape = zero_ideal_structure(g);
        bool zero = toric_ideal(g, bo).is_zero();
        if (zero == (shape == ZeroIdealStructure::nonzero_ideal)) {
            return fail("classification disagrees with the ideal");
        }
        return pass();
    });

    suite.run("graver-oracle-equivalence", [&] {
        if (g.q() > opts.graver_edge_cap) return skip("q exceeds graver cap");
        auto box = graver_basis(g);
        auto lifted = graver_basis_lawrence(g, bo);
        if (box.size() != lifted.size()) {
            return fail("box " + std::to_string(box.size()) + " vs lifted " +
                        std::to_string(lifted.size()));
        }
        for (std::size_t i = 0; i < box.size(); ++i) {
            if (!(box[i].binomial == lifted[i].binomial)) return fail("element mismatch");
        }
        return pass(std::to_string(box.size()) + " primitive binomials");
    });

    suite.run("graver-structure", [&] {
        if (g.q() > opts.graver_edge_cap) return skip("q exceeds graver cap");
        IncidenceMatrix M = incidence_matrix(g);
        for (const WalkBinomial& w : graver_basis(g)) {
            const Binomial& b = w.binomial;
            if (b.plus().degree() < 2 || b.minus().degree() < 2) return fail("side of degree < 2");
            for (std::size_t slot = 0; slot < q; ++slot) {
                if (b.plus()[slot] > 2 || b.minus()[slot] > 2) return fail("exponent above 2");
                if (b.plus()[slot] > 0 && b.minus()[slot] > 0) return fail("shared support");
            }
            auto v = b.signed_vector();
            for (int row = 0; row < M.rows; ++row) {
                long long s = 0;
                for (std::size_t col = 0; col < q; ++col) {
                    s += M.m[static_cast<std::size_t>(row)][col] * v[col];
                }
                if (s != 0) return fail("exponent vector leaves the kernel");
            }
            classify_primitive_subgraph(w, g);  // throws outside the dichotomy
        }
        return pass();
    });

    suite.run("graver-universal-gb", [&] {
        if (g.q() > opts.graver_edge_cap) return skip("q exceeds graver cap");
        auto walks = graver_basis(g);
        std::vector<Binomial> gens;
        for (auto& w : walks) gens.push_back(w.binomial);
        BinomialIdeal span(q, gens);
        if (!ideal_equal(span, toric_ideal(g, bo), bo)) return fail("span differs from the ideal");
        Rng rng(opts.seed);
        std::vector<std::size_t> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < std::max(1, opts.random_orders); ++i) {
            rng.shuffle(perm);
            auto order = MonomialOrder::lex(perm);
            std::vector<Binomial> oriented;
            for (const auto& b : gens) oriented.push_back(b.oriented(order));
            if (!is_groebner(oriented, order)) {
                return fail("not a basis under " + order.spec());
            }
        }
        return pass();
    });

    return suite.results;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.pass; });
}

}  // namespace toricgraph
