#include "toricgraph/kmy.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricgraph/errors.hpp"
#include "toricgraph/toric.hpp"

namespace toricgraph {

namespace {

Monomial squarefree_part(const Monomial& m) {
    Monomial out(m.nvars());
    for (std::size_t slot : m.support()) out[slot] = 1;
    return out;
}

bool all_monomial(const std::vector<Binomial>& gens) {
    return std::all_of(gens.begin(), gens.end(),
                       [](const Binomial& b) { return b.is_monomial(); });
}

std::vector<Monomial> squarefree_min_gens(const std::vector<Binomial>& gens) {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const Binomial& b : gens) out.push_back(squarefree_part(b.plus()));
    return monomial_ideal_min_gens(std::move(out));
}

}  // namespace

KMYDecomposition kmy_decompose(const BinomialIdeal& ideal, std::size_t y,
                               const MonomialOrder& order, const BuchbergerOptions& options) {
    if (order.nvars() != ideal.nvars()) throw std::invalid_argument("order/ideal ring mismatch");
    if (y >= ideal.nvars()) throw std::invalid_argument("y slot out of range");
    if (!order.y_compatible_for(y)) {
        throw std::invalid_argument("the order is not y-compatible for the requested variable");
    }

    KMYDecomposition dec(ideal.nvars());
    dec.y = y;
    dec.order = order;
    dec.gb = buchberger(ideal, order, options);

    std::vector<Binomial> c_gens, n_gens;
    for (const Binomial& f : dec.gb.generators()) {
        auto [d, init] = f.initial_y_form(y);
        KmyGbElement part{f, d, f, std::nullopt};
        if (!init.is_monomial()) {
            // both terms carry y-degree d, so the whole element is y^d * q
            part.q = Binomial(init.plus().divided_by_power(y, d),
                              init.minus().divided_by_power(y, d));
        } else if (f.is_monomial()) {
            part.q = Binomial(f.plus().divided_by_power(y, d));
        } else {
            if (f.minus()[y] >= d) {
                throw StructuralViolation("oriented element carries its maximal y-degree in the tail");
            }
            part.q = Binomial(f.plus().divided_by_power(y, d));
            part.r = f.minus();
        }
        dec.init_y.push_back(d == 0 ? part.q
                                    : part.q.times(Monomial::variable(ideal.nvars(), y, d)));
        c_gens.push_back(part.q);
        if (part.d == 0) n_gens.push_back(part.q);
        dec.split.push_back(std::move(part));
    }
    dec.C = BinomialIdeal(ideal.nvars(), c_gens);
    dec.N = BinomialIdeal(ideal.nvars(), n_gens);

    bool unit = std::any_of(c_gens.begin(), c_gens.end(), [](const Binomial& b) {
        return b.is_monomial() && b.plus().is_one();
    });
    if (unit) {
        dec.degenerate = true;
    } else if (all_monomial(c_gens)) {
        dec.degenerate = squarefree_min_gens(c_gens) == squarefree_min_gens(n_gens);
    } else {
        dec.degenerate = ideal_equal(dec.C, dec.N, options);
    }
    return dec;
}

bool is_degenerate_toric(const Graph& g, int edge_id, const BuchbergerOptions& options) {
    std::size_t slot = g.slot_of_id(edge_id);
    BinomialIdeal ideal = toric_ideal(g, options);
    if (ideal.is_zero()) return true;
    std::size_t q = static_cast<std::size_t>(g.q());
    BinomialIdeal gb = buchberger(ideal, MonomialOrder::y_top(slot, reference_order(q)), options);
    return std::none_of(gb.generators().begin(), gb.generators().end(),
                        [&](const Binomial& b) { return b.involves(slot); });
}

bool deletion_identity_check(const Graph& g, int edge_id, const BuchbergerOptions& options) {
    std::size_t q = static_cast<std::size_t>(g.q());
    std::size_t slot = g.slot_of_id(edge_id);
    MonomialOrder order = MonomialOrder::y_top(slot, reference_order(q));
    KMYDecomposition dec = kmy_decompose(toric_ideal(g, options), slot, order, options);

    std::vector<Binomial> restricted;
    for (const Binomial& b : dec.N.generators()) restricted.push_back(b.erase_slot(slot));

    Graph h = g.delete_edge(edge_id);
    BinomialIdeal downstairs = toric_ideal(h, options);
    if (!ideal_equal(BinomialIdeal(q - 1, std::move(restricted)), downstairs, options)) {
        return false;
    }

    auto upstairs_min = monomial_ideal_min_gens(leading_terms(dec.gb.generators(), order));
    std::vector<Monomial> surviving;
    for (const Monomial& m : upstairs_min) {
        if (m[slot] == 0) surviving.push_back(m.erase_slot(slot));
    }
    MonomialOrder induced = order.restricted(slot);
    auto downstairs_init = monomial_ideal_min_gens(
        leading_terms(buchberger(downstairs, induced, options).generators(), induced));
    return monomial_ideal_min_gens(std::move(surviving)) == downstairs_init;
}

namespace {

// `gb` is the reduced basis of the (nonzero) toric ideal under the reference
// order; edges in its support are certainly in a primitive binomial, the
// rest need an individual y-top probe.
int select_from(const Graph& g, const BinomialIdeal& gb, const BuchbergerOptions& options) {
    std::uint64_t support = 0;
    for (const Binomial& b : gb.generators()) {
        support |= b.plus().support_mask();
        if (!b.is_monomial()) support |= b.minus().support_mask();
    }
    std::vector<int> bridge_ids = bridges(g);
    std::size_t q = static_cast<std::size_t>(g.q());
    for (std::size_t slot = 0; slot < q; ++slot) {
        int id = g.edges()[slot].id;
        if (std::binary_search(bridge_ids.begin(), bridge_ids.end(), id)) continue;
        if ((support >> slot) & 1) return id;
        BinomialIdeal probe =
            buchberger(gb, MonomialOrder::y_top(slot, reference_order(q)), options);
        if (std::any_of(probe.generators().begin(), probe.generators().end(),
                        [&](const Binomial& b) { return b.involves(slot); })) {
            return id;
        }
    }
    throw StructuralViolation("nonzero toric ideal with no nondegenerate edge");
}

void sequence_connected(Graph g, BinomialIdeal ideal, std::vector<DeletionStep>& out,
                        const BuchbergerOptions& options);

void sequence_split(const Graph& g, std::vector<DeletionStep>& out,
                    const BuchbergerOptions& options) {
    for (const auto& comp : components(g)) {
        Graph h = induced_subgraph(g, comp);
        if (h.q() == 0) continue;
        sequence_connected(h, toric_ideal(h, options), out, options);
    }
}

void sequence_connected(Graph g, BinomialIdeal ideal, std::vector<DeletionStep>& out,
                        const BuchbergerOptions& options) {
    while (!ideal.is_zero()) {
        std::size_t q = static_cast<std::size_t>(g.q());
        BinomialIdeal gb = buchberger(ideal, reference_order(q), options);
        int id = select_from(g, gb, options);
        out.push_back({id, false});

        std::size_t slot = g.slot_of_id(id);
        KMYDecomposition dec =
            kmy_decompose(gb, slot, MonomialOrder::y_top(slot, reference_order(q)), options);
        g = g.delete_edge(id);
        if (components(g).size() > 1) {
            sequence_split(g, out, options);
            return;
        }
        // The y-free part of the reduced y-top basis, restricted, is already
        // the reduced basis of the deleted graph's ideal under the induced
        // (reference) order.
        std::vector<Binomial> restricted;
        for (const Binomial& b : dec.N.generators()) restricted.push_back(b.erase_slot(slot));
        ideal = BinomialIdeal::as_reduced_basis(q - 1, std::move(restricted),
                                                reference_order(q - 1));
    }
}

}  // namespace

int select_deletion_edge(const Graph& g, const BuchbergerOptions& options) {
    BinomialIdeal ideal = toric_ideal(g, options);
    if (ideal.is_zero()) {
        throw std::invalid_argument("the toric ideal is zero: every edge is degenerate");
    }
    std::size_t q = static_cast<std::size_t>(g.q());
    return select_from(g, buchberger(ideal, reference_order(q), options), options);
}

std::vector<DeletionStep> deletion_sequence(const Graph& g, const BuchbergerOptions& options) {
    std::vector<DeletionStep> out;
    sequence_split(g, out, options);
    return out;
}

bool height_chain_check(const Graph& g, int edge_id, const MonomialOrder& order,
                        const BuchbergerOptions& options) {
    std::size_t slot = g.slot_of_id(edge_id);
    KMYDecomposition dec = kmy_decompose(toric_ideal(g, options), slot, order, options);
    if (dec.degenerate) {
        throw std::invalid_argument("height chain requires a nondegenerate edge");
    }
    int h_full = monomial_ideal_height(leading_terms(dec.gb.generators(), order));
    int h_c = monomial_ideal_height(leading_terms(dec.C.generators(), order));
    int h_n = monomial_ideal_height(leading_terms(dec.N.generators(), order));
    return h_c == h_full && h_full == h_n + 1;
}

bool bipartite_preservation_check(const Graph& g, int edge_id, const BuchbergerOptions& options) {
    if (is_bipartite(g)) {
        throw std::invalid_argument("bipartite preservation applies to non-bipartite graphs");
    }
    if (is_degenerate_toric(g, edge_id, options)) {
        throw std::invalid_argument("bipartite preservation applies to nondegenerate edges");
    }
    return !is_bipartite(g.delete_edge(edge_id));
}

bool degenerate_gb_avoids_y_check(const Graph& g, int edge_id, const MonomialOrder& order,
                                  const BuchbergerOptions& options) {
    std::size_t slot = g.slot_of_id(edge_id);
    BinomialIdeal ideal = toric_ideal(g, options);
    KMYDecomposition dec = kmy_decompose(ideal, slot, order, options);
    if (!dec.degenerate) {
        throw std::invalid_argument("expected a degenerate edge");
    }
    bool avoids = std::none_of(dec.gb.generators().begin(), dec.gb.generators().end(),
                               [&](const Binomial& b) { return b.involves(slot); });
    return avoids && ideal_equal(dec.C, dec.N, options) && ideal_equal(dec.C, ideal, options);
}

}  // namespace toricgraph
