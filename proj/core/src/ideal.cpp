#include "toricgraph/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "toricgraph/cover.hpp"
#include "toricgraph/errors.hpp"

namespace toricgraph {

BinomialIdeal::BinomialIdeal(std::size_t nvars, std::vector<Binomial> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
    for (const Binomial& g : gens_) {
        if (g.nvars() != nvars_) {
            throw std::invalid_argument("generator does not match the ideal's ring");
        }
    }
}

bool BinomialIdeal::contains_one() const {
    for (const Binomial& g : gens_) {
        if (g.is_monomial() && g.plus().is_one()) return true;
    }
    return false;
}

const MonomialOrder& BinomialIdeal::groebner_order() const {
    if (!order_) throw std::logic_error("ideal has no Groebner basis attached");
    return *order_;
}

bool BinomialIdeal::is_reduced_basis_under(const MonomialOrder& order) const {
    return status_ == BasisStatus::reduced_groebner && order_ && *order_ == order;
}

BinomialIdeal BinomialIdeal::as_reduced_basis(std::size_t nvars, std::vector<Binomial> generators,
                                              MonomialOrder order) {
    BinomialIdeal ideal(nvars, std::move(generators));
    ideal.status_ = BasisStatus::reduced_groebner;
    ideal.order_ = std::move(order);
    return ideal;
}

namespace {

// Basis view with precomputed leading-term data for fast divisor scans.
struct BasisView {
    const MonomialOrder& order;
    std::vector<Binomial> elems;               // oriented: plus is leading
    std::vector<std::uint64_t> lt_masks;

    void push(Binomial b) {
        b = b.oriented(order);
        lt_masks.push_back(b.plus().support_mask());
        elems.push_back(std::move(b));
    }

    // first element (index order) whose leading term divides m; skip_index
    // exempts one element from consideration
    int find_divisor(const Monomial& m, std::uint64_t m_mask, int skip_index = -1) const {
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (static_cast<int>(i) == skip_index) continue;
            if ((lt_masks[i] & ~m_mask) != 0) continue;
            if (elems[i].plus().divides(m)) return static_cast<int>(i);
        }
        return -1;
    }

    // fully reduced remainder; nullopt is the zero polynomial
    std::optional<Binomial> reduce(Binomial f, int skip_index = -1) const {
        f = f.oriented(order);
        bool is_mono = f.is_monomial();
        Monomial plus = f.plus();
        std::optional<Monomial> minus = is_mono ? std::nullopt : std::optional<Monomial>(f.minus());
        while (true) {
            int i = find_divisor(plus, plus.support_mask(), skip_index);
            if (i < 0) break;
            const Binomial& g = elems[i];
            if (g.is_monomial()) {
                // the whole leading term cancels
                if (!minus) return std::nullopt;
                plus = *minus;
                minus.reset();
                continue;
            }
            Monomial replacement = (plus / g.plus()) * g.minus();
            if (!minus) {
                plus = std::move(replacement);
                continue;
            }
            if (replacement == *minus) return std::nullopt;
            if (order.cmp(replacement, *minus) > 0) {
                plus = std::move(replacement);
            } else {
                plus = *minus;
                minus = std::move(replacement);
            }
        }
        while (minus) {
            int i = find_divisor(*minus, minus->support_mask(), skip_index);
            if (i < 0) break;
            const Binomial& g = elems[i];
            if (g.is_monomial()) {
                minus.reset();
                break;
            }
            Monomial replacement = (*minus / g.plus()) * g.minus();
            // strictly decreasing, so it can never collide with the lead
            assert(order.cmp(replacement, plus) < 0);
            minus = std::move(replacement);
        }
        if (!minus) return Binomial(std::move(plus));
        return Binomial(std::move(plus), std::move(*minus));
    }
};

std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
    if (f.is_monomial() && g.is_monomial()) return std::nullopt;
    Monomial lcm = Monomial::lcm(f.plus(), g.plus());
    if (f.is_monomial()) return Binomial((lcm / g.plus()) * g.minus());
    if (g.is_monomial()) return Binomial((lcm / f.plus()) * f.minus());
    Monomial a = (lcm / f.plus()) * f.minus();
    Monomial b = (lcm / g.plus()) * g.minus();
    if (a == b) return std::nullopt;
    return Binomial(std::move(a), std::move(b)).oriented(order);
}

std::uint64_t pair_key(std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

}  // namespace

std::optional<Binomial> normal_form(const Binomial& f, const std::vector<Binomial>& basis,
                                    const MonomialOrder& order) {
    BasisView view{order, {}, {}};
    for (const Binomial& b : basis) view.push(b);
    return view.reduce(f);
}

BinomialIdeal buchberger(const BinomialIdeal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& options) {
    if (order.nvars() != ideal.nvars()) {
        throw std::invalid_argument("order does not match the ideal's ring");
    }
    if (ideal.is_reduced_basis_under(order)) return ideal;

    BasisView view{order, {}, {}};
    // pairs keyed by (lcm degree, i, j): normal selection strategy with
    // index tie-break
    std::set<std::tuple<int, std::size_t, std::size_t>> queue;
    std::unordered_set<std::uint64_t> handled;

    auto add_element = [&](Binomial b) {
        std::size_t t = view.elems.size();
        if (t >= options.generator_budget) {
            throw CapabilityError("Buchberger generator budget exceeded (" +
                                  std::to_string(options.generator_budget) + ")");
        }
        view.push(std::move(b));
        for (std::size_t k = 0; k < t; ++k) {
            int deg = Monomial::lcm(view.elems[k].plus(), view.elems[t].plus()).degree();
            queue.insert({deg, k, t});
        }
    };

    for (const Binomial& g : ideal.generators()) {
        // drop generators that reduce to zero against what is already there
        auto r = view.reduce(g);
        if (r) add_element(std::move(*r));
    }

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        handled.insert(pair_key(i, j));
        const Binomial& f = view.elems[i];
        const Binomial& g = view.elems[j];
        if (!f.is_monomial() || !g.is_monomial()) {
            // product criterion: coprime leading terms reduce to zero
            if (f.plus().coprime_with(g.plus())) continue;
        }
        // chain criterion: a third leading term dividing the lcm whose pairs
        // with both ends were already treated
        Monomial lcm = Monomial::lcm(f.plus(), g.plus());
        std::uint64_t lcm_mask = lcm.support_mask();
        bool skip = false;
        for (std::size_t k = 0; k < view.elems.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if ((view.lt_masks[k] & ~lcm_mask) != 0) continue;
            if (!view.elems[k].plus().divides(lcm)) continue;
            if (handled.contains(pair_key(std::min(i, k), std::max(i, k))) &&
                handled.contains(pair_key(std::min(j, k), std::max(j, k)))) {
                skip = true;
            }
        }
        if (skip) continue;
        auto s = s_pair(f, g, order);
        if (!s) continue;
        auto r = view.reduce(std::move(*s));
        if (r) add_element(std::move(*r));
    }

    // reduced basis: minimal leading terms, then tails fully reduced
    std::vector<std::size_t> idx(view.elems.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.cmp(view.elems[a].plus(), view.elems[b].plus());
        if (c != 0) return c < 0;
        return cmp_binomials_identity_lex(view.elems[a], view.elems[b]) < 0;
    });
    BasisView minimal{order, {}, {}};
    for (std::size_t i : idx) {
        const Monomial& lt = view.elems[i].plus();
        if (minimal.find_divisor(lt, lt.support_mask()) >= 0) continue;
        minimal.push(view.elems[i]);
    }
    std::vector<Binomial> reduced;
    reduced.reserve(minimal.elems.size());
    for (std::size_t i = 0; i < minimal.elems.size(); ++i) {
        auto r = minimal.reduce(minimal.elems[i], static_cast<int>(i));
        if (!r || !(r->plus() == minimal.elems[i].plus())) {
            throw StructuralViolation("interreduction changed a minimal leading term");
        }
        reduced.push_back(std::move(*r));
    }
    return BinomialIdeal::as_reduced_basis(ideal.nvars(), std::move(reduced), order);
}

bool is_groebner(const std::vector<Binomial>& basis, const MonomialOrder& order) {
    BasisView view{order, {}, {}};
    for (const Binomial& b : basis) view.push(b);
    for (std::size_t i = 0; i < view.elems.size(); ++i) {
        for (std::size_t j = i + 1; j < view.elems.size(); ++j) {
            const Binomial& f = view.elems[i];
            const Binomial& g = view.elems[j];
            if (!f.is_monomial() || !g.is_monomial()) {
                if (f.plus().coprime_with(g.plus())) continue;
            }
            auto s = s_pair(f, g, order);
            if (!s) continue;
            if (view.reduce(std::move(*s)).has_value()) return false;
        }
    }
    return true;
}

bool ideal_equal(const BinomialIdeal& a, const BinomialIdeal& b, const BuchbergerOptions& options) {
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("cannot compare ideals from different rings");
    }
    MonomialOrder ref = reference_order(a.nvars());
    BinomialIdeal ga = buchberger(a, ref, options);
    BinomialIdeal gb = buchberger(b, ref, options);
    return ga.generators() == gb.generators();
}

BinomialIdeal saturate_variable(const BinomialIdeal& ideal, std::size_t slot,
                                const BuchbergerOptions& options) {
    if (slot >= ideal.nvars()) throw std::invalid_argument("saturation variable out of range");
    for (const Binomial& g : ideal.generators()) {
        if (!g.degree_balanced()) {
            throw std::invalid_argument(
                "saturation requires degree-balanced binomial generators");
        }
    }
    bool involved = false;
    for (const Binomial& g : ideal.generators()) {
        if (g.involves(slot)) {
            involved = true;
            break;
        }
    }
    // a variable absent from every generator is regular modulo the ideal
    if (!involved) return ideal;

    std::vector<std::size_t> perm;
    perm.reserve(ideal.nvars());
    for (std::size_t i = 0; i < ideal.nvars(); ++i) {
        if (i != slot) perm.push_back(i);
    }
    perm.push_back(slot);  // cheapest variable under grevlex
    BinomialIdeal gb = buchberger(ideal, MonomialOrder::grevlex(std::move(perm)), options);

    std::vector<Binomial> stripped;
    stripped.reserve(gb.generators().size());
    for (const Binomial& g : gb.generators()) {
        if (g.is_monomial()) {
            stripped.push_back(Binomial(g.plus().divided_by_power(slot, g.plus()[slot])));
        } else {
            int d = std::min(g.plus()[slot], g.minus()[slot]);
            stripped.push_back(Binomial(g.plus().divided_by_power(slot, d),
                                        g.minus().divided_by_power(slot, d)));
        }
    }
    return BinomialIdeal(ideal.nvars(), std::move(stripped));
}

BinomialIdeal saturate_all(const BinomialIdeal& ideal, const BuchbergerOptions& options) {
    // ((I : x^inf) : y^inf) = I : (xy)^inf, so one sweep reaches the fixpoint
    BinomialIdeal current = ideal;
    for (std::size_t slot = 0; slot < ideal.nvars(); ++slot) {
        current = saturate_variable(current, slot, options);
    }
    return current;
}

std::vector<Monomial> monomial_ideal_min_gens(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return Monomial::cmp_identity_lex(a, b) < 0;
    });
    std::vector<Monomial> kept;
    std::vector<std::uint64_t> kept_masks;
    for (const Monomial& m : monomials) {
        std::uint64_t mask = m.support_mask();
        bool redundant = false;
        for (std::size_t i = 0; i < kept.size() && !redundant; ++i) {
            if ((kept_masks[i] & ~mask) != 0) continue;
            if (kept[i].divides(m)) redundant = true;
        }
        if (!redundant) {
            kept.push_back(m);
            kept_masks.push_back(mask);
        }
    }
    std::sort(kept.begin(), kept.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::cmp_identity_lex(a, b) < 0; });
    return kept;
}

int monomial_ideal_height(const std::vector<Monomial>& monomials) {
    auto gens = monomial_ideal_min_gens(monomials);
    if (gens.empty()) return 0;
    Hypergraph h;
    h.nvertices = gens.front().nvars();
    for (const Monomial& m : gens) {
        if (m.is_one()) {
            throw std::invalid_argument("unit monomial ideal has no height");
        }
        h.edges.push_back(m.support());
    }
    return static_cast<int>(min_vertex_cover(h).size());
}

std::vector<Monomial> leading_terms(const std::vector<Binomial>& basis, const MonomialOrder& order) {
    std::vector<Monomial> lts;
    lts.reserve(basis.size());
    for (const Binomial& b : basis) lts.push_back(b.oriented(order).plus());
    return lts;
}

std::string ideal_str(const BinomialIdeal& ideal, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "vars=" << ideal.nvars();
    if (ideal.status() == BasisStatus::reduced_groebner) {
        out << " order=" << ideal.groebner_order().spec(labels);
    }
    out << "\n";
    for (const Binomial& g : ideal.generators()) out << g.str(labels) << "\n";
    return out.str();
}

}  // namespace toricgraph
