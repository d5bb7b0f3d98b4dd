#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "testutil.hpp"
#include "toricgraph/binomial.hpp"
#include "toricgraph/ideal.hpp"
#include "toricgraph/monomial.hpp"
#include "toricgraph/order.hpp"
#include "toricgraph/rng.hpp"
#include "toricgraph/toric.hpp"

using namespace toricgraph;

namespace {

Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

Monomial random_monomial(Rng& rng, std::size_t nvars, int max_exp) {
    std::vector<int> exps(nvars);
    for (auto& e : exps) e = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_exp + 1)));
    return Monomial(std::move(exps));
}

std::vector<MonomialOrder> sample_orders(std::size_t nvars) {
    std::vector<std::size_t> identity(nvars);
    for (std::size_t i = 0; i < nvars; ++i) identity[i] = i;
    std::vector<std::size_t> reversed(identity.rbegin(), identity.rend());
    std::vector<long> weights(nvars);
    for (std::size_t i = 0; i < nvars; ++i) weights[i] = static_cast<long>(3 * i + 1);
    return {
        MonomialOrder::lex(identity),
        MonomialOrder::lex(reversed),
        MonomialOrder::grevlex(nvars),
        MonomialOrder::grevlex(reversed),
        MonomialOrder::weight(weights, MonomialOrder::lex(identity)),
        MonomialOrder::y_top(0, MonomialOrder::grevlex(nvars)),
    };
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("monomial arithmetic basics") {
    // over six variables e1..e6 (slots 0..5)
    Monomial e1e5 = mono({1, 0, 0, 0, 1, 0});
    Monomial e2e4 = mono({0, 1, 0, 1, 0, 0});
    CHECK(Monomial::lcm(e1e5, e2e4) == mono({1, 1, 0, 1, 1, 0}));
    CHECK(Monomial::gcd(e1e5, e2e4) == mono({0, 0, 0, 0, 0, 0}));
    CHECK(!mono({0, 0, 1, 0, 0, 1}).divides(mono({1, 0, 1, 0, 1, 0})));
    CHECK(mono({1, 0, 0, 0, 0, 0}).divides(e1e5));
    CHECK(e1e5 / mono({1, 0, 0, 0, 0, 0}) == mono({0, 0, 0, 0, 1, 0}));
    CHECK_THROWS(e1e5 / e2e4);
    CHECK(e1e5.degree() == 2);
    CHECK(e1e5.coprime_with(e2e4));

    // degree structure of the extended bow-tie generator: dividing the plus
    // side e1*e4^2*e6*e7 by e4 keeps one power of e4
    Monomial plus = mono({1, 0, 0, 2, 0, 1, 1, 0});
    Monomial e4 = Monomial::variable(8, 3);
    CHECK(plus / e4 == mono({1, 0, 0, 1, 0, 1, 1, 0}));
    CHECK(plus.divided_by_power(3, 2) == mono({1, 0, 0, 0, 0, 1, 1, 0}));

    CHECK(Monomial::variable(3, 1, 2) == mono({0, 2, 0}));
    CHECK_THROWS(Monomial::variable(3, 1, 0));
    CHECK(mono({1, 0, 2}).support() == std::vector<std::size_t>{0, 2});
    CHECK(mono({1, 0, 2}).support_mask() == 0b101);
    CHECK(mono({1, 0, 2}).erase_slot(1) == mono({1, 2}));
    CHECK_THROWS(mono({1, 1, 2}).erase_slot(1));
}

TEST_CASE("monomial parse and str round trip") {
    std::vector<std::string> labels = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"};
    Monomial m = mono({1, 0, 0, 2, 0, 1, 1, 0});
    CHECK(m.str(labels) == "e1*e4^2*e6*e7");
    CHECK(Monomial::parse("e1*e4^2*e6*e7", labels) == m);
    CHECK(Monomial::parse("1", labels) == Monomial::one(8));
    CHECK(Monomial::one(8).str(labels) == "1");
    CHECK_THROWS(Monomial::parse("e9", labels));
}

TEST_CASE("lex order: known comparisons") {
    std::vector<std::size_t> identity = {0, 1, 2, 3, 4, 5};
    auto lex = MonomialOrder::lex(identity);
    // e1e5 vs e3e6: the first slot decides
    CHECK(lex.greater(mono({1, 0, 0, 0, 1, 0}), mono({0, 0, 1, 0, 0, 1})));
    // a single power of the most significant variable beats any power of later ones
    CHECK(lex.greater(mono({1, 0, 0, 0, 0, 0}), mono({0, 5, 0, 0, 0, 0})));
    CHECK(lex.cmp(mono({1, 1, 0, 0, 0, 0}), mono({1, 1, 0, 0, 0, 0})) == 0);
}

TEST_CASE("grevlex order: degree first, then reverse tiebreak") {
    auto grevlex = MonomialOrder::grevlex(3);
    CHECK(grevlex.less(Monomial::one(3), mono({1, 0, 0})));
    // same degree: the monomial with the smaller exponent on the last
    // variable is larger
    CHECK(grevlex.greater(mono({0, 3, 0}), mono({1, 0, 2})));
    CHECK(grevlex.greater(mono({2, 0, 0}), mono({1, 1, 0})));
    CHECK(grevlex.greater(mono({1, 1, 0}), mono({0, 2, 0})));
    CHECK(grevlex.greater(mono({0, 2, 0}), mono({1, 0, 1})));
    // lower degree always loses
    CHECK(grevlex.less(mono({1, 1, 0}), mono({0, 1, 2})));
}

TEST_CASE("weight order with lex tiebreak") {
    auto order = MonomialOrder::weight({3, 1}, MonomialOrder::lex({0, 1}));
    CHECK(order.cmp(mono({1, 0}), mono({0, 3})) > 0);  // weights tie 3=3, lex breaks
    CHECK(order.less(mono({1, 0}), mono({0, 4})));     // weight 3 < 4
    CHECK_THROWS(MonomialOrder::weight({-1, 2}, MonomialOrder::lex({0, 1})));
}

TEST_CASE("y_top order compares the distinguished degree first") {
    auto order = MonomialOrder::y_top(0, MonomialOrder::grevlex(3));
    CHECK(order.greater(mono({1, 1, 0}), mono({0, 3, 3})));
    CHECK(order.greater(mono({2, 0, 0}), mono({1, 4, 4})));
    CHECK(order.less(mono({0, 1, 0}), mono({1, 0, 0})));
    CHECK(order.y_slot() == 0);
    CHECK(order.sub_order().kind() == OrderKind::grevlex);
}

TEST_CASE("y-compatibility detection") {
    CHECK(MonomialOrder::y_top(2, MonomialOrder::grevlex(5)).y_compatible_for(2));
    CHECK(!MonomialOrder::y_top(2, MonomialOrder::grevlex(5)).y_compatible_for(1));
    CHECK(MonomialOrder::lex({2, 0, 1, 3, 4}).y_compatible_for(2));
    CHECK(!MonomialOrder::lex({2, 0, 1, 3, 4}).y_compatible_for(0));
    CHECK(!MonomialOrder::grevlex(5).y_compatible_for(0));
}

TEST_CASE("order axioms on random monomials") {
    Rng rng(2024);
    for (const auto& order : sample_orders(5)) {
        for (int round = 0; round < 200; ++round) {
            Monomial a = random_monomial(rng, 5, 3);
            Monomial b = random_monomial(rng, 5, 3);
            Monomial c = random_monomial(rng, 5, 3);
            // antisymmetry and totality
            CHECK(order.cmp(a, b) == -order.cmp(b, a));
            CHECK((order.cmp(a, b) == 0) == (a == b));
            // 1 is the global minimum
            if (!a.is_one()) CHECK(order.greater(a, Monomial::one(5)));
            // multiplicativity
            if (order.less(a, b)) CHECK(order.less(a * c, b * c));
            // transitivity
            if (order.less(a, b) && order.less(b, c)) CHECK(order.less(a, c));
        }
    }
}

TEST_CASE("restricted orders compare like the parent on lifted monomials") {
    Rng rng(99);
    for (const auto& order : sample_orders(5)) {
        for (std::size_t removed = 1; removed < 5; ++removed) {  // keep slot 0: y_top needs it
            auto restricted = order.restricted(removed);
            CHECK(restricted.nvars() == 4);
            for (int round = 0; round < 50; ++round) {
                Monomial a4 = random_monomial(rng, 4, 3);
                Monomial b4 = random_monomial(rng, 4, 3);
                std::vector<int> a5(5, 0), b5(5, 0);
                for (std::size_t s = 0, t = 0; s < 5; ++s) {
                    if (s == removed) continue;
                    a5[s] = a4[t];
                    b5[s] = b4[t];
                    ++t;
                }
                CHECK(restricted.cmp(a4, b4) == order.cmp(Monomial(a5), Monomial(b5)));
            }
        }
    }
}

TEST_CASE("parse_order: full and partial lex specs") {
    Graph glued = testutil::load("glued_squares.graph");
    auto labels = glued.labels();

    auto partial = parse_order("lex:e6,e3", labels, true);
    CHECK(partial.kind() == OrderKind::lex);
    CHECK(partial.permutation() == std::vector<std::size_t>{5, 2, 0, 1, 3, 4, 6});
    CHECK(partial.spec(labels) == "lex:e6,e3,e1,e2,e4,e5,e7");

    CHECK_THROWS_AS(parse_order("lex:e6,e3", labels, false), std::invalid_argument);
    auto full = parse_order("lex:e6,e3,e1,e2,e4,e5,e7", labels, false);
    CHECK(full == partial);

    CHECK_THROWS_AS(parse_order("lex:e6,e9", labels, true), std::invalid_argument);
    CHECK_THROWS_AS(parse_order("lex:e6,e6", labels, true), std::invalid_argument);
    CHECK_THROWS_AS(parse_order("sillylex:e1", labels, true), std::invalid_argument);
}

TEST_CASE("parse_order: grevlex, ytop, weight") {
    Graph k4 = testutil::load("k4.graph");
    auto labels = k4.labels();

    auto ref = parse_order("grevlex", labels, false);
    CHECK(ref == reference_order(6));
    CHECK(ref.spec(labels) == "grevlex");

    auto ytop = parse_order("ytop:e6+grevlex", labels, false);
    CHECK(ytop.kind() == OrderKind::y_top);
    CHECK(ytop.y_slot() == 5);
    CHECK(ytop.y_compatible_for(5));
    CHECK(ytop.spec(labels) == "ytop:e6+grevlex");

    auto weight = parse_order("weight:3,1,0,0,0,2+lex:e1,e2,e3,e4,e5,e6", labels, false);
    CHECK(weight.kind() == OrderKind::weight);
    CHECK(weight.weights() == std::vector<long>{3, 1, 0, 0, 0, 2});
    CHECK(weight.spec(labels) == "weight:3,1,0,0,0,2+lex:e1,e2,e3,e4,e5,e6");
}

TEST_CASE("spec round-trips through parse_order") {
    Graph glued = testutil::load("glued_squares.graph");
    auto labels = glued.labels();
    for (const auto& order : sample_orders(7)) {
        auto again = parse_order(order.spec(labels), labels, false);
        CHECK(again == order);
    }
}

TEST_CASE("y_top over a tailored lex base reproduces the glued initial ideal") {
    Graph glued = testutil::load("glued_squares.graph");
    auto I = toric_ideal(glued);
    auto base = parse_order("lex:e3,e1,e2,e4,e5,e7,e6", glued.labels(), false);
    auto order = MonomialOrder::y_top(5, base);  // e6 on top
    auto gb = buchberger(I, order);
    auto lts = leading_terms(gb.generators(), order);
    auto mins = monomial_ideal_min_gens(lts);
    std::vector<std::string> printed;
    for (const auto& m : mins) printed.push_back(m.str(glued.labels()));
    CHECK(printed == std::vector<std::string>{"e6*e7", "e3*e7", "e2*e4*e6"});
}

TEST_CASE("reference order is grevlex over the identity permutation") {
    auto ref = reference_order(4);
    CHECK(ref.kind() == OrderKind::grevlex);
    CHECK(ref == MonomialOrder::grevlex(4));
}

}  // TEST_SUITE
