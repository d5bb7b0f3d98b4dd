// Monomial orders: lexicographic and graded-reverse-lexicographic over a
// variable permutation, nonnegative weight orders with a tiebreak, and the
// y-top construction that compares the distinguished variable's degree first
// and is therefore y-compatible by construction.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "toricgraph/monomial.hpp"

namespace toricgraph {

enum class OrderKind { lex, grevlex, weight, y_top };

class MonomialOrder {
public:
    static MonomialOrder lex(std::vector<std::size_t> perm);
    static MonomialOrder grevlex(std::size_t nvars);
    static MonomialOrder grevlex(std::vector<std::size_t> perm);
    static MonomialOrder weight(std::vector<long> weights, MonomialOrder tiebreak);
    static MonomialOrder y_top(std::size_t y_slot, MonomialOrder base);

    OrderKind kind() const { return kind_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }
    const std::vector<long>& weights() const { return weights_; }
    std::size_t y_slot() const;
    const MonomialOrder& sub_order() const;

    // three-way: negative if a < b, zero if equal, positive if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    // true when leading terms under this order always carry the maximal
    // y-degree: the y_top construction with that slot, or lex with the
    // slot as the greatest variable
    bool y_compatible_for(std::size_t slot) const;

    // induced order on the ring with one slot removed
    MonomialOrder restricted(std::size_t removed_slot) const;

    bool operator==(const MonomialOrder& other) const;

    // round-trips through parse_order
    std::string spec(const std::vector<std::string>& labels) const;
    std::string spec() const;

private:
    MonomialOrder() = default;

    OrderKind kind_ = OrderKind::grevlex;
    std::size_t nvars_ = 0;
    std::vector<std::size_t> perm_;          // lex / grevlex: most significant first
    std::vector<long> weights_;              // weight only
    std::size_t y_ = 0;                      // y_top only
    std::shared_ptr<const MonomialOrder> sub_;  // weight tiebreak / y_top base
};

// reference order used for canonical ideal comparisons
MonomialOrder reference_order(std::size_t nvars);

// Grammar: "lex:e6,e3,..." (full permutation unless partial completion is
// requested), "grevlex", "grevlex:e2,e1,...", "ytop:e6+<base>",
// "weight:3,1,0,...[+<tiebreak>]".  Unknown labels error.  With
// allow_partial, lex lists may name a prefix; the rest follows in slot order.
MonomialOrder parse_order(const std::string& spec, const std::vector<std::string>& labels,
                          bool allow_partial = false);

}  // namespace toricgraph
