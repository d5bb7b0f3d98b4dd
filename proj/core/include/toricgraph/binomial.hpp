// Pure-difference binomials u - v and pure monomials (encoded as an absent
// minus side).  All ideal arithmetic in this toolkit stays inside this class;
// coefficients are fixed at +1/-1.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricgraph/monomial.hpp"
#include "toricgraph/order.hpp"

namespace toricgraph {

class Binomial {
public:
    explicit Binomial(Monomial m) : plus_(std::move(m)) {}
    // errors if the sides coincide (that would be the zero polynomial)
    Binomial(Monomial plus, Monomial minus);

    bool is_monomial() const { return !minus_.has_value(); }
    const Monomial& plus() const { return plus_; }
    const Monomial& minus() const;
    std::size_t nvars() const { return plus_.nvars(); }
    int degree() const;
    bool involves(std::size_t slot) const;
    bool degree_balanced() const;

    Binomial times(const Monomial& m) const;
    Binomial erase_slot(std::size_t slot) const;
    std::vector<long long> signed_vector() const;  // plus - minus exponentwise

    // plus becomes the leading term under the given order
    Binomial oriented(const MonomialOrder& order) const;
    // storage-canonical form: the identity-lex-smaller side is the minus
    Binomial canonical() const;

    // (d, init_y(f)): the terms of maximal y-degree, with that degree
    std::pair<int, Binomial> initial_y_form(std::size_t y) const;

    bool operator==(const Binomial& other) const = default;

    std::string str(const std::vector<std::string>& labels) const;
    std::string str() const;
    static Binomial parse(const std::string& text, const std::vector<std::string>& labels);

private:
    Monomial plus_;
    std::optional<Monomial> minus_;
};

// deterministic comparison for canonical generator listings
int cmp_binomials_identity_lex(const Binomial& a, const Binomial& b);

}  // namespace toricgraph
