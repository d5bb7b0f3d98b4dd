// Ideals generated by pure-difference binomials and monomials, plus the
// Groebner machinery specialized to that class: Buchberger's algorithm,
// normal forms, ideal equality, variable saturation, and monomial-ideal
// helpers.  Every intermediate of every reduction stays in the class; this
// is asserted at each step.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricgraph/binomial.hpp"
#include "toricgraph/order.hpp"

namespace toricgraph {

enum class BasisStatus { raw, reduced_groebner };

class BinomialIdeal {
public:
    BinomialIdeal(std::size_t nvars, std::vector<Binomial> generators);
    static BinomialIdeal zero(std::size_t nvars) { return BinomialIdeal(nvars, {}); }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Binomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains_one() const;

    BasisStatus status() const { return status_; }
    const MonomialOrder& groebner_order() const;
    bool is_reduced_basis_under(const MonomialOrder& order) const;

    // tags the generator list as a reduced GB; only the engine calls this
    static BinomialIdeal as_reduced_basis(std::size_t nvars, std::vector<Binomial> generators,
                                          MonomialOrder order);

private:
    std::size_t nvars_;
    std::vector<Binomial> gens_;
    BasisStatus status_ = BasisStatus::raw;
    std::optional<MonomialOrder> order_;
};

struct BuchbergerOptions {
    // refuse runs that insert more than this many basis elements
    std::size_t generator_budget = 100000;
};

// Fully reduced remainder of f modulo the basis: no term of the result is
// divisible by any basis leading term.  nullopt encodes the zero polynomial.
std::optional<Binomial> normal_form(const Binomial& f, const std::vector<Binomial>& basis,
                                    const MonomialOrder& order);

// Unique reduced Groebner basis, generators monic, oriented by the order and
// sorted ascending by leading term.
BinomialIdeal buchberger(const BinomialIdeal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

// Buchberger criterion on the basis as given (no completion).
bool is_groebner(const std::vector<Binomial>& basis, const MonomialOrder& order);

// Compares reduced Groebner bases under the fixed reference order.
bool ideal_equal(const BinomialIdeal& a, const BinomialIdeal& b,
                 const BuchbergerOptions& options = {});

// (I : slot^inf).  Generators must be monomials or degree-balanced binomials
// (all engine inputs are); computed from a Groebner basis under a grevlex
// order that makes the variable cheapest, then stripping its powers.
BinomialIdeal saturate_variable(const BinomialIdeal& ideal, std::size_t slot,
                                const BuchbergerOptions& options = {});

// (I : (x_1 ... x_n)^inf) by chaining single-variable saturations.
BinomialIdeal saturate_all(const BinomialIdeal& ideal, const BuchbergerOptions& options = {});

// Divisibility-minimal generating set, deduplicated, sorted identity-lex.
std::vector<Monomial> monomial_ideal_min_gens(std::vector<Monomial> monomials);

// Height of a proper monomial ideal: minimum vertex cover of the support
// hypergraph of its generators.  Empty list has height 0; a unit generator
// errors.
int monomial_ideal_height(const std::vector<Monomial>& monomials);

std::vector<Monomial> leading_terms(const std::vector<Binomial>& basis, const MonomialOrder& order);

// "vars=<n> order=<spec>" header plus one generator per line
std::string ideal_str(const BinomialIdeal& ideal, const std::vector<std::string>& labels);

}  // namespace toricgraph
