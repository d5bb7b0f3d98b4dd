// Dense exponent vectors over a fixed set of ring variables.  Variables are
// ring slots 0..nvars-1; printable labels are supplied by callers (a graph
// maps slot j to its j-th surviving edge id).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toricgraph {

// Hard ceiling so divisibility prefilters fit in one word.
inline constexpr std::size_t kMaxVariables = 64;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t slot, int power = 1);
    static Monomial from_signed_vector_positive(const std::vector<long long>& v);
    static Monomial from_signed_vector_negative(const std::vector<long long>& v);

    std::size_t nvars() const { return exp_.size(); }
    int operator[](std::size_t slot) const { return exp_[slot]; }
    int& operator[](std::size_t slot) { return exp_[slot]; }
    const std::vector<int>& exponents() const { return exp_; }

    int degree() const;
    int degree_in(std::size_t slot) const { return exp_[slot]; }
    bool is_one() const;
    std::uint64_t support_mask() const;
    std::vector<std::size_t> support() const;

    bool divides(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // errors unless `other` divides this
    Monomial operator/(const Monomial& other) const;
    Monomial divided_by_power(std::size_t slot, int power) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    // restriction into the smaller ring obtained by removing one slot;
    // errors if the exponent there is nonzero
    Monomial erase_slot(std::size_t slot) const;

    bool operator==(const Monomial& other) const = default;

    // three-way comparison under the identity-permutation lexicographic
    // order, used only for storage-canonical choices
    static int cmp_identity_lex(const Monomial& a, const Monomial& b);

    std::string str(const std::vector<std::string>& labels) const;
    std::string str() const;
    static Monomial parse(const std::string& text, const std::vector<std::string>& labels);

private:
    std::vector<int> exp_;
};

}  // namespace toricgraph
