#include "toricgraph/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toricgraph {

Monomial::Monomial(std::vector<int> exps) : exp_(std::move(exps)) {
    if (exp_.size() > kMaxVariables) {
        throw std::invalid_argument("too many variables: " + std::to_string(exp_.size()));
    }
    for (int e : exp_) {
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t slot, int power) {
    Monomial m(nvars);
    if (slot >= nvars) throw std::invalid_argument("variable slot out of range");
    if (power < 1) throw std::invalid_argument("variable power must be positive");
    m.exp_[slot] = power;
    return m;
}

Monomial Monomial::from_signed_vector_positive(const std::vector<long long>& v) {
    Monomial m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0) m.exp_[i] = static_cast<int>(v[i]);
    }
    return m;
}

Monomial Monomial::from_signed_vector_negative(const std::vector<long long>& v) {
    Monomial m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) m.exp_[i] = static_cast<int>(-v[i]);
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exp_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

std::uint64_t Monomial::support_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] != 0) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] != 0) slots.push_back(i);
    }
    return slots;
}

bool Monomial::divides(const Monomial& other) const {
    if (exp_.size() != other.exp_.size()) {
        throw std::invalid_argument("monomials from different rings");
    }
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
    if (exp_.size() != other.exp_.size()) {
        throw std::invalid_argument("monomials from different rings");
    }
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] > 0 && other.exp_[i] > 0) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (exp_.size() != other.exp_.size()) {
        throw std::invalid_argument("monomials from different rings");
    }
    Monomial r = *this;
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += other.exp_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this)) {
        throw std::invalid_argument("monomial division requires divisibility: " + other.str() +
                                    " does not divide " + str());
    }
    Monomial r = *this;
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= other.exp_[i];
    return r;
}

Monomial Monomial::divided_by_power(std::size_t slot, int power) const {
    if (slot >= exp_.size() || power < 0 || exp_[slot] < power) {
        throw std::invalid_argument("cannot strip that variable power");
    }
    Monomial r = *this;
    r.exp_[slot] -= power;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials from different rings");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exp_.size(); ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials from different rings");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exp_.size(); ++i) r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    return r;
}

Monomial Monomial::erase_slot(std::size_t slot) const {
    if (slot >= exp_.size()) throw std::invalid_argument("erase_slot out of range");
    if (exp_[slot] != 0) {
        throw std::invalid_argument("cannot restrict a monomial that involves the removed variable");
    }
    Monomial r;
    r.exp_.reserve(exp_.size() - 1);
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (i != slot) r.exp_.push_back(exp_[i]);
    }
    return r;
}

int Monomial::cmp_identity_lex(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials from different rings");
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
        if (a.exp_[i] != b.exp_[i]) return a.exp_[i] > b.exp_[i] ? 1 : -1;
    }
    return 0;
}

std::string Monomial::str(const std::vector<std::string>& labels) const {
    if (labels.size() != exp_.size()) {
        throw std::invalid_argument("label list does not match variable count");
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] == 0) continue;
        if (!first) out << "*";
        out << labels[i];
        if (exp_[i] > 1) out << "^" << exp_[i];
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

std::string Monomial::str() const {
    std::vector<std::string> labels;
    labels.reserve(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i) labels.push_back("e" + std::to_string(i + 1));
    return str(labels);
}

Monomial Monomial::parse(const std::string& text, const std::vector<std::string>& labels) {
    Monomial m(labels.size());
    std::string stripped;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    }
    if (stripped.empty()) throw std::invalid_argument("empty monomial text");
    if (stripped == "1") return m;
    std::stringstream in(stripped);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        std::string name = factor;
        int power = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            power = std::stoi(factor.substr(caret + 1));
            if (power < 1) throw std::invalid_argument("bad exponent in " + factor);
        }
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) throw std::invalid_argument("unknown variable " + name);
        m.exp_[static_cast<std::size_t>(it - labels.begin())] += power;
    }
    return m;
}

}  // namespace toricgraph
