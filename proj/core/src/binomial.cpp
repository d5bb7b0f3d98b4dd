#include "toricgraph/binomial.hpp"

#include <stdexcept>

namespace toricgraph {

Binomial::Binomial(Monomial plus, Monomial minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
    if (plus_.nvars() != minus_->nvars()) {
        throw std::invalid_argument("binomial sides from different rings");
    }
    if (plus_ == *minus_) {
        throw std::invalid_argument("binomial sides coincide (zero polynomial)");
    }
}

const Monomial& Binomial::minus() const {
    if (!minus_) throw std::logic_error("monomial element has no minus side");
    return *minus_;
}

int Binomial::degree() const {
    int d = plus_.degree();
    if (minus_) d = std::max(d, minus_->degree());
    return d;
}

bool Binomial::involves(std::size_t slot) const {
    if (plus_[slot] != 0) return true;
    return minus_ && (*minus_)[slot] != 0;
}

bool Binomial::degree_balanced() const {
    return !minus_ || plus_.degree() == minus_->degree();
}

Binomial Binomial::times(const Monomial& m) const {
    if (!minus_) return Binomial(plus_ * m);
    return Binomial(plus_ * m, *minus_ * m);
}

Binomial Binomial::erase_slot(std::size_t slot) const {
    if (!minus_) return Binomial(plus_.erase_slot(slot));
    return Binomial(plus_.erase_slot(slot), minus_->erase_slot(slot));
}

std::vector<long long> Binomial::signed_vector() const {
    std::vector<long long> v(plus_.nvars(), 0);
    for (std::size_t i = 0; i < plus_.nvars(); ++i) {
        v[i] = plus_[i];
        if (minus_) v[i] -= (*minus_)[i];
    }
    return v;
}

Binomial Binomial::oriented(const MonomialOrder& order) const {
    if (!minus_) return *this;
    int c = order.cmp(plus_, *minus_);
    if (c == 0) throw std::logic_error("monomial order failed to separate binomial sides");
    if (c > 0) return *this;
    return Binomial(*minus_, plus_);
}

Binomial Binomial::canonical() const {
    if (!minus_) return *this;
    if (Monomial::cmp_identity_lex(plus_, *minus_) > 0) return *this;
    return Binomial(*minus_, plus_);
}

std::pair<int, Binomial> Binomial::initial_y_form(std::size_t y) const {
    int dp = plus_[y];
    if (!minus_) return {dp, *this};
    int dm = (*minus_)[y];
    if (dp == dm) return {dp, *this};
    if (dp > dm) return {dp, Binomial(plus_)};
    return {dm, Binomial(*minus_)};
}

std::string Binomial::str(const std::vector<std::string>& labels) const {
    std::string out = plus_.str(labels);
    if (minus_) out += " - " + minus_->str(labels);
    return out;
}

std::string Binomial::str() const {
    std::string out = plus_.str();
    if (minus_) out += " - " + minus_->str();
    return out;
}

Binomial Binomial::parse(const std::string& text, const std::vector<std::string>& labels) {
    auto dash = text.find(" - ");
    if (dash == std::string::npos) return Binomial(Monomial::parse(text, labels));
    return Binomial(Monomial::parse(text.substr(0, dash), labels),
                    Monomial::parse(text.substr(dash + 3), labels));
}

int cmp_binomials_identity_lex(const Binomial& a, const Binomial& b) {
    int c = Monomial::cmp_identity_lex(a.plus(), b.plus());
    if (c != 0) return c;
    bool am = a.is_monomial(), bm = b.is_monomial();
    if (am && bm) return 0;
    if (am != bm) return am ? -1 : 1;
    return Monomial::cmp_identity_lex(a.minus(), b.minus());
}

}  // namespace toricgraph
