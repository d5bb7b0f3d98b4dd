#include "toricgraph/order.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toricgraph {

namespace {

void check_permutation(const std::vector<std::size_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t slot : perm) {
        if (slot >= perm.size() || seen[slot]) {
            throw std::invalid_argument("order permutation must list every variable once");
        }
        seen[slot] = true;
    }
}

std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    return perm;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> perm) {
    check_permutation(perm);
    MonomialOrder o;
    o.kind_ = OrderKind::lex;
    o.nvars_ = perm.size();
    o.perm_ = std::move(perm);
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return grevlex(identity_perm(nvars)); }

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> perm) {
    check_permutation(perm);
    MonomialOrder o;
    o.kind_ = OrderKind::grevlex;
    o.nvars_ = perm.size();
    o.perm_ = std::move(perm);
    return o;
}

MonomialOrder MonomialOrder::weight(std::vector<long> weights, MonomialOrder tiebreak) {
    if (weights.size() != tiebreak.nvars()) {
        throw std::invalid_argument("weight vector and tiebreak order disagree on variable count");
    }
    for (long w : weights) {
        if (w < 0) throw std::invalid_argument("weight orders need nonnegative weights");
    }
    MonomialOrder o;
    o.kind_ = OrderKind::weight;
    o.nvars_ = weights.size();
    o.weights_ = std::move(weights);
    o.sub_ = std::make_shared<MonomialOrder>(std::move(tiebreak));
    return o;
}

MonomialOrder MonomialOrder::y_top(std::size_t y_slot, MonomialOrder base) {
    if (y_slot >= base.nvars()) {
        throw std::invalid_argument("y_top variable out of range");
    }
    MonomialOrder o;
    o.kind_ = OrderKind::y_top;
    o.nvars_ = base.nvars();
    o.y_ = y_slot;
    o.sub_ = std::make_shared<MonomialOrder>(std::move(base));
    return o;
}

std::size_t MonomialOrder::y_slot() const {
    if (kind_ != OrderKind::y_top) throw std::logic_error("y_slot on a non-y_top order");
    return y_;
}

const MonomialOrder& MonomialOrder::sub_order() const {
    if (!sub_) throw std::logic_error("order has no sub-order");
    return *sub_;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars_ || b.nvars() != nvars_) {
        throw std::invalid_argument("monomials do not match the order's ring");
    }
    switch (kind_) {
        case OrderKind::lex:
            for (std::size_t slot : perm_) {
                if (a[slot] != b[slot]) return a[slot] > b[slot] ? 1 : -1;
            }
            return 0;
        case OrderKind::grevlex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            // least significant variable first; smaller exponent there wins
            for (std::size_t i = perm_.size(); i-- > 0;) {
                std::size_t slot = perm_[i];
                if (a[slot] != b[slot]) return a[slot] < b[slot] ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::weight: {
            long long wa = 0, wb = 0;
            for (std::size_t i = 0; i < nvars_; ++i) {
                wa += static_cast<long long>(weights_[i]) * a[i];
                wb += static_cast<long long>(weights_[i]) * b[i];
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            return sub_->cmp(a, b);
        }
        case OrderKind::y_top:
            // base consulted only on equal y-degree, where comparing full
            // monomials and comparing y-free parts agree for every kind here
            if (a[y_] != b[y_]) return a[y_] > b[y_] ? 1 : -1;
            return sub_->cmp(a, b);
    }
    return 0;
}

bool MonomialOrder::y_compatible_for(std::size_t slot) const {
    if (kind_ == OrderKind::y_top) return y_ == slot;
    if (kind_ == OrderKind::lex) return !perm_.empty() && perm_[0] == slot;
    return false;
}

MonomialOrder MonomialOrder::restricted(std::size_t removed_slot) const {
    if (removed_slot >= nvars_) throw std::invalid_argument("restricted slot out of range");
    auto shrink = [&](const std::vector<std::size_t>& perm) {
        std::vector<std::size_t> out;
        out.reserve(perm.size() - 1);
        for (std::size_t slot : perm) {
            if (slot == removed_slot) continue;
            out.push_back(slot > removed_slot ? slot - 1 : slot);
        }
        return out;
    };
    switch (kind_) {
        case OrderKind::lex:
            return lex(shrink(perm_));
        case OrderKind::grevlex:
            return grevlex(shrink(perm_));
        case OrderKind::weight: {
            std::vector<long> w;
            w.reserve(weights_.size() - 1);
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i != removed_slot) w.push_back(weights_[i]);
            }
            return weight(std::move(w), sub_->restricted(removed_slot));
        }
        case OrderKind::y_top: {
            if (y_ == removed_slot) {
                // the distinguished variable is gone; what remains is the
                // base order on the smaller ring
                return sub_->restricted(removed_slot);
            }
            std::size_t y = y_ > removed_slot ? y_ - 1 : y_;
            return y_top(y, sub_->restricted(removed_slot));
        }
    }
    throw std::logic_error("unreachable");
}

bool MonomialOrder::operator==(const MonomialOrder& other) const {
    if (kind_ != other.kind_ || nvars_ != other.nvars_) return false;
    switch (kind_) {
        case OrderKind::lex:
        case OrderKind::grevlex:
            return perm_ == other.perm_;
        case OrderKind::weight:
            return weights_ == other.weights_ && *sub_ == *other.sub_;
        case OrderKind::y_top:
            return y_ == other.y_ && *sub_ == *other.sub_;
    }
    return false;
}

std::string MonomialOrder::spec(const std::vector<std::string>& labels) const {
    if (labels.size() != nvars_) throw std::invalid_argument("label list does not match order");
    std::ostringstream out;
    auto list_perm = [&]() {
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            if (i) out << ",";
            out << labels[perm_[i]];
        }
    };
    switch (kind_) {
        case OrderKind::lex:
            out << "lex:";
            list_perm();
            break;
        case OrderKind::grevlex:
            if (perm_ == identity_perm(nvars_)) {
                out << "grevlex";
            } else {
                out << "grevlex:";
                list_perm();
            }
            break;
        case OrderKind::weight:
            out << "weight:";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i) out << ",";
                out << weights_[i];
            }
            out << "+" << sub_->spec(labels);
            break;
        case OrderKind::y_top:
            out << "ytop:" << labels[y_] << "+" << sub_->spec(labels);
            break;
    }
    return out.str();
}

std::string MonomialOrder::spec() const {
    std::vector<std::string> labels;
    labels.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) labels.push_back("e" + std::to_string(i + 1));
    return spec(labels);
}

MonomialOrder reference_order(std::size_t nvars) { return MonomialOrder::grevlex(nvars); }

namespace {

std::size_t label_slot(const std::string& name, const std::vector<std::string>& labels) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw std::invalid_argument("unknown variable " + name + " in order spec");
    return static_cast<std::size_t>(it - labels.begin());
}

std::vector<std::size_t> parse_perm(const std::string& list, const std::vector<std::string>& labels,
                                    bool allow_partial) {
    std::vector<std::size_t> perm;
    std::vector<bool> used(labels.size(), false);
    std::stringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name.empty()) throw std::invalid_argument("empty variable name in order spec");
        std::size_t slot = label_slot(name, labels);
        if (used[slot]) throw std::invalid_argument("variable " + name + " listed twice in order spec");
        used[slot] = true;
        perm.push_back(slot);
    }
    if (perm.size() < labels.size()) {
        if (!allow_partial) {
            throw std::invalid_argument(
                "order spec must list every variable (pass the partial flag to complete by index)");
        }
        for (std::size_t slot = 0; slot < labels.size(); ++slot) {
            if (!used[slot]) perm.push_back(slot);
        }
    }
    return perm;
}

}  // namespace

MonomialOrder parse_order(const std::string& spec, const std::vector<std::string>& labels,
                          bool allow_partial) {
    if (spec == "grevlex") return MonomialOrder::grevlex(labels.size());
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "lex") {
        return MonomialOrder::lex(parse_perm(rest, labels, allow_partial));
    }
    if (head == "grevlex") {
        return MonomialOrder::grevlex(parse_perm(rest, labels, allow_partial));
    }
    if (head == "ytop") {
        auto plus = rest.find('+');
        if (plus == std::string::npos) {
            throw std::invalid_argument("ytop spec needs a base order after '+'");
        }
        std::size_t y = label_slot(rest.substr(0, plus), labels);
        return MonomialOrder::y_top(y, parse_order(rest.substr(plus + 1), labels, allow_partial));
    }
    if (head == "weight") {
        auto plus = rest.find('+');
        std::string wlist = plus == std::string::npos ? rest : rest.substr(0, plus);
        std::vector<long> weights;
        std::stringstream in(wlist);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty weight in order spec");
            weights.push_back(std::stol(tok));
        }
        if (weights.size() != labels.size()) {
            throw std::invalid_argument("weight spec must give one weight per variable");
        }
        MonomialOrder tiebreak = plus == std::string::npos
                                     ? MonomialOrder::grevlex(labels.size())
                                     : parse_order(rest.substr(plus + 1), labels, allow_partial);
        return MonomialOrder::weight(std::move(weights), std::move(tiebreak));
    }
    throw std::invalid_argument("unknown order spec: " + spec);
}

}  // namespace toricgraph
