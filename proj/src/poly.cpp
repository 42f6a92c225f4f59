#include "klr/poly.hpp"

#include <algorithm>

namespace klr {

MultiPoly MultiPoly::constant(int arity, Int c) {
    MultiPoly p(arity);
    p.addTerm(Expo(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int arity, Expo e, Int c) {
    if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("monomial arity mismatch");
    MultiPoly p(arity);
    p.addTerm(e, c);
    return p;
}

MultiPoly MultiPoly::variable(int arity, int idx) {
    Expo e(arity, 0);
    e.at(idx) = 1;
    return monomial(arity, e);
}

void MultiPoly::addTerm(const Expo& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(arity_);
    for (auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    for (auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    for (auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly p = *this;
    p += o;
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly p = *this;
    p -= o;
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    MultiPoly p(arity_);
    Expo e(arity_);
    for (auto& [e1, c1] : terms_) {
        for (auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
            p.addTerm(e, c1 * c2);
        }
    }
    return p;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
    if (c == 0) return MultiPoly(arity_);
    MultiPoly p(arity_);
    for (auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
    return p;
}

MultiPoly MultiPoly::divExact(const MultiPoly& divisor) const {
    if (arity_ != divisor.arity_) throw std::invalid_argument("arity mismatch");
    if (divisor.isZero()) throw std::invalid_argument("division by zero polynomial");
    MultiPoly rem = *this, quot(arity_);
    auto [de, dc] = divisor.leadingLex();
    Expo e(arity_);
    // Each step cancels the lex-leading term of rem. With Laurent exponents an
    // inexact division could descend forever, so cap the step count as a guard.
    long steps = 0, cap = 1000000;
    while (!rem.isZero()) {
        if (++steps > cap) throw std::runtime_error("inexact polynomial division (no termination)");
        auto [re, rc] = rem.leadingLex();
        for (int i = 0; i < arity_; ++i) e[i] = re[i] - de[i];
        if (rc % dc != 0) throw std::runtime_error("inexact polynomial division (coefficient)");
        Int q = rc / dc;
        quot.addTerm(e, q);
        rem -= divisor * MultiPoly::monomial(arity_, e, q);
    }
    return quot;
}

MultiPoly MultiPoly::swapVars(int idx) const {
    if (idx < 0 || idx + 1 >= arity_) throw std::invalid_argument("swapVars index out of range");
    MultiPoly p(arity_);
    Expo e(arity_);
    for (auto& [e1, c] : terms_) {
        e = e1;
        std::swap(e[idx], e[idx + 1]);
        p.addTerm(e, c);
    }
    return p;
}

MultiPoly MultiPoly::dividedDifference(int idx) const {
    MultiPoly num = *this - swapVars(idx);
    MultiPoly den(arity_);
    Expo e(arity_, 0);
    e[idx] = 1;
    den.addTerm(e, 1);
    e[idx] = 0;
    e[idx + 1] = 1;
    den.addTerm(e, -1);
    return num.divExact(den);
}

std::pair<MultiPoly::Expo, Int> MultiPoly::leadingLex() const {
    if (terms_.empty()) throw std::runtime_error("leading term of zero polynomial");
    auto it = std::prev(terms_.end());  // map is lex-ordered; last = largest
    return {it->first, it->second};
}

std::string MultiPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (arity_ == 1) ? var : var + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += a.str();
        } else {
            if (a != 1) s += a.str() + "*";
            s += mono;
        }
    }
    return s;
}

}  // namespace klr
