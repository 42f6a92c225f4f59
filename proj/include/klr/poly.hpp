#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "klr/bigint.hpp"

namespace klr {

/// Sparse multivariate polynomial with exact integer coefficients.
/// Exponent vectors have fixed arity; negative exponents are allowed
/// (used for the Laurent variable q). No zero coefficients are stored.
class MultiPoly {
public:
    using Expo = std::vector<int>;

    MultiPoly() : arity_(0) {}
    explicit MultiPoly(int arity) : arity_(arity) {}

    static MultiPoly constant(int arity, Int c);
    static MultiPoly monomial(int arity, Expo e, Int c = 1);
    static MultiPoly variable(int arity, int idx);  // x_{idx}, 0-based

    int arity() const { return arity_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<Expo, Int>& terms() const { return terms_; }
    int numTerms() const { return static_cast<int>(terms_.size()); }

    void addTerm(const Expo& e, const Int& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const Int& c) const;
    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    /// Exact division; throws if the remainder is nonzero.
    MultiPoly divExact(const MultiPoly& divisor) const;

    /// Swap variables idx and idx+1 in every exponent vector.
    MultiPoly swapVars(int idx) const;

    /// (f − s_idx f) / (x_idx − x_{idx+1}); always exact.
    MultiPoly dividedDifference(int idx) const;

    /// Leading term in pure lex order (x_0 > x_1 > ...). Poly must be nonzero.
    std::pair<Expo, Int> leadingLex() const;

    /// Laurent-style printout in variable names; used for q-polynomials:
    /// e.g. "q^-4 + q^-2 + 2 + q^2 + q^4". For arity > 1 uses x1,x2,...
    std::string str(const std::string& var = "q") const;

private:
    int arity_;
    std::map<Expo, Int> terms_;
};

}  // namespace klr
