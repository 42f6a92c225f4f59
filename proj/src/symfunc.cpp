#include "klr/symfunc.hpp"

#include <algorithm>
#include <numeric>

namespace klr {

namespace {

// Determinant by permutation expansion; fine for the small matrices used here.
MultiPoly detPoly(const std::vector<std::vector<MultiPoly>>& mat, int arity) {
    int n = static_cast<int>(mat.size());
    MultiPoly det(arity);
    if (n == 0) return MultiPoly::constant(arity, 1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        MultiPoly prod = MultiPoly::constant(arity, (inv % 2) ? -1 : 1);
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            if (mat[i][perm[i]].isZero()) { zero = true; break; }
            prod = prod * mat[i][perm[i]];
        }
        if (!zero) det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

MultiPoly vandermonde(int m) {
    MultiPoly d = MultiPoly::constant(m, 1);
    for (int r = 0; r < m; ++r)
        for (int s = r + 1; s < m; ++s)
            d = d * (MultiPoly::variable(m, r) - MultiPoly::variable(m, s));
    return d;
}

}  // namespace

MultiPoly schurBialternant(const Partition& alpha, int m) {
    if (m < 1) throw std::invalid_argument("need at least one variable");
    if (alpha.numParts() > m) return MultiPoly(m);  // extended-zero convention
    std::vector<std::vector<MultiPoly>> mat(m, std::vector<MultiPoly>(m, MultiPoly(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            MultiPoly::Expo e(m, 0);
            e[i] = alpha.part(j) + m - 1 - j;
            mat[i][j] = MultiPoly::monomial(m, e);
        }
    return detPoly(mat, m).divExact(vandermonde(m));
}

MultiPoly elementary(int deg, int vars) {
    if (deg < 0 || deg > vars) return MultiPoly(std::max(vars, 1));
    // e_deg(x_1..x_n) = e_deg(x_1..x_{n-1}) + x_n e_{deg-1}(x_1..x_{n-1})
    int m = std::max(vars, 1);
    MultiPoly cur = MultiPoly::constant(m, 1);  // e_0 with no variables
    std::vector<MultiPoly> row{cur};            // row[k] = e_k(x_1..x_i)
    for (int i = 1; i <= vars; ++i) {
        std::vector<MultiPoly> next(std::min(i, deg) + 1, MultiPoly(m));
        for (int k = 0; k <= std::min(i, deg); ++k) {
            if (k < static_cast<int>(row.size())) next[k] += row[k];
            if (k >= 1 && k - 1 < static_cast<int>(row.size()))
                next[k] += MultiPoly::variable(m, i - 1) * row[k - 1];
        }
        row = std::move(next);
    }
    return (deg < static_cast<int>(row.size())) ? row[deg] : MultiPoly(m);
}

MultiPoly schurGiambelli(const Partition& alpha, int m) {
    if (m < 1) throw std::invalid_argument("need at least one variable");
    int k = alpha.numParts();
    std::vector<std::vector<MultiPoly>> mat(k, std::vector<MultiPoly>(k, MultiPoly(m)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            mat[i][j] = elementary(alpha.part(i) + j - i, m);
    return detPoly(mat, m);
}

std::map<Partition, Int> schurExpand(const MultiPoly& sym) {
    std::map<Partition, Int> out;
    MultiPoly rem = sym;
    int m = sym.arity();
    while (!rem.isZero()) {
        auto [e, c] = rem.leadingLex();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || (i + 1 < e.size() && e[i] < e[i + 1]))
                throw std::runtime_error("polynomial is not symmetric: leading term not a partition");
        Partition lam{std::vector<int>(e.begin(), e.end())};
        out[lam] = c;
        rem -= schurBialternant(lam, m) * c;
    }
    return out;
}

Int lrCoeff(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    if (gamma.weight() != alpha.weight() + beta.weight()) return 0;
    if (!gamma.contains(alpha) || !gamma.contains(beta)) return 0;
    int m = std::max(1, gamma.numParts());
    auto ex = schurExpand(schurBialternant(alpha, m) * schurBialternant(beta, m));
    auto it = ex.find(gamma);
    return it == ex.end() ? Int(0) : it->second;
}

Int multiLrCoeff(const std::vector<Partition>& alphas, const Partition& beta) {
    if (alphas.size() < 2) throw std::invalid_argument("need at least two factors");
    int total = 0;
    for (auto& a : alphas) total += a.weight();
    if (total != beta.weight()) return 0;
    int m = std::max(1, beta.numParts());
    MultiPoly prod = MultiPoly::constant(m, 1);
    for (auto& a : alphas) {
        prod = prod * schurBialternant(a, m);
        if (prod.isZero()) return 0;
    }
    auto ex = schurExpand(prod);
    auto it = ex.find(beta);
    return it == ex.end() ? Int(0) : it->second;
}

std::map<Partition, Int> skewSchurExpand(const Partition& gamma, const Partition& alpha) {
    std::map<Partition, Int> out;
    if (!gamma.contains(alpha)) return out;
    int w = gamma.weight() - alpha.weight();
    if (w == 0) {
        out[Partition{}] = 1;
        return out;
    }
    // beta must fit in the rectangle of gamma and have the complementary weight
    for (auto& beta : enumeratePartitions(gamma.numParts(), gamma.part(0))) {
        if (beta.weight() != w || !gamma.contains(beta)) continue;
        Int c = lrCoeff(alpha, beta, gamma);
        if (c != 0) out[beta] = c;
    }
    return out;
}

MultiPoly skewSchur(const Partition& gamma, const Partition& alpha, int m) {
    MultiPoly out(std::max(m, 1));
    for (auto& [beta, c] : skewSchurExpand(gamma, alpha)) out += schurBialternant(beta, m) * c;
    return out;
}

MultiPoly quantumInt(int n) {
    if (n < 0) throw std::invalid_argument("quantum integer of negative n");
    // (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{1-n}
    MultiPoly p(1);
    for (int e = n - 1; e >= 1 - n; e -= 2) p.addTerm({e}, 1);
    return p;
}

MultiPoly quantumFactorial(int n) {
    if (n < 0) throw std::invalid_argument("quantum factorial of negative n");
    MultiPoly p = MultiPoly::constant(1, 1);
    for (int i = 2; i <= n; ++i) p = p * quantumInt(i);
    return p;
}

MultiPoly quantumBinomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("quantum binomial needs 0 <= k <= n");
    return quantumFactorial(n).divExact(quantumFactorial(k) * quantumFactorial(n - k));
}

MultiPoly quantumBinomialPartition(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("rectangle dimensions must be nonnegative");
    MultiPoly p(1);
    for (auto& alpha : enumeratePartitions(a, b)) p.addTerm({2 * alpha.weight() - a * b}, 1);
    return p;
}

}  // namespace klr
