#include "klr/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace klr {

Perm identityPerm(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

int permLength(const Perm& w) {
    int inv = 0;
    for (size_t p = 0; p < w.size(); ++p)
        for (size_t q = p + 1; q < w.size(); ++q)
            if (w[p] > w[q]) ++inv;
    return inv;
}

bool isIdentity(const Perm& w) {
    for (size_t p = 0; p < w.size(); ++p)
        if (w[p] != p) return false;
    return true;
}

int minRightDescent(const Perm& w) {
    for (size_t c = 0; c + 1 < w.size(); ++c)
        if (w[c] > w[c + 1]) return static_cast<int>(c);
    return -1;
}

Perm mulBottomCross(const Perm& w, int c) {
    Perm v = w;
    std::swap(v[c], v[c + 1]);
    return v;
}

Perm permOfWord(const Word& word, int n) {
    // bottom letter applied first: w = s_top ... s_bottom, built by right multiplication
    Perm acc = identityPerm(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mulBottomCross(acc, *it);
    return acc;
}

Word canonicalWord(const Perm& w) {
    Word out;
    Perm v = w;
    for (;;) {
        int c = minRightDescent(v);
        if (c < 0) break;
        out.push_back(static_cast<uint8_t>(c));
        std::swap(v[c], v[c + 1]);
    }
    return out;
}

Perm blockTransposition(int a, int b) {
    Perm w(a + b);
    for (int p = 0; p < a; ++p) w[p] = static_cast<uint8_t>(p + b);
    for (int p = a; p < a + b; ++p) w[p] = static_cast<uint8_t>(p - a);
    return w;
}

}  // namespace klr
