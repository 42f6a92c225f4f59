#pragma once

#include <cstdint>
#include <vector>

namespace klr {

/// Permutation of strand positions: w[p] is the top position of the strand
/// entering at bottom position p. Positions are 0-based.
using Perm = std::vector<uint8_t>;

/// Crossing word, listed bottom to top; entry k crosses strands k and k+1.
using Word = std::vector<uint8_t>;

Perm identityPerm(int n);
int permLength(const Perm& w);  // inversion count
bool isIdentity(const Perm& w);

/// Right descent test: l(w s_c) < l(w), i.e. w(c) > w(c+1).
inline bool rightDescent(const Perm& w, int c) { return w[c] > w[c + 1]; }

/// Smallest right descent; -1 for the identity.
int minRightDescent(const Perm& w);

/// w composed with a crossing applied first at position c (swap entries c, c+1).
Perm mulBottomCross(const Perm& w, int c);

/// Permutation of a crossing word (bottom applied first).
Perm permOfWord(const Word& word, int n);

/// Lexicographically smallest reduced word, read bottom-first.
Word canonicalWord(const Perm& w);

/// Block transposition moving the first a strands past the next b strands.
Perm blockTransposition(int a, int b);

/// Apply a permutation to a sequence: out[w[p]] = seq[p].
template <typename T>
std::vector<T> applyPerm(const Perm& w, const std::vector<T>& seq) {
    std::vector<T> out(seq.size());
    for (size_t p = 0; p < seq.size(); ++p) out[w[p]] = seq[p];
    return out;
}

}  // namespace klr
