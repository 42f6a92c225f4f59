#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace klr {

using Color = int;               // colors are 1..n-1 for sl(n)
using ColorSeq = std::vector<Color>;

/// Cartan pairing for sl(n): 2 on the diagonal, -1 for adjacent, 0 for distant.
inline int cartanPairing(Color i, Color j) {
    if (i == j) return 2;
    return (std::abs(i - j) == 1) ? -1 : 0;
}

inline bool adjacentColors(Color i, Color j) { return std::abs(i - j) == 1; }

struct CartanSln {
    int n = 4;  // rank parameter; colors 1..n-1
    void validate(Color c) const {
        if (c < 1 || c > n - 1) throw std::invalid_argument("color out of range for sl(n)");
    }
    void validate(const ColorSeq& s) const {
        for (Color c : s) validate(c);
    }
};

}  // namespace klr
