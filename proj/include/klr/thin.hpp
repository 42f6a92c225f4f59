#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klr/bigint.hpp"
#include "klr/cartan.hpp"
#include "klr/perm.hpp"

namespace klr {

/// One diagram generator, listed bottom to top inside a Diagram.
struct Gen {
    enum Kind { Dot, Cross };
    Kind kind;
    int pos;  // 0-based strand (Dot) or crossing (Cross) position
    static Gen dot(int p) { return {Dot, p}; }
    static Gen cross(int p) { return {Cross, p}; }
    bool operator==(const Gen&) const = default;
};

/// A single planar diagram: colored bottom boundary plus a generator word.
struct Diagram {
    ColorSeq bottom;
    std::vector<Gen> gens;

    int strands() const { return static_cast<int>(bottom.size()); }
    ColorSeq topSeq() const;
    int degree() const;  // 2 per dot, -i.j per crossing
    void validate() const;
};

/// Canonical basis term: crossings along the canonical reduced word of w,
/// applied above the dot monomial x^dots on the bottom sequence.
struct Term {
    Perm w;
    std::vector<int> dots;
    auto operator<=>(const Term&) const = default;
};

/// Z-linear combination of basis terms with a fixed boundary. Elements are
/// kept reduced (canonical form) at all times and are homogeneous.
class ThinElement {
public:
    ThinElement() = default;
    ThinElement(ColorSeq bottom, ColorSeq top)
        : bottom_(std::move(bottom)), top_(std::move(top)) {}

    static ThinElement identity(const ColorSeq& seq);

    const ColorSeq& bottom() const { return bottom_; }
    const ColorSeq& top() const { return top_; }
    const std::map<Term, Int>& terms() const { return terms_; }
    int numTerms() const { return static_cast<int>(terms_.size()); }
    bool isZero() const { return terms_.empty(); }
    std::optional<int> degree() const { return degree_; }
    int strands() const { return static_cast<int>(bottom_.size()); }

    void addTerm(const Term& t, const Int& c);

    ThinElement& operator+=(const ThinElement& o);
    ThinElement& operator-=(const ThinElement& o);
    ThinElement operator+(const ThinElement& o) const;
    ThinElement operator-(const ThinElement& o) const;
    ThinElement operator*(const Int& c) const;
    ThinElement operator-() const { return *this * Int(-1); }

    bool operator==(const ThinElement& o) const {
        return bottom_ == o.bottom_ && top_ == o.top_ && terms_ == o.terms_;
    }

private:
    ColorSeq bottom_, top_;
    std::map<Term, Int> terms_;
    std::optional<int> degree_;
};

int termDegree(const Term& t, const ColorSeq& bottom);

/// Canonical form of a diagram (the reduction engine entry point).
ThinElement reduceDiagram(const Diagram& d);

/// Vertical composition f over g; requires bottom(f) == top(g).
ThinElement compose(const ThinElement& f, const ThinElement& g);

/// Horizontal juxtaposition, g placed to the right of f.
ThinElement tensorElems(const ThinElement& f, const ThinElement& g);

/// Attach a dot monomial at the bottom of every term.
ThinElement withBottomDots(const ThinElement& e, const std::vector<int>& dots);

/// True when both reduce to the same canonical form; throws on boundary mismatch.
bool equalElements(const ThinElement& a, const ThinElement& b);

/// Deterministic basis order used for printing and diffs:
/// by crossing count, then canonical word, then dot vector.
std::vector<std::pair<Term, Int>> sortedTerms(const ThinElement& e);

/// Engine cache maintenance (safe to call between runs).
void clearThinCache();

}  // namespace klr
