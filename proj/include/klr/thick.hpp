#pragma once

#include <string>
#include <vector>

#include "klr/partition.hpp"
#include "klr/polyrep.hpp"
#include "klr/thin.hpp"

namespace klr {

/// One boundary strand of a thick diagram.
struct ThickStrand {
    Color color;
    int thickness;  // >= 1; zero-thickness strands are erased by the builders
    bool operator==(const ThickStrand&) const = default;
};

using ThickObject = std::vector<ThickStrand>;

ColorSeq thinSeq(const ThickObject& obj);

/// Grading shift tag of a thick object: each strand of thickness a carries
/// the shift -a(a-1)/2 relative to its thin explosion. Tags are bookkeeping
/// only; equality of morphisms is decided on exploded thin elements.
int objectShift(const ThickObject& obj);

/// Composition tree over the thick generators. Vertical composition reads
/// compose(top, bottom); horizontal tensor reads left-to-right.
class ThickDiagram {
public:
    enum Kind { IdK, MergeK, SplitK, DotK, CrossK, ComposeK, TensorK, ZeroK, ThinK };

    static ThickDiagram id(Color i, int a);
    static ThickDiagram merge(Color i, int a, int b);
    static ThickDiagram split(Color i, int a, int b);
    static ThickDiagram dot(Color i, int a, Partition alpha);
    static ThickDiagram cross(Color iL, int a, Color iR, int b);
    static ThickDiagram compose(ThickDiagram top, ThickDiagram bottom);
    static ThickDiagram tensor(ThickDiagram left, ThickDiagram right);
    static ThickDiagram zero(ThickObject dom, ThickObject cod);
    static ThickDiagram thin(Diagram d);  // literal thin content, thickness-one strands

    Kind kind() const { return kind_; }
    const ThickObject& dom() const { return dom_; }
    const ThickObject& cod() const { return cod_; }

    /// Degree in the thick calculus: dots contribute 2|alpha|, both splitter
    /// vertices -ab, a thick crossing -ab i.j. Satisfies
    ///   explode().degree() == degree() + objectShift(cod) - objectShift(dom).
    int degree() const;

    /// Compile to a reduced thin element through the splitter cache.
    ThinElement explode() const;

    /// Lower to a single raw diagram word with a sign; the coefficient is zero
    /// for diagrams containing a vanishing decoration. Never reduces.
    std::pair<Int, Diagram> explodeRaw() const;

private:
    Kind kind_ = IdK;
    Color color_ = 1, color2_ = 1;
    int a_ = 0, b_ = 0;
    Partition alpha_;
    Diagram thin_;
    std::vector<ThickDiagram> kids_;
    ThickObject dom_, cod_;
};

// Generator elements (reduced, memoized). These are the concrete formulas the
// identity suite pins down: e_a = psi_{w0} x^{delta_a}, split = (e_a (x) e_b) e_{a+b},
// merge = e_{a+b} Psi_{a,b} (e_a (x) e_b), decorations via the exploded dot pattern.
ThinElement idempotent(Color i, int a);
ThinElement splitElement(Color i, int a, int b);
ThinElement mergeElement(Color i, int a, int b);
ThinElement thickDot(Color i, int a, const Partition& alpha);
ThinElement thickCross(Color iL, int a, Color iR, int b);

/// Product of two decorations expanded in the Schur basis.
ThinElement schurOnStrand(Color i, int a, const Partition& alpha, const Partition& beta);

// Splitter cache persistence: versioned text file with a checksum footer.
// Loading a corrupt or mismatched file returns false (callers recompute).
bool loadThickCache(const std::string& path, std::string& warning);
void saveThickCache(const std::string& path);
void clearThickCache();

}  // namespace klr
