#pragma once

#include "klr/poly.hpp"
#include "klr/thin.hpp"

namespace klr {

/// A polynomial tagged with the color sequence it lives over.
struct SeqPoly {
    ColorSeq seq;
    MultiPoly poly;
    bool operator==(const SeqPoly&) const = default;
};

/// Integer linear combination of raw (unreduced) diagrams over one boundary.
/// This is the input side of the independent oracle route: nothing here ever
/// touches the reduction engine.
struct RawCombo {
    ColorSeq bottom, top;
    std::vector<std::pair<Int, Diagram>> parts;

    void add(const Int& c, Diagram d);
};

/// Action of a single diagram on a polynomial in strand variables:
/// dots multiply, same-color crossings act by divided differences,
/// distant colors by the variable swap, adjacent colors by the swap with the
/// (x_k + x_{k+1}) factor attached in one fixed color order.
SeqPoly diagramAction(const Diagram& d, const MultiPoly& f);

/// Action of a reduced element (its basis terms replayed as diagrams).
SeqPoly elementAction(const ThinElement& e, const MultiPoly& f);

SeqPoly comboAction(const RawCombo& c, const MultiPoly& f);

/// Compare two raw combos on the monomial family {x^a : a_i < strands}.
/// That this finite family separates elements is an assumption (the operators
/// are linear over polynomials symmetric within each color block); it is
/// cross-checked against canonical-form equality by the acceptance suite.
bool oracleEqualRaw(const RawCombo& a, const RawCombo& b);

/// Same comparison for reduced elements (used to cross-check poly_action
/// against the canonical form on basis terms).
bool oracleEqualElements(const ThinElement& a, const ThinElement& b);

}  // namespace klr
