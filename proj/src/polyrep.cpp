#include "klr/polyrep.hpp"

#include <stdexcept>

#include "klr/config.hpp"

namespace klr {

namespace {

MultiPoly applyCrossing(const MultiPoly& f, int p, Color u, Color v) {
    if (u == v) return f.dividedDifference(p);
    MultiPoly g = f.swapVars(p);
    if (!adjacentColors(u, v)) return g;
    bool ascending = u < v;
    if (ascending != engineConfig().factorOnAscending) return g;
    int m = f.arity();
    return g * (MultiPoly::variable(m, p) + MultiPoly::variable(m, p + 1));
}

}  // namespace

void RawCombo::add(const Int& c, Diagram d) {
    if (parts.empty() && bottom.empty() && top.empty()) {
        bottom = d.bottom;
        top = d.topSeq();
    }
    if (d.bottom != bottom || d.topSeq() != top)
        throw std::invalid_argument("raw combo: boundary mismatch");
    if (c == 0) return;  // boundary recorded, no part
    parts.emplace_back(c, std::move(d));
}

SeqPoly diagramAction(const Diagram& d, const MultiPoly& f) {
    if (f.arity() != d.strands()) throw std::invalid_argument("arity must match strand count");
    ColorSeq seq = d.bottom;
    MultiPoly g = f;
    for (auto& gen : d.gens) {
        if (gen.kind == Gen::Dot) {
            g = g * MultiPoly::variable(g.arity(), gen.pos);
        } else {
            g = applyCrossing(g, gen.pos, seq[gen.pos], seq[gen.pos + 1]);
            std::swap(seq[gen.pos], seq[gen.pos + 1]);
        }
    }
    return SeqPoly{seq, g};
}

SeqPoly elementAction(const ThinElement& e, const MultiPoly& f) {
    if (e.isZero()) return SeqPoly{e.top(), MultiPoly(f.arity())};
    if (f.arity() != e.strands()) throw std::invalid_argument("arity must match strand count");
    MultiPoly acc(e.strands());
    for (auto& [t, c] : e.terms()) {
        MultiPoly g = f;
        for (int i = 0; i < e.strands(); ++i)
            for (int k = 0; k < t.dots[i]; ++k) g = g * MultiPoly::variable(g.arity(), i);
        ColorSeq seq = e.bottom();
        for (uint8_t p : canonicalWord(t.w)) {
            g = applyCrossing(g, p, seq[p], seq[p + 1]);
            std::swap(seq[p], seq[p + 1]);
        }
        acc += g * c;
    }
    return SeqPoly{e.top(), acc};
}

SeqPoly comboAction(const RawCombo& c, const MultiPoly& f) {
    MultiPoly acc(static_cast<int>(c.bottom.size()));
    for (auto& [k, d] : c.parts) acc += diagramAction(d, f).poly * k;
    return SeqPoly{c.top, acc};
}

namespace {

bool polyEq(const MultiPoly& x, const MultiPoly& y) {
    if (x.isZero() && y.isZero()) return true;  // arity-agnostic zero
    return x == y;
}

template <typename ActA, typename ActB>
bool oracleEqualGeneric(const ColorSeq& bottomA, const ColorSeq& bottomB, ActA actA, ActB actB) {
    if (bottomA != bottomB) throw std::invalid_argument("oracle: boundary mismatch");
    int k = static_cast<int>(bottomA.size());
    if (k == 0) return polyEq(actA(MultiPoly::constant(0, 1)), actB(MultiPoly::constant(0, 1)));
    MultiPoly::Expo e(k, 0);
    for (;;) {
        MultiPoly mono = MultiPoly::monomial(k, e);
        if (!polyEq(actA(mono), actB(mono))) return false;
        int i = 0;
        while (i < k && e[i] == k - 1) e[i++] = 0;
        if (i == k) break;
        ++e[i];
    }
    return true;
}

}  // namespace

bool oracleEqualRaw(const RawCombo& a, const RawCombo& b) {
    if (a.parts.empty() && b.parts.empty()) return true;
    const ColorSeq& ba = a.parts.empty() ? b.bottom : a.bottom;
    const ColorSeq& bb = b.parts.empty() ? a.bottom : b.bottom;
    return oracleEqualGeneric(
        ba, bb, [&](const MultiPoly& f) { return comboAction(a, f).poly; },
        [&](const MultiPoly& f) { return comboAction(b, f).poly; });
}

bool oracleEqualElements(const ThinElement& a, const ThinElement& b) {
    if (a.isZero() && b.isZero()) return true;
    const ColorSeq& ba = a.isZero() ? b.bottom() : a.bottom();
    const ColorSeq& bb = b.isZero() ? a.bottom() : b.bottom();
    return oracleEqualGeneric(
        ba, bb, [&](const MultiPoly& f) { return elementAction(a, f).poly; },
        [&](const MultiPoly& f) { return elementAction(b, f).poly; });
}

}  // namespace klr
