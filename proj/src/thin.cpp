#include "klr/thin.hpp"

#include "klr/config.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace klr {

namespace {

ColorSeq swapped(const ColorSeq& s, int c) {
    ColorSeq t = s;
    std::swap(t[c], t[c + 1]);
    return t;
}

// ---------------------------------------------------------------------------
// The reduction engine works by attaching generators at the BOTTOM of terms
// that are already in canonical form. Dots attach trivially (the basis keeps
// all dots at the bottom); a crossing attaches through the case analysis in
// pureCross below. Every correction produced along the way is a word with
// strictly fewer crossings, which is what makes the recursion terminate.
// ---------------------------------------------------------------------------

struct Pull {
    Word main;                              // Y ~ [c] ++ main, plus corrections
    std::vector<std::pair<int, Word>> corr; // strictly shorter words
};

// Rewrites a reduced word Y, of which c is a right descent, into a word with
// c as its bottom letter. Commutation moves are exact; each braid move emits
// a three-letters-shorter correction whose sign and presence depend on the
// colors at the bottom of the word (the thin R3 relation).
Pull pullToBottom(const Word& Y, int c, const ColorSeq& bottom) {
    assert(!Y.empty());
    int d = Y[0];
    if (d == c) return Pull{Word(Y.begin() + 1, Y.end()), {}};

    ColorSeq above1 = swapped(bottom, d);
    Word R(Y.begin() + 1, Y.end());
    Pull pr = pullToBottom(R, c, above1);  // R ~ [c] ++ pr.main over above1

    if (std::abs(c - d) >= 2) {
        Pull out;
        out.main.reserve(pr.main.size() + 1);
        out.main.push_back(static_cast<uint8_t>(d));
        out.main.insert(out.main.end(), pr.main.begin(), pr.main.end());
        for (auto& [k, w] : pr.corr) {
            Word v;
            v.reserve(w.size() + 1);
            v.push_back(static_cast<uint8_t>(d));
            v.insert(v.end(), w.begin(), w.end());
            out.corr.emplace_back(k, std::move(v));
        }
        return out;
    }

    // adjacent generator indices: braid the bottom triple [d, c, d]
    ColorSeq above2 = swapped(above1, c);
    Pull pv = pullToBottom(pr.main, d, above2);  // pr.main ~ [d] ++ pv.main

    int k0 = std::min(c, d);
    bool braidCorrection = (bottom[k0] == bottom[k0 + 2]) &&
                           adjacentColors(bottom[k0], bottom[k0 + 1]);
    int sign = (d < c) ? +1 : -1;  // [k,k+1,k] = [k+1,k,k+1] + correction

    Pull out;
    out.main.reserve(pv.main.size() + 2);
    out.main.push_back(static_cast<uint8_t>(d));
    out.main.push_back(static_cast<uint8_t>(c));
    out.main.insert(out.main.end(), pv.main.begin(), pv.main.end());
    if (braidCorrection) out.corr.emplace_back(sign, pv.main);
    for (auto& [k, w] : pv.corr) {
        Word v;
        v.reserve(w.size() + 2);
        v.push_back(static_cast<uint8_t>(d));
        v.push_back(static_cast<uint8_t>(c));
        v.insert(v.end(), w.begin(), w.end());
        out.corr.emplace_back(k, std::move(v));
    }
    for (auto& [k, w] : pr.corr) {
        Word v;
        v.reserve(w.size() + 1);
        v.push_back(static_cast<uint8_t>(d));
        v.insert(v.end(), w.begin(), w.end());
        out.corr.emplace_back(k, std::move(v));
    }
    return out;
}

ThinElement bottomCrossElement(const ThinElement& el, int c, const ColorSeq& newBottom);

struct WordCache {
    std::shared_mutex mu;
    std::unordered_map<std::string, std::shared_ptr<const ThinElement>> map;
};

WordCache& wordCache() {
    static WordCache w;
    return w;
}

std::string cacheKey(const ColorSeq& bottom, const Word& word) {
    std::string k;
    k.reserve(bottom.size() + word.size() + 1);
    for (Color c : bottom) k.push_back(static_cast<char>(c));
    k.push_back('\x7f');
    for (uint8_t g : word) k.push_back(static_cast<char>(g + 1));
    return k;
}

// Canonical form of a pure crossing word over the given bottom sequence.
ThinElement normalizeWord(const ColorSeq& bottom, const Word& word) {
    if (word.empty()) return ThinElement::identity(bottom);
    std::string key = cacheKey(bottom, word);
    {
        std::shared_lock lk(wordCache().mu);
        auto it = wordCache().map.find(key);
        if (it != wordCache().map.end()) return *it->second;
    }
    std::vector<ColorSeq> seqs(word.size() + 1);
    seqs[0] = bottom;
    for (size_t t = 0; t < word.size(); ++t) seqs[t + 1] = swapped(seqs[t], word[t]);
    ThinElement el = ThinElement::identity(seqs.back());
    for (int t = static_cast<int>(word.size()) - 1; t >= 0; --t)
        el = bottomCrossElement(el, word[t], seqs[t]);
    {
        std::unique_lock lk(wordCache().mu);
        wordCache().map.emplace(key, std::make_shared<const ThinElement>(el));
    }
    return el;
}

// psi_w composed with a crossing at position c below it, no dots in between.
ThinElement pureCross(const Perm& w, int c, const ColorSeq& newBottom) {
    ColorSeq j = swapped(newBottom, c);
    Perm wp = mulBottomCross(w, c);
    ColorSeq top = applyPerm(wp, newBottom);

    if (w[c] < w[c + 1]) {  // ascent: the crossing word stays reduced
        int cc = minRightDescent(wp);
        if (cc == c) {
            ThinElement out(newBottom, top);
            out.addTerm(Term{wp, std::vector<int>(newBottom.size(), 0)}, 1);
            return out;
        }
        Word Y;
        Word cw = canonicalWord(w);
        Y.reserve(cw.size() + 1);
        Y.push_back(static_cast<uint8_t>(c));
        Y.insert(Y.end(), cw.begin(), cw.end());
        Pull p = pullToBottom(Y, cc, newBottom);
        ThinElement out = bottomCrossElement(normalizeWord(swapped(newBottom, cc), p.main),
                                             cc, newBottom);
        for (auto& [k, word] : p.corr) out += normalizeWord(newBottom, word) * Int(k);
        return out;
    }

    // descent: c is a right descent of w; cancel against the quadratic relation
    Pull p = pullToBottom(canonicalWord(w), c, j);
    ThinElement out(newBottom, top);
    Color c1 = newBottom[c], c2 = newBottom[c + 1];
    if (c1 == c2) {
        // double same-color crossing vanishes
    } else if (adjacentColors(c1, c2)) {
        ThinElement e = normalizeWord(newBottom, p.main);
        std::vector<int> d1(newBottom.size(), 0), d2(newBottom.size(), 0);
        d1[c] = 1;
        d2[c + 1] = 1;
        out += withBottomDots(e, d1);
        out += withBottomDots(e, d2);
    } else {
        out += normalizeWord(newBottom, p.main);
    }
    for (auto& [k, word] : p.corr) {
        Word v;
        v.reserve(word.size() + 1);
        v.push_back(static_cast<uint8_t>(c));
        v.insert(v.end(), word.begin(), word.end());
        out += normalizeWord(newBottom, v) * Int(k);
    }
    return out;
}

ThinElement bottomCrossElement(const ThinElement& el, int c, const ColorSeq& newBottom) {
    assert(el.bottom() == swapped(newBottom, c));
    ThinElement out(newBottom, el.top());
    bool same = (newBottom[c] == newBottom[c + 1]);
    for (auto& [t, coef] : el.terms()) {
        std::vector<int> a2 = t.dots;
        std::swap(a2[c], a2[c + 1]);
        out += withBottomDots(pureCross(t.w, c, newBottom), a2) * coef;
        if (same && t.dots[c] != t.dots[c + 1]) {
            // dot migration corrections: the crossing is deleted
            int m = t.dots[c], l = t.dots[c + 1];
            int lo = std::min(m, l), d = std::abs(m - l);
            Int s = (m > l) ? coef : -coef;
            for (int r = 0; r < d; ++r) {
                std::vector<int> a3 = t.dots;
                a3[c] = r + lo;
                a3[c + 1] = (d - 1 - r) + lo;
                out.addTerm(Term{t.w, a3}, s);
            }
        }
    }
    return out;
}

}  // namespace

// --- Diagram ---------------------------------------------------------------

ColorSeq Diagram::topSeq() const {
    ColorSeq s = bottom;
    for (auto& g : gens)
        if (g.kind == Gen::Cross) std::swap(s[g.pos], s[g.pos + 1]);
    return s;
}

int Diagram::degree() const {
    ColorSeq s = bottom;
    int deg = 0;
    for (auto& g : gens) {
        if (g.kind == Gen::Dot) {
            deg += 2;
        } else {
            deg -= cartanPairing(s[g.pos], s[g.pos + 1]);
            std::swap(s[g.pos], s[g.pos + 1]);
        }
    }
    return deg;
}

void Diagram::validate() const {
    int k = strands();
    for (auto& g : gens) {
        if (g.kind == Gen::Dot) {
            if (g.pos < 0 || g.pos >= k) throw std::invalid_argument("dot position out of range");
        } else {
            if (g.pos < 0 || g.pos + 1 >= k)
                throw std::invalid_argument("crossing position out of range");
        }
    }
}

// --- ThinElement -----------------------------------------------------------

ThinElement ThinElement::identity(const ColorSeq& seq) {
    ThinElement e(seq, seq);
    e.addTerm(Term{identityPerm(static_cast<int>(seq.size())),
                   std::vector<int>(seq.size(), 0)},
              1);
    return e;
}

int termDegree(const Term& t, const ColorSeq& bottom) {
    int deg = 0;
    for (int d : t.dots) deg += 2 * d;
    for (size_t p = 0; p < t.w.size(); ++p)
        for (size_t q = p + 1; q < t.w.size(); ++q)
            if (t.w[p] > t.w[q]) deg -= cartanPairing(bottom[p], bottom[q]);
    return deg;
}

void ThinElement::addTerm(const Term& t, const Int& c) {
    if (c == 0) return;
    if (t.w.size() != bottom_.size() || t.dots.size() != bottom_.size())
        throw std::invalid_argument("term size does not match the boundary");
    if (applyPerm(t.w, bottom_) != top_)
        throw std::invalid_argument("term permutation does not match the boundary colors");
    int deg = termDegree(t, bottom_);
    if (degree_ && *degree_ != deg)
        throw std::invalid_argument("inhomogeneous element");
    degree_ = deg;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ThinElement& ThinElement::operator+=(const ThinElement& o) {
    if (o.isZero()) return *this;
    if (isZero() && terms_.empty() && bottom_.empty() && top_.empty()) {
        bottom_ = o.bottom_;
        top_ = o.top_;
    }
    if (bottom_ != o.bottom_ || top_ != o.top_)
        throw std::invalid_argument("boundary mismatch in element sum");
    for (auto& [t, c] : o.terms_) addTerm(t, c);
    return *this;
}

ThinElement& ThinElement::operator-=(const ThinElement& o) { return *this += o * Int(-1); }

ThinElement ThinElement::operator+(const ThinElement& o) const {
    ThinElement e = *this;
    e += o;
    return e;
}

ThinElement ThinElement::operator-(const ThinElement& o) const {
    ThinElement e = *this;
    e -= o;
    return e;
}

ThinElement ThinElement::operator*(const Int& c) const {
    ThinElement e(bottom_, top_);
    if (c == 0) return e;
    for (auto& [t, k] : terms_) e.addTerm(t, k * c);
    return e;
}

// --- public engine entry points ---------------------------------------------

ThinElement withBottomDots(const ThinElement& e, const std::vector<int>& dots) {
    ThinElement out(e.bottom(), e.top());
    for (auto& [t, c] : e.terms()) {
        Term t2 = t;
        for (size_t i = 0; i < dots.size(); ++i) t2.dots[i] += dots[i];
        out.addTerm(t2, c);
    }
    return out;
}

ThinElement reduceDiagram(const Diagram& d) {
    d.validate();
    size_t n = d.gens.size();
    std::vector<ColorSeq> seqs(n + 1);
    seqs[0] = d.bottom;
    for (size_t t = 0; t < n; ++t) {
        seqs[t + 1] = seqs[t];
        if (d.gens[t].kind == Gen::Cross)
            std::swap(seqs[t + 1][d.gens[t].pos], seqs[t + 1][d.gens[t].pos + 1]);
    }
    ThinElement el = ThinElement::identity(seqs[n]);
    for (int t = static_cast<int>(n) - 1; t >= 0; --t) {
        if (d.gens[t].kind == Gen::Dot) {
            std::vector<int> dots(d.bottom.size(), 0);
            dots[d.gens[t].pos] = 1;
            el = withBottomDots(el, dots);
        } else {
            el = bottomCrossElement(el, d.gens[t].pos, seqs[t]);
        }
    }
    return el;
}

ThinElement compose(const ThinElement& f, const ThinElement& g) {
    if (f.bottom() != g.top()) throw std::invalid_argument("compose: boundary mismatch");
    ThinElement out(g.bottom(), f.top());
    // group the bottom factor's terms by permutation so the crossing word is
    // replayed once per distinct permutation
    std::map<Perm, std::vector<std::pair<const Term*, const Int*>>> byPerm;
    for (auto& [t, c] : g.terms()) byPerm[t.w].push_back({&t, &c});
    for (auto& [v, grp] : byPerm) {
        Word wv = canonicalWord(v);
        std::vector<ColorSeq> seqs(wv.size() + 1);
        seqs[0] = g.bottom();
        for (size_t t = 0; t < wv.size(); ++t) seqs[t + 1] = swapped(seqs[t], wv[t]);
        ThinElement cur = f;
        for (int t = static_cast<int>(wv.size()) - 1; t >= 0; --t)
            cur = bottomCrossElement(cur, wv[t], seqs[t]);
        for (auto& [tp, cp] : grp) out += withBottomDots(cur, tp->dots) * (*cp);
    }
    return out;
}

ThinElement tensorElems(const ThinElement& f, const ThinElement& g) {
    ColorSeq bottom = f.bottom(), top = f.top();
    bottom.insert(bottom.end(), g.bottom().begin(), g.bottom().end());
    top.insert(top.end(), g.top().begin(), g.top().end());
    ThinElement out(bottom, top);
    int k = f.strands();
    for (auto& [t1, c1] : f.terms())
        for (auto& [t2, c2] : g.terms()) {
            Term t;
            t.w = t1.w;
            for (uint8_t p : t2.w) t.w.push_back(static_cast<uint8_t>(p + k));
            t.dots = t1.dots;
            t.dots.insert(t.dots.end(), t2.dots.begin(), t2.dots.end());
            out.addTerm(t, c1 * c2);
        }
    return out;
}

bool equalElements(const ThinElement& a, const ThinElement& b) {
    if (a.bottom() != b.bottom() || a.top() != b.top()) {
        if (a.isZero() && b.isZero()) return true;
        throw std::invalid_argument("equal: boundary mismatch");
    }
    return a.terms() == b.terms();
}

std::vector<std::pair<Term, Int>> sortedTerms(const ThinElement& e) {
    std::vector<std::pair<Term, Int>> v(e.terms().begin(), e.terms().end());
    std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        Word wx = canonicalWord(x.first.w), wy = canonicalWord(y.first.w);
        if (wx.size() != wy.size()) return wx.size() < wy.size();
        if (wx != wy) return wx < wy;
        return x.first.dots > y.first.dots;  // dot-dominant terms first
    });
    return v;
}

void clearThinCache() {
    std::unique_lock lk(wordCache().mu);
    wordCache().map.clear();
}

EngineConfig& engineConfig() {
    static EngineConfig cfg;
    return cfg;
}

}  // namespace klr
