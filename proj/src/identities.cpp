#include "klr/identities.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "klr/config.hpp"
#include "klr/serialize.hpp"
#include "klr/symfunc.hpp"

namespace klr {

namespace {

using TD = ThickDiagram;
using json = nlohmann::json;

TD row(std::vector<TD> cells) {
    if (cells.empty()) return TD::id(1, 0);
    TD acc = std::move(cells.front());
    for (size_t i = 1; i < cells.size(); ++i) acc = TD::tensor(std::move(acc), std::move(cells[i]));
    return acc;
}

// rows listed bottom to top
TD stack(std::vector<TD> rows) {
    if (rows.empty()) throw std::logic_error("empty stack");
    TD acc = std::move(rows.front());
    for (size_t i = 1; i < rows.size(); ++i) acc = TD::compose(std::move(rows[i]), std::move(acc));
    return acc;
}

TD multiSplitTree(Color i, int a) {
    if (a <= 1) return TD::id(i, a);
    return TD::compose(TD::tensor(TD::id(i, 1), multiSplitTree(i, a - 1)), TD::split(i, 1, a - 1));
}

TD multiMergeTree(Color i, int a) {
    if (a <= 1) return TD::id(i, a);
    return TD::compose(TD::merge(i, 1, a - 1), TD::tensor(TD::id(i, 1), multiMergeTree(i, a - 1)));
}

json pj(const Partition& p) { return json(p.parts()); }

Partition pp(const json& j) { return Partition(j.get<std::vector<int>>()); }

std::vector<std::pair<Color, Color>> adjacentPairs(int rank) {
    std::vector<std::pair<Color, Color>> out;
    for (Color i = 1; i + 1 <= rank - 1; ++i) {
        out.push_back({i, i + 1});
        out.push_back({i + 1, i});
    }
    return out;
}

std::vector<ColorSeq> colorings(int k, int rank) {
    std::vector<ColorSeq> out;
    ColorSeq cur(k, 1);
    for (;;) {
        out.push_back(cur);
        int i = 0;
        while (i < k && cur[i] == rank - 1) cur[i++] = 1;
        if (i == k) break;
        ++cur[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// thin local relation suite, embedded in identity contexts
// ---------------------------------------------------------------------------

Diagram thinWord(const ColorSeq& colors, std::vector<Gen> gens) {
    return Diagram{colors, std::move(gens)};
}

std::vector<Gen> dotsAt(int pos, int count) {
    return std::vector<Gen>(count, Gen::dot(pos));
}

SidePair buildThinRelation(const json& p) {
    std::string rel = p.at("rel");
    ColorSeq colors = p.at("colors").get<ColorSeq>();
    int off = p.at("off");
    Color u = colors[off], v = colors[off + 1];
    SidePair sp;
    auto L = [&](std::vector<Gen> g) { sp.lhs.push_back({1, TD::thin(thinWord(colors, std::move(g)))}); };
    auto Lm = [&](std::vector<Gen> g) { sp.lhs.push_back({-1, TD::thin(thinWord(colors, std::move(g)))}); };
    auto R = [&](std::vector<Gen> g) { sp.rhs.push_back({1, TD::thin(thinWord(colors, std::move(g)))}); };

    if (rel == "dotcross_a") {  // x_up_left psi - psi x_low_right = 1
        L({Gen::cross(off), Gen::dot(off)});
        Lm({Gen::dot(off + 1), Gen::cross(off)});
        R({});
    } else if (rel == "dotcross_b") {  // psi x_low_left - x_up_right psi = 1
        L({Gen::dot(off), Gen::cross(off)});
        Lm({Gen::cross(off), Gen::dot(off + 1)});
        R({});
    } else if (rel == "psisq") {
        L({Gen::cross(off), Gen::cross(off)});
        if (u == v) {
            // zero right side
        } else if (adjacentColors(u, v)) {
            R({Gen::dot(off)});
            R({Gen::dot(off + 1)});
        } else {
            R({});
        }
    } else if (rel == "dotslide_a") {  // i != j: dot slides through, up-left = low-right
        L({Gen::cross(off), Gen::dot(off)});
        R({Gen::dot(off + 1), Gen::cross(off)});
    } else if (rel == "dotslide_b") {
        L({Gen::cross(off), Gen::dot(off + 1)});
        R({Gen::dot(off), Gen::cross(off)});
    } else if (rel == "braid") {
        Color t = colors[off + 2];
        L({Gen::cross(off), Gen::cross(off + 1), Gen::cross(off)});
        R({Gen::cross(off + 1), Gen::cross(off), Gen::cross(off + 1)});
        if (u == t && adjacentColors(u, v)) R({});
    } else {
        throw std::invalid_argument("unknown thin relation " + rel);
    }
    return sp;
}

std::vector<json> gridThinRelations(const RunConfig& cfg) {
    std::vector<json> out;
    int maxK = std::min(5, cfg.maxStrands);
    for (int k = 2; k <= maxK; ++k)
        for (auto& colors : colorings(k, cfg.rank)) {
            for (int off = 0; off + 1 < k; ++off) {
                Color u = colors[off], v = colors[off + 1];
                std::vector<std::string> rels;
                if (u == v) rels = {"dotcross_a", "dotcross_b", "psisq"};
                else rels = {"psisq", "dotslide_a", "dotslide_b"};
                for (auto& r : rels)
                    out.push_back({{"rel", r}, {"k", k}, {"off", off}, {"colors", colors}});
            }
            for (int off = 0; off + 2 < k; ++off)
                out.push_back({{"rel", "braid"}, {"k", k}, {"off", off}, {"colors", colors}});
        }
    return out;
}

// ---------------------------------------------------------------------------
// dot migration
// ---------------------------------------------------------------------------

SidePair buildDotMigration(const json& p) {
    int d = p.at("d");
    Color u = p.at("color");
    bool nw = p.at("variant") == "nw";
    ColorSeq colors{u, u};
    SidePair sp;
    std::vector<Gen> a, b;
    if (nw) {  // x_1^d psi - psi x_2^d
        a = {Gen::cross(0)};
        auto dd = dotsAt(0, d);
        a.insert(a.end(), dd.begin(), dd.end());
        b = dotsAt(1, d);
        b.push_back(Gen::cross(0));
    } else {  // psi x_1^d - x_2^d psi
        a = dotsAt(0, d);
        a.push_back(Gen::cross(0));
        b = {Gen::cross(0)};
        auto dd = dotsAt(1, d);
        b.insert(b.end(), dd.begin(), dd.end());
    }
    sp.lhs.push_back({1, TD::thin(thinWord(colors, a))});
    sp.lhs.push_back({-1, TD::thin(thinWord(colors, b))});
    for (int r = 0; r + 1 <= d; ++r) {
        std::vector<Gen> g = dotsAt(0, r);
        auto s = dotsAt(1, d - 1 - r);
        g.insert(g.end(), s.begin(), s.end());
        sp.rhs.push_back({1, TD::thin(thinWord(colors, g))});
    }
    return sp;
}

std::vector<json> gridDotMigration(const RunConfig& cfg) {
    std::vector<json> out;
    for (int d = 1; d <= 5; ++d)
        for (Color u = 1; u <= cfg.rank - 1; ++u)
            for (auto v : {"nw", "se"})
                out.push_back({{"d", d}, {"color", u}, {"variant", v}});
    return out;
}

// ---------------------------------------------------------------------------
// splitter structure
// ---------------------------------------------------------------------------

SidePair buildAssociativity(const json& p) {
    int a = p.at("a"), b = p.at("b"), c = p.at("c");
    Color i = p.at("i");
    SidePair sp;
    if (p.at("vertex") == "merge") {
        sp.lhs.push_back({1, stack({row({TD::merge(i, a, b), TD::id(i, c)}), TD::merge(i, a + b, c)})});
        sp.rhs.push_back({1, stack({row({TD::id(i, a), TD::merge(i, b, c)}), TD::merge(i, a, b + c)})});
    } else {
        sp.lhs.push_back({1, stack({TD::split(i, a + b, c), row({TD::split(i, a, b), TD::id(i, c)})})});
        sp.rhs.push_back({1, stack({TD::split(i, a, b + c), row({TD::id(i, a), TD::split(i, b, c)})})});
    }
    return sp;
}

std::vector<json> gridAssociativity(const RunConfig& cfg) {
    std::vector<json> out;
    int cap = std::min(5, cfg.maxStrands);
    for (int a = 1; a <= cap; ++a)
        for (int b = 1; a + b <= cap; ++b)
            for (int c = 1; a + b + c <= cap; ++c)
                for (auto v : {"merge", "split"})
                    out.push_back({{"a", a}, {"b", b}, {"c", c}, {"i", 1}, {"vertex", v}});
    return out;
}

SidePair buildPitchfork(const json& p) {
    int a = p.at("a"), b = p.at("b"), c = p.at("c");
    Color i = p.at("i"), j = p.at("j");
    std::string vertex = p.at("vertex"), side = p.at("side");
    SidePair sp;
    if (vertex == "split" && side == "right") {
        sp.lhs.push_back({1, stack({row({TD::split(i, a, b), TD::id(j, c)}),
                                    row({TD::id(i, a), TD::cross(i, b, j, c)}),
                                    row({TD::cross(i, a, j, c), TD::id(i, b)})})});
        sp.rhs.push_back({1, stack({TD::cross(i, a + b, j, c),
                                    row({TD::id(j, c), TD::split(i, a, b)})})});
    } else if (vertex == "split" && side == "left") {
        sp.lhs.push_back({1, stack({row({TD::id(j, c), TD::split(i, a, b)}),
                                    row({TD::cross(j, c, i, a), TD::id(i, b)}),
                                    row({TD::id(i, a), TD::cross(j, c, i, b)})})});
        sp.rhs.push_back({1, stack({TD::cross(j, c, i, a + b),
                                    row({TD::split(i, a, b), TD::id(j, c)})})});
    } else if (vertex == "merge" && side == "right") {
        sp.lhs.push_back({1, stack({row({TD::id(i, a), TD::cross(i, b, j, c)}),
                                    row({TD::cross(i, a, j, c), TD::id(i, b)}),
                                    row({TD::id(j, c), TD::merge(i, a, b)})})});
        sp.rhs.push_back({1, stack({row({TD::merge(i, a, b), TD::id(j, c)}),
                                    TD::cross(i, a + b, j, c)})});
    } else {
        sp.lhs.push_back({1, stack({row({TD::cross(j, c, i, a), TD::id(i, b)}),
                                    row({TD::id(i, a), TD::cross(j, c, i, b)}),
                                    row({TD::merge(i, a, b), TD::id(j, c)})})});
        sp.rhs.push_back({1, stack({row({TD::id(j, c), TD::merge(i, a, b)}),
                                    TD::cross(j, c, i, a + b)})});
    }
    return sp;
}

std::vector<json> gridPitchfork(const RunConfig& cfg) {
    std::vector<json> out;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; a + b <= 3; ++b)
            for (int c = 1; c <= 2 && a + b + c <= cfg.maxStrands; ++c)
                for (Color i = 1; i <= cfg.rank - 1; ++i)
                    for (Color j = 1; j <= cfg.rank - 1; ++j)
                        for (auto vx : {"merge", "split"})
                            for (auto sd : {"left", "right"})
                                out.push_back({{"a", a}, {"b", b}, {"c", c},
                                               {"i", i}, {"j", j},
                                               {"vertex", vx}, {"side", sd}});
    return out;
}

SidePair buildOpenThickEdge(const json& p) {
    int a = p.at("a"), b = p.at("b"), x = p.at("x");
    Color i = p.at("i");
    SidePair sp;
    sp.lhs.push_back({1, stack({TD::merge(i, a + x, b), TD::split(i, b + x, a)})});
    sp.rhs.push_back({1, stack({row({TD::split(i, x, a), TD::id(i, b)}),
                                row({TD::id(i, x), TD::cross(i, a, i, b)}),
                                row({TD::merge(i, x, b), TD::id(i, a)})})});
    return sp;
}

std::vector<json> gridOpenThickEdge(const RunConfig& cfg) {
    std::vector<json> out;
    int cap = std::min(4, cfg.maxStrands);
    for (int a = 1; a <= cap; ++a)
        for (int b = 1; a + b <= cap; ++b)
            for (int x = 0; a + b + x <= cap; ++x)
                out.push_back({{"a", a}, {"b", b}, {"x", x}, {"i", 1}});
    return out;
}

// ---------------------------------------------------------------------------
// exploded strands and digons
// ---------------------------------------------------------------------------

TD explodedStrand(Color i, int a, const std::vector<int>& dots) {
    std::vector<TD> mid;
    for (int p = 0; p < a; ++p) mid.push_back(TD::dot(i, 1, Partition{std::vector<int>{dots[p]}}));
    return stack({multiSplitTree(i, a), row(std::move(mid)), multiMergeTree(i, a)});
}

SidePair buildAntisymmetry(const json& p) {
    int a = p.at("a");
    Color i = p.at("i");
    std::vector<int> dots = p.at("dots").get<std::vector<int>>();
    SidePair sp;
    sp.lhs.push_back({1, explodedStrand(i, a, dots)});
    if (p.at("kind") == "swap") {
        int pos = p.at("p");
        std::vector<int> sw = dots;
        std::swap(sw[pos], sw[pos + 1]);
        sp.rhs.push_back({-1, explodedStrand(i, a, sw)});
    } else {  // sgn: dots are a permutation of the staircase {0..a-1}
        std::vector<int> perm(a);
        for (int t = 0; t < a; ++t) perm[t] = dots[a - 1 - t];
        int inv = 0;
        for (int s = 0; s < a; ++s)
            for (int t = s + 1; t < a; ++t)
                if (perm[s] > perm[t]) ++inv;
        sp.rhs.push_back({(inv % 2) ? -1 : 1, TD::id(i, a)});
    }
    return sp;
}

std::vector<json> gridAntisymmetry(const RunConfig& cfg) {
    std::vector<json> out;
    int amax = std::min(4, cfg.maxStrands);
    for (int a = 2; a <= amax; ++a) {
        int emax = (a == 4) ? 3 : a;  // keep the largest sweep bounded
        std::vector<int> dots(a, 0);
        for (;;) {
            for (int pos = 0; pos + 1 < a; ++pos)
                out.push_back({{"kind", "swap"}, {"a", a}, {"i", 1}, {"dots", dots}, {"p", pos}});
            bool staircase = true;
            std::vector<int> seen(a, 0);
            for (int v : dots)
                if (v >= a || seen[v]++) staircase = false;
            if (staircase)
                out.push_back({{"kind", "sgn"}, {"a", a}, {"i", 1}, {"dots", dots}});
            int idx = 0;
            while (idx < a && dots[idx] == emax) dots[idx++] = 0;
            if (idx == a) break;
            ++dots[idx];
        }
    }
    return out;
}

TD digonTree(Color i, int a, int b, const Partition& alpha, const Partition& beta) {
    return stack({TD::split(i, a, b),
                  row({TD::dot(i, a, alpha), TD::dot(i, b, beta)}),
                  TD::merge(i, a, b)});
}

SidePair buildDigon(const json& p) {
    int a = p.at("a"), b = p.at("b");
    Color i = p.at("i");
    Partition alpha = pp(p.at("alpha")), beta = pp(p.at("beta"));
    SidePair sp;
    sp.lhs.push_back({1, digonTree(i, a, b, alpha, beta)});
    std::string form = p.at("form");
    if (form == "hat") {
        if (beta == alpha.hat(a, b))
            sp.rhs.push_back({(beta.weight() % 2) ? -1 : 1, TD::id(i, a + b)});
    } else if (form == "dotless") {
        // zero right side
    } else {  // general collapse via the exploded dot pattern
        int n = a + b;
        std::vector<int> v(n);
        for (int t = 0; t < a; ++t) v[t] = alpha.part(t) + a - 1 - t;
        for (int t = 0; t < b; ++t) v[a + t] = beta.part(t) + b - 1 - t;
        std::vector<int> sorted = v;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        bool dup = false;
        for (int t = 0; t + 1 < n; ++t) dup = dup || sorted[t] == sorted[t + 1];
        if (!dup) {
            // sign of the sorting permutation
            int inv = 0;
            for (int s = 0; s < n; ++s)
                for (int t = s + 1; t < n; ++t)
                    if (v[s] < v[t]) ++inv;
            std::vector<int> gamma(n);
            for (int t = 0; t < n; ++t) gamma[t] = sorted[t] - (n - 1 - t);
            sp.rhs.push_back({(inv % 2) ? -1 : 1, TD::dot(i, n, Partition(gamma))});
        }
    }
    return sp;
}

std::vector<json> gridDigon(const RunConfig& cfg) {
    std::vector<json> out;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            for (auto& alpha : enumeratePartitions(a, b))
                for (auto& beta : enumeratePartitions(b, a))
                    out.push_back({{"form", "hat"}, {"a", a}, {"b", b}, {"i", 1},
                                   {"alpha", pj(alpha)}, {"beta", pj(beta)}});
            for (auto& alpha : enumeratePartitions(a, 3))
                for (auto& beta : enumeratePartitions(b, 3)) {
                    if (alpha.weight() > 3 || beta.weight() > 3) continue;
                    out.push_back({{"form", "general"}, {"a", a}, {"b", b}, {"i", 1},
                                   {"alpha", pj(alpha)}, {"beta", pj(beta)}});
                }
        }
    for (int a = 1; a <= cfg.maxStrands; ++a)
        for (int b = 1; a + b <= std::min(5, cfg.maxStrands); ++b)
            out.push_back({{"form", "dotless"}, {"a", a}, {"b", b}, {"i", 1},
                           {"alpha", pj(Partition{})}, {"beta", pj(Partition{})}});
    return out;
}

SidePair buildSkewSplitter(const json& p) {
    int a = p.at("a"), b = p.at("b");
    Color i = p.at("i");
    Partition gamma = pp(p.at("gamma")), psi = pp(p.at("psi"));
    SidePair sp;
    TD both = TD::compose(TD::dot(i, a, gamma), TD::dot(i, a, psi));
    sp.lhs.push_back({1, stack({TD::split(i, a, b),
                                row({std::move(both), TD::id(i, b)}),
                                TD::merge(i, a, b)})});
    Partition inner = psi.rectComplement(a, b);
    for (auto& [beta, c] : skewSchurExpand(gamma, inner))
        sp.rhs.push_back({c, TD::dot(i, a + b, beta)});
    return sp;
}

std::vector<json> gridSkewSplitter(const RunConfig& cfg) {
    std::vector<json> out;
    (void)cfg;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (auto& gamma : enumeratePartitions(a, 4)) {
                if (gamma.weight() > 4) continue;
                for (auto& psi : enumeratePartitions(a, b))
                    out.push_back({{"a", a}, {"b", b}, {"i", 1},
                                   {"gamma", pj(gamma)}, {"psi", pj(psi)}});
            }
    return out;
}

SidePair buildPomoc11(const json& p) {
    int a = p.at("a");
    Color i = p.at("i");
    SidePair sp;
    sp.lhs.push_back({1, TD::id(i, a + 1)});
    sp.rhs.push_back({1, stack({TD::split(i, 1, a),
                                row({TD::dot(i, 1, Partition{std::vector<int>{a}}), TD::id(i, a)}),
                                TD::merge(i, 1, a)})});
    return sp;
}

std::vector<json> gridPomoc11(const RunConfig& cfg) {
    std::vector<json> out;
    for (int a = 1; a + 1 <= std::min(5, cfg.maxStrands); ++a)
        out.push_back({{"a", a}, {"i", 1}});
    return out;
}

SidePair buildDotSlide(const json& p) {
    int a = p.at("a"), b = p.at("b");
    Color i = p.at("i"), j = p.at("j");
    Partition alpha = pp(p.at("alpha"));
    bool onLeft = p.at("variant") == "left";
    SidePair sp;
    if (onLeft) {
        sp.lhs.push_back({1, stack({row({TD::dot(i, a, alpha), TD::id(j, b)}), TD::cross(i, a, j, b)})});
        sp.rhs.push_back({1, stack({TD::cross(i, a, j, b), row({TD::id(j, b), TD::dot(i, a, alpha)})})});
    } else {
        sp.lhs.push_back({1, stack({row({TD::id(i, a), TD::dot(j, b, alpha)}), TD::cross(i, a, j, b)})});
        sp.rhs.push_back({1, stack({TD::cross(i, a, j, b), row({TD::dot(j, b, alpha), TD::id(i, a)})})});
    }
    return sp;
}

std::vector<json> gridDotSlide(const RunConfig& cfg) {
    std::vector<json> out;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2 && a + b <= cfg.maxStrands; ++b)
            for (auto [i, j] :
                 std::vector<std::pair<Color, Color>>{{1, 2}, {2, 1}, {1, 3}, {3, 1}})
                for (auto variant : {"left", "right"}) {
                    int side = std::string(variant) == "left" ? a : b;
                    for (auto& alpha : enumeratePartitions(side, 2)) {
                        if (alpha.weight() > 2) continue;
                        if (j >= cfg.rank || i >= cfg.rank) continue;
                        out.push_back({{"a", a}, {"b", b}, {"i", i}, {"j", j},
                                       {"variant", variant}, {"alpha", pj(alpha)}});
                    }
                }
    return out;
}

// ---------------------------------------------------------------------------
// thick R2 and R3 and the flattened squares
// ---------------------------------------------------------------------------

SidePair buildThickR2(const json& p) {
    int a = p.at("a"), b = p.at("b");
    Color i = p.at("i"), j = p.at("j");
    if (!adjacentColors(i, j)) throw std::invalid_argument("thick R2 needs adjacent colors");
    bool flip = p.value("flip", false);
    SidePair sp;
    if (!flip) {
        sp.lhs.push_back({1, stack({TD::cross(i, a, j, b), TD::cross(j, b, i, a)})});
        for (auto& alpha : enumeratePartitions(a, b))
            sp.rhs.push_back({1, row({TD::dot(i, a, alpha), TD::dot(j, b, alpha.hat(a, b))})});
    } else {
        sp.lhs.push_back({1, stack({TD::cross(j, b, i, a), TD::cross(i, a, j, b)})});
        for (auto& alpha : enumeratePartitions(a, b))
            sp.rhs.push_back({1, row({TD::dot(j, b, alpha.hat(a, b)), TD::dot(i, a, alpha)})});
    }
    return sp;
}

std::vector<json> gridThickR2(const RunConfig& cfg, bool flip) {
    std::vector<json> out;
    int cap = std::min(5, cfg.maxStrands);
    for (auto [i, j] : adjacentPairs(cfg.rank))
        for (int a = 0; a <= cap; ++a)
            for (int b = (a == 0 ? 1 : 0); a + b <= cap; ++b)
                out.push_back({{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"flip", flip}});
    return out;
}

// the decorated square with vertical edges tL (left) and tR (right);
// gammaBar decorates the middle strand below its crossings
TD squareTerm(Color i, Color j, int a, int bTop, int c, int tL, int tR,
              const Partition& alpha, const Partition& beta, const Partition& gammaBar) {
    // bottom [(i, tL + (a - tL)), (j, c), (i, (bTop - tR) + tR)]
    int ad = a - tL, bd = bTop - tR;
    return stack({row({TD::split(i, tL, ad), TD::id(j, c), TD::split(i, bd, tR)}),
                  row({TD::dot(i, tL, alpha), TD::id(i, ad), TD::dot(j, c, gammaBar),
                       TD::id(i, bd), TD::dot(i, tR, beta)}),
                  row({TD::id(i, tL), TD::id(i, ad), TD::cross(j, c, i, bd), TD::id(i, tR)}),
                  row({TD::id(i, tL), TD::cross(i, ad, i, bd), TD::id(j, c), TD::id(i, tR)}),
                  row({TD::id(i, tL), TD::id(i, bd), TD::cross(i, ad, j, c), TD::id(i, tR)}),
                  row({TD::merge(i, tL, bd), TD::id(j, c), TD::merge(i, ad, tR)})});
}

SidePair buildThickR3(const json& p) {
    int a = p.at("a"), b = p.at("b"), c = p.at("c");
    Color i = p.at("i"), j = p.at("j");
    if (!adjacentColors(i, j)) throw std::invalid_argument("thick R3 needs adjacent colors");
    SidePair sp;
    sp.lhs.push_back({1, stack({row({TD::cross(i, a, j, c), TD::id(i, b)}),
                                row({TD::id(j, c), TD::cross(i, a, i, b)}),
                                row({TD::cross(j, c, i, b), TD::id(i, a)})})});
    int top = std::min({a, b, c});
    for (int t = 0; t <= top; ++t) {
        Partition K = Partition::rectangle(t, c - t);
        for (auto& alpha : enumeratePartitions(t, c - t))
            for (auto& beta : enumeratePartitions(t, c - t))
                for (auto& gamma : enumeratePartitions(t, c - t)) {
                    Int coef = t == 0 ? Int(1) : multiLrCoeff({alpha, beta, gamma}, K);
                    if (coef == 0) continue;
                    sp.rhs.push_back(
                        {coef, squareTerm(i, j, a, b, c, t, t, alpha, beta, gamma.conjugate())});
                }
    }
    return sp;
}

std::vector<json> gridThickR3(const RunConfig& cfg) {
    std::vector<json> out;
    int cap = std::min(6, cfg.maxStrands);
    for (auto [i, j] : adjacentPairs(cfg.rank))
        for (int a = 0; a <= cap; ++a)
            for (int b = 0; a + b <= cap; ++b)
                for (int c = (a + b == 0 ? 1 : 0); a + b + c <= cap; ++c)
                    out.push_back({{"a", a}, {"b", b}, {"c", c}, {"i", i}, {"j", j}});
    return out;
}

std::vector<json> gridThickR3Sub(const RunConfig& cfg, bool elevenB) {
    std::vector<json> out;
    for (auto [i, j] : adjacentPairs(cfg.rank)) {
        if (elevenB) {
            for (int b = 0; b + 2 <= cfg.maxStrands && b <= 4; ++b)
                out.push_back({{"a", 1}, {"b", b}, {"c", 1}, {"i", i}, {"j", j}});
        } else {
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 2 && a + b + 1 <= cfg.maxStrands; ++b)
                    out.push_back({{"a", a}, {"b", b}, {"c", 1}, {"i", i}, {"j", j}});
        }
    }
    return out;
}

SidePair buildSquareFlatten(const json& p) {
    int a = p.at("a"), b = p.at("b"), c = p.at("c"), x = p.at("x");
    Color i = p.at("i"), j = p.at("j");
    bool plus = p.at("dir") == "plus";
    SidePair sp;
    if (plus) {
        // bottom [(i,a), (j,c), (i,b+x)], top [(i,b), (j,c), (i,a+x)]
        sp.lhs.push_back({1, stack({row({TD::cross(i, a, j, c), TD::id(i, b + x)}),
                                    row({TD::id(j, c), TD::merge(i, a, b + x)}),
                                    row({TD::id(j, c), TD::split(i, b, a + x)}),
                                    row({TD::cross(j, c, i, b), TD::id(i, a + x)})})});
        // passed term with the x-edge on the right
        sp.rhs.push_back({1, stack({row({TD::id(i, a), TD::id(j, c), TD::split(i, b, x)}),
                                    row({TD::id(i, a), TD::cross(j, c, i, b), TD::id(i, x)}),
                                    row({TD::cross(i, a, i, b), TD::id(j, c), TD::id(i, x)}),
                                    row({TD::id(i, b), TD::cross(i, a, j, c), TD::id(i, x)}),
                                    row({TD::id(i, b), TD::id(j, c), TD::merge(i, a, x)})})});
        int top = std::min({a, b, c - x});
        for (int t = 1; t <= top; ++t) {
            Partition K = Partition::rectangle(t, c - x - t);
            for (auto& alpha : enumeratePartitions(t, c - x - t))
                for (auto& beta : enumeratePartitions(t, c - x - t))
                    for (auto& gamma : enumeratePartitions(t, c - x - t)) {
                        Int coef = multiLrCoeff({alpha, beta, gamma}, K);
                        if (coef == 0) continue;
                        sp.rhs.push_back({coef, squareTerm(i, j, a, b + x, c, t, t + x, alpha, beta,
                                                           gamma.conjugate())});
                    }
        }
    } else {
        // bottom [(i,a+x), (j,c), (i,b)], top [(i,b+x), (j,c), (i,a)]
        sp.lhs.push_back({1, stack({row({TD::cross(i, a + x, j, c), TD::id(i, b)}),
                                    row({TD::id(j, c), TD::merge(i, a + x, b)}),
                                    row({TD::id(j, c), TD::split(i, b + x, a)}),
                                    row({TD::cross(j, c, i, b + x), TD::id(i, a)})})});
        int top = std::min({a, b, c});
        for (int t = 0; t <= top; ++t) {
            Partition K = Partition::rectangle(t + x, c - t);
            for (auto& alpha : enumeratePartitions(t + x, c - t))
                for (auto& beta : enumeratePartitions(t + x, c - t))
                    for (auto& gamma : enumeratePartitions(t + x, c - t)) {
                        if (beta.numParts() > t) continue;  // vanishing decoration
                        Int coef = (t + x == 0) ? Int(1) : multiLrCoeff({alpha, beta, gamma}, K);
                        if (coef == 0) continue;
                        // left vertical edge t+x, right vertical edge t
                        int ad = a - t, bd = b - t;
                        TD sq = stack(
                            {row({TD::split(i, t + x, ad), TD::id(j, c), TD::split(i, bd, t)}),
                             row({TD::dot(i, t + x, alpha), TD::id(i, ad),
                                  TD::dot(j, c, gamma.conjugate()), TD::id(i, bd),
                                  TD::dot(i, t, beta)}),
                             row({TD::id(i, t + x), TD::id(i, ad), TD::cross(j, c, i, bd),
                                  TD::id(i, t)}),
                             row({TD::id(i, t + x), TD::cross(i, ad, i, bd), TD::id(j, c),
                                  TD::id(i, t)}),
                             row({TD::id(i, t + x), TD::id(i, bd), TD::cross(i, ad, j, c),
                                  TD::id(i, t)}),
                             row({TD::merge(i, t + x, bd), TD::id(j, c), TD::merge(i, ad, t)})});
                        sp.rhs.push_back({coef, std::move(sq)});
                    }
        }
    }
    return sp;
}

std::vector<json> gridSquareFlatten(const RunConfig& cfg, bool plus) {
    std::vector<json> out;
    int cap = std::min(6, cfg.maxStrands);
    for (auto [i, j] : std::vector<std::pair<Color, Color>>{{1, 2}, {2, 1}}) {
        if (i >= cfg.rank || j >= cfg.rank) continue;
        for (int a = 0; a <= cap; ++a)
            for (int b = 0; a + b <= cap; ++b)
                for (int c = 0; a + b + c <= cap; ++c)
                    for (int x = 0; a + b + c + x <= cap; ++x) {
                        if (a + b + c + x == 0) continue;
                        out.push_back({{"a", a}, {"b", b}, {"c", c}, {"x", x},
                                       {"i", i}, {"j", j}, {"dir", plus ? "plus" : "minus"}});
                    }
    }
    return out;
}

// ---------------------------------------------------------------------------
// dual-route agreement on random elements
// ---------------------------------------------------------------------------

SidePair buildOracleAgreement(const json& p) {
    std::mt19937_64 rng(p.at("seed").get<uint64_t>());
    int rank = p.at("rank");
    int maxColor = std::max(1, rank - 1);
    int k = 2 + static_cast<int>(rng() % 4);  // up to 5 strands
    ColorSeq colors(k);
    for (auto& c : colors) c = 1 + static_cast<int>(rng() % maxColor);
    auto randWord = [&] {
        std::vector<Gen> g;
        int m = 1 + static_cast<int>(rng() % 6);
        for (int t = 0; t < m; ++t) {
            if (rng() % 3 == 0)
                g.push_back(Gen::dot(static_cast<int>(rng() % k)));
            else
                g.push_back(Gen::cross(static_cast<int>(rng() % (k - 1))));
        }
        return g;
    };
    Diagram d1{colors, randWord()};
    Diagram d2{colors, {}};
    if (rng() % 2 == 0) {
        // equal by construction: apply an exactness-preserving rewrite
        d2.gens = d1.gens;
        for (int attempt = 0; attempt < 4; ++attempt) {
            size_t t = rng() % d2.gens.size();
            if (t + 1 < d2.gens.size()) {
                auto &g1 = d2.gens[t], &g2 = d2.gens[t + 1];
                int lo1 = g1.pos, hi1 = g1.pos + (g1.kind == Gen::Cross ? 1 : 0);
                int lo2 = g2.pos, hi2 = g2.pos + (g2.kind == Gen::Cross ? 1 : 0);
                if (hi1 < lo2 || hi2 < lo1) std::swap(g1, g2);  // disjoint strands commute
            }
        }
    } else {
        for (int attempt = 0; attempt < 200; ++attempt) {
            d2.gens = randWord();
            if (d2.topSeq() == d1.topSeq()) break;
            d2.gens.clear();
        }
        if (d2.gens.empty()) d2.gens = d1.gens;
    }
    SidePair sp;
    sp.lhs.push_back({1, TD::thin(d1)});
    sp.rhs.push_back({1, TD::thin(d2)});
    return sp;
}

std::vector<json> gridOracleAgreement(const RunConfig& cfg) {
    std::vector<json> out;
    for (int t = 0; t < 1000; ++t)
        out.push_back({{"case", t}, {"seed", cfg.seed + static_cast<uint64_t>(t)},
                       {"rank", cfg.rank}});
    return out;
}

// ---------------------------------------------------------------------------
// verifier
// ---------------------------------------------------------------------------

ThinElement reduceSide(const std::vector<std::pair<Int, ThickDiagram>>& parts,
                       const ColorSeq& bottomFallback, const ColorSeq& topFallback) {
    ThinElement acc;
    bool any = false;
    for (auto& [c, d] : parts) {
        ThinElement e = d.explode() * c;
        if (!any && e.isZero() && e.bottom().empty()) continue;
        if (!any) {
            acc = std::move(e);
            any = true;
        } else {
            acc += e;
        }
    }
    if (!any) return ThinElement(bottomFallback, topFallback);
    return acc;
}

RawCombo rawSide(const std::vector<std::pair<Int, ThickDiagram>>& parts) {
    RawCombo combo;
    for (auto& [c, d] : parts) {
        auto [k, diag] = d.explodeRaw();
        combo.add(c * k, std::move(diag));
    }
    return combo;
}

ThinElement mutateElement(const ThinElement& rhs, const ThinElement& lhs) {
    if (!rhs.isZero()) {
        auto first = sortedTerms(rhs).front();
        ThinElement out = rhs;
        out.addTerm(first.first, -2 * first.second);  // flip one coefficient
        return out;
    }
    // corrupt a zero side with a boundary-compatible spurious term
    const ColorSeq& bottom = rhs.bottom().empty() ? lhs.bottom() : rhs.bottom();
    const ColorSeq& top = rhs.top().empty() ? lhs.top() : rhs.top();
    ThinElement out(bottom, top);
    size_t k = bottom.size();
    Perm w(k);
    std::vector<bool> used(k, false);
    for (size_t p = 0; p < k; ++p) {
        size_t q = 0;
        while (q < k && (used[q] || top[q] != bottom[p])) ++q;
        if (q == k) return out;  // no compatible term; leave zero
        w[p] = static_cast<uint8_t>(q);
        used[q] = true;
    }
    out.addTerm(Term{w, std::vector<int>(k, 0)}, 1);
    return out;
}

std::string diffString(const ThinElement& lhs, const ThinElement& rhs) {
    std::string out;
    int shown = 0;
    auto emit = [&](const Term& t, const Int& cl, const Int& cr) {
        if (shown >= 16) return;
        if (!out.empty()) out += "; ";
        out += printTerm(t, lhs.bottom().empty() ? rhs.bottom() : lhs.bottom());
        out += ": lhs " + cl.str() + ", rhs " + cr.str();
        ++shown;
    };
    // term deltas in the deterministic basis order
    for (auto& [t, c] : sortedTerms(lhs)) {
        auto it = rhs.terms().find(t);
        Int cr = it == rhs.terms().end() ? Int(0) : it->second;
        if (c != cr) emit(t, c, cr);
    }
    for (auto& [t, c] : sortedTerms(rhs))
        if (!lhs.terms().count(t)) emit(t, 0, c);
    if (out.empty()) out = "boundary mismatch";
    return out;
}

}  // namespace

json engineConfigJson() {
    const auto& cfg = engineConfig();
    return {{"orientation", cfg.factorOnAscending ? "ascending" : "descending"},
            {"signs",
             {{"merge", cfg.mergeSign}, {"split", cfg.splitSign},
              {"delta", cfg.deltaReversed ? "reversed" : "standard"}}}};
}

const std::vector<IdentitySpec>& identityRegistry() {
    static const std::vector<IdentitySpec> registry = [] {
        std::vector<IdentitySpec> r;
        auto add = [&](std::string name,
                       std::function<std::vector<json>(const RunConfig&)> grid,
                       std::function<SidePair(const json&)> build,
                       IdentitySpec::Mode mode = IdentitySpec::Equality) {
            r.push_back(IdentitySpec{std::move(name), mode, std::move(grid), std::move(build)});
        };
        add("thin_relations", gridThinRelations, buildThinRelation);
        add("dot_migration", gridDotMigration, buildDotMigration);
        add("splitter_associativity", gridAssociativity, buildAssociativity);
        add("pitchfork", gridPitchfork, buildPitchfork);
        add("opening_thick_edge", gridOpenThickEdge, buildOpenThickEdge);
        add("explode_antisymmetry", gridAntisymmetry, buildAntisymmetry);
        add("digon_eval", gridDigon, buildDigon);
        add("skew_splitter", gridSkewSplitter, buildSkewSplitter);
        add("pomoc11", gridPomoc11, buildPomoc11);
        add("dot_slide", gridDotSlide, buildDotSlide);
        add("thick_r2", [](const RunConfig& c) { return gridThickR2(c, false); }, buildThickR2);
        add("thick_r2_flip", [](const RunConfig& c) { return gridThickR2(c, true); }, buildThickR2);
        add("thick_r3", gridThickR3, buildThickR3);
        add("thick_r3_11b", [](const RunConfig& c) { return gridThickR3Sub(c, true); }, buildThickR3);
        add("thick_r3_a1b", [](const RunConfig& c) { return gridThickR3Sub(c, false); }, buildThickR3);
        add("square_flatten_plus", [](const RunConfig& c) { return gridSquareFlatten(c, true); },
            buildSquareFlatten);
        add("square_flatten_minus", [](const RunConfig& c) { return gridSquareFlatten(c, false); },
            buildSquareFlatten);
        add("oracle_agreement", gridOracleAgreement, buildOracleAgreement,
            IdentitySpec::RouteAgreement);
        return r;
    }();
    return registry;
}

const IdentitySpec* findIdentity(const std::string& name) {
    for (auto& s : identityRegistry())
        if (s.name == name) return &s;
    return nullptr;
}

json VerificationReport::toJson() const {
    json g = json::array();
    for (auto& t : grid) {
        json e = {{"params", t.params}, {"pass", t.pass},
                  {"lhs_terms", t.lhsTerms}, {"rhs_terms", t.rhsTerms}, {"millis", t.millis}};
        if (!t.pass) e["diff"] = t.diff;
        g.push_back(std::move(e));
    }
    return {{"identity", identity}, {"config", engineConfigJson()}, {"grid", std::move(g)},
            {"summary", {{"pass", passCount}, {"fail", failCount},
                         {"total", passCount + failCount}}}};
}

VerificationReport verifyIdentity(const IdentitySpec& spec, const RunConfig& config) {
    std::vector<json> tuples = spec.grid(config);
    VerificationReport rep;
    rep.identity = spec.name;
    rep.grid.resize(tuples.size());

    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= tuples.size()) break;
            auto t0 = std::chrono::steady_clock::now();
            TupleResult res;
            res.params = tuples[idx];
            try {
                SidePair sp = spec.build(tuples[idx]);
                ThinElement lhs = reduceSide(sp.lhs, {}, {});
                ThinElement rhs = reduceSide(sp.rhs, lhs.bottom(), lhs.top());
                if (config.mutate) {
                    // corrupt the reduce-route input so the check must fail:
                    // flip a coefficient of an equal side, or fake equality
                    // of an unequal one (the oracle route is left untouched)
                    rhs = equalElements(lhs, rhs) ? mutateElement(rhs, lhs) : lhs;
                }
                res.lhsTerms = lhs.numTerms();
                res.rhsTerms = rhs.numTerms();

                // degree audit on the raw diagrams, before any reduction;
                // meaningful only when the two sides claim the same morphism
                bool degreeOk = true;
                if (spec.mode == IdentitySpec::Equality) {
                    std::optional<int> deg;
                    for (auto side : {&sp.lhs, &sp.rhs})
                        for (auto& [c, d] : *side) {
                            auto [k, diag] = d.explodeRaw();
                            if (c * k == 0) continue;
                            int dd = diag.degree();
                            if (deg && *deg != dd) degreeOk = false;
                            deg = dd;
                        }
                }
                if (!degreeOk) {
                    res.pass = false;
                    res.diff = "degree audit failed";
                } else if (spec.mode == IdentitySpec::RouteAgreement) {
                    bool viaReduce = equalElements(lhs, rhs);
                    bool viaOracle = oracleEqualRaw(rawSide(sp.lhs), rawSide(sp.rhs));
                    res.pass = (viaReduce == viaOracle);
                    if (!res.pass)
                        res.diff = viaReduce ? "reduce says equal, oracle disagrees"
                                             : "oracle says equal, reduce disagrees";
                } else {
                    res.pass = equalElements(lhs, rhs);
                    if (!res.pass) {
                        res.diff = diffString(lhs, rhs);
                    } else if (config.oracle && !config.mutate) {
                        res.pass = oracleEqualRaw(rawSide(sp.lhs), rawSide(sp.rhs));
                        if (!res.pass) res.diff = "oracle disagreement";
                    }
                }
            } catch (const std::exception& e) {
                res.pass = false;
                res.diff = std::string("exception: ") + e.what();
            }
            res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
            rep.grid[idx] = std::move(res);
        }
    };

    unsigned workers = config.workers > 0
                           ? static_cast<unsigned>(config.workers)
                           : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<size_t>(tuples.size(), 1));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (auto& t : rep.grid) (t.pass ? rep.passCount : rep.failCount)++;
    return rep;
}

}  // namespace klr
