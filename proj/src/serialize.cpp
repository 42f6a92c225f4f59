#include "klr/serialize.hpp"

#include <cctype>

namespace klr {

std::string printTerm(const Term& t, const ColorSeq& bottom) {
    std::string out;
    Word w = canonicalWord(t.w);
    if (!w.empty()) {
        out += "psi[";
        for (size_t i = 0; i < w.size(); ++i) {  // print top letter first
            if (i) out += " ";
            out += std::to_string(w[w.size() - 1 - i] + 1);
        }
        out += "] ";
    }
    bool anyDot = false;
    for (int d : t.dots) anyDot = anyDot || d != 0;
    if (anyDot) {
        out += "x[";
        for (size_t i = 0; i < t.dots.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(t.dots[i]);
        }
        out += "] ";
    }
    out += "e(";
    for (size_t i = 0; i < bottom.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(bottom[i]);
    }
    return out + ")";
}

std::string printElement(const ThinElement& e) {
    if (e.isZero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [t, c] : sortedTerms(e)) {
        Int a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out += a.str() + " * ";
        out += printTerm(t, e.bottom());
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        ws();
        return i >= s.size();
    }
    char peek() {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool tryConsume(const std::string& tok) {
        ws();
        if (s.compare(i, tok.size(), tok) == 0) {
            i += tok.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        ws();
        if (i >= s.size() || s[i] != c)
            throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    }
    long integer() {
        ws();
        size_t start = i;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer", start);
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000) throw ParseError("integer too large", start);
            ++i;
        }
        return neg ? -v : v;
    }
};

struct Factor {
    bool isPsi;
    std::vector<int> values;  // psi letters (top first) or dot exponents
    size_t pos;
};

}  // namespace

RawCombo parseCombo(const std::string& text) {
    Cursor c{text};
    RawCombo combo;
    if (c.eof()) throw ParseError("empty input", 0);

    bool done = false;
    bool any = false;
    while (!done) {
        Int sign = 1;
        if (any) {
            if (c.tryConsume("+")) {
                sign = 1;
            } else if (c.tryConsume("-")) {
                sign = -1;
            } else {
                throw ParseError("expected '+' or '-' between terms", c.i);
            }
        } else if (c.tryConsume("-")) {
            sign = -1;
        }
        any = true;

        c.ws();
        Int coef = 1;
        if (c.i < text.size() && std::isdigit(static_cast<unsigned char>(text[c.i]))) {
            long v = c.integer();
            bool star = c.tryConsume("*");
            if (v == 0 && !star) {
                // a bare "0" term denotes the zero element
                if (c.eof()) break;
                continue;
            }
            coef = v;
        }
        coef *= sign;

        std::vector<Factor> factors;
        while (true) {
            c.ws();
            size_t pos = c.i;
            if (c.tryConsume("psi[")) {
                Factor f{true, {}, pos};
                while (!c.tryConsume("]")) {
                    f.values.push_back(static_cast<int>(c.integer()));
                    c.tryConsume(",");
                }
                if (f.values.empty()) throw ParseError("empty psi word", pos);
                factors.push_back(std::move(f));
            } else if (c.tryConsume("x[")) {
                Factor f{false, {}, pos};
                while (!c.tryConsume("]")) {
                    f.values.push_back(static_cast<int>(c.integer()));
                    c.tryConsume(",");
                }
                factors.push_back(std::move(f));
            } else {
                break;
            }
        }

        size_t epos = c.i;
        if (!c.tryConsume("e(")) throw ParseError("expected e(colors)", c.i);
        ColorSeq bottom;
        while (!c.tryConsume(")")) {
            long v = c.integer();
            if (v < 1) throw ParseError("colors must be positive", epos);
            bottom.push_back(static_cast<int>(v));
            c.tryConsume(",");
        }
        int k = static_cast<int>(bottom.size());

        Diagram d;
        d.bottom = bottom;
        // factors are written top to bottom; build the generator list bottom-up
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            if (it->isPsi) {
                for (auto v = it->values.rbegin(); v != it->values.rend(); ++v) {
                    if (*v < 1 || *v >= k)
                        throw ParseError("crossing position out of range", it->pos);
                    d.gens.push_back(Gen::cross(*v - 1));
                }
            } else {
                if (static_cast<int>(it->values.size()) != k)
                    throw ParseError("dot vector length must equal strand count", it->pos);
                for (int p = 0; p < k; ++p) {
                    if (it->values[p] < 0) throw ParseError("negative dot exponent", it->pos);
                    for (int r = 0; r < it->values[p]; ++r) d.gens.push_back(Gen::dot(p));
                }
            }
        }
        combo.add(coef, std::move(d));

        if (c.eof()) done = true;
    }
    return combo;
}

ThinElement parseElement(const std::string& text) {
    RawCombo combo = parseCombo(text);
    ThinElement out(combo.bottom, combo.top);
    for (auto& [k, d] : combo.parts) out += reduceDiagram(d) * k;
    return out;
}

}  // namespace klr
