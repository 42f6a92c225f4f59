#include "klr/thick.hpp"

#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "klr/config.hpp"
#include "klr/serialize.hpp"

namespace klr {

namespace {

std::vector<int> deltaStaircase(int a) {
    std::vector<int> d(a);
    for (int i = 0; i < a; ++i) d[i] = engineConfig().deltaReversed ? i : a - 1 - i;
    return d;
}

void appendDots(std::vector<Gen>& gens, const std::vector<int>& dots, int off) {
    for (size_t i = 0; i < dots.size(); ++i)
        for (int r = 0; r < dots[i]; ++r) gens.push_back(Gen::dot(off + static_cast<int>(i)));
}

void appendWord(std::vector<Gen>& gens, const Word& w, int off) {
    for (uint8_t p : w) gens.push_back(Gen::cross(off + p));
}

// e_a = psi_{w0} x^{delta_a}: staircase dots below the longest crossing word.
void appendIdempotent(std::vector<Gen>& gens, int a, int off) {
    if (a <= 1) return;
    appendDots(gens, deltaStaircase(a), off);
    Perm w0(a);
    for (int i = 0; i < a; ++i) w0[i] = static_cast<uint8_t>(a - 1 - i);
    appendWord(gens, canonicalWord(w0), off);
}

void appendBlockCross(std::vector<Gen>& gens, int a, int b, int off) {
    appendWord(gens, canonicalWord(blockTransposition(a, b)), off);
}

void appendMerge(std::vector<Gen>& gens, int a, int b, int off) {
    appendIdempotent(gens, a, off);
    appendIdempotent(gens, b, off + a);
    appendBlockCross(gens, a, b, off);
    appendIdempotent(gens, a + b, off);
}

void appendSplit(std::vector<Gen>& gens, int a, int b, int off) {
    appendIdempotent(gens, a + b, off);
    appendIdempotent(gens, a, off);
    appendIdempotent(gens, b, off + a);
}

// multi-merge of `a` thin strands, folded from the left
int appendMultiMerge(std::vector<Gen>& gens, int a, int off) {
    int merges = 0;
    for (int t = 2; t <= a; ++t) {
        appendMerge(gens, t - 1, 1, off);
        ++merges;
    }
    return merges;  // each carries one merge sign
}

// exploded decoration: split to thin strands, dots alpha_j + a - j, re-merge
int appendThickDot(std::vector<Gen>& gens, int a, const Partition& alpha, int off) {
    appendIdempotent(gens, a, off);
    std::vector<int> dots(a);
    for (int j = 0; j < a; ++j) dots[j] = alpha.part(j) + a - 1 - j;
    appendDots(gens, dots, off);
    return appendMultiMerge(gens, a, off);
}

struct Lowered {
    Int coef;
    Diagram diagram;
};

int signPow(int s, int n) { return (s < 0 && (n % 2)) ? -1 : 1; }

Lowered lowerLeaf(ThickDiagram::Kind kind, Color c1, Color c2, int a, int b,
                  const Partition& alpha, const ThickObject& dom) {
    Lowered out{1, Diagram{thinSeq(dom), {}}};
    auto& gens = out.diagram.gens;
    const auto& cfg = engineConfig();
    switch (kind) {
        case ThickDiagram::IdK:
            appendIdempotent(gens, a, 0);
            break;
        case ThickDiagram::MergeK:
            appendMerge(gens, a, b, 0);
            out.coef = cfg.mergeSign;
            break;
        case ThickDiagram::SplitK:
            appendSplit(gens, a, b, 0);
            out.coef = cfg.splitSign;
            break;
        case ThickDiagram::DotK: {
            if (alpha.numParts() > a) {  // decoration outside P(a) vanishes
                out.coef = 0;
                appendIdempotent(gens, a, 0);
                break;
            }
            int merges = appendThickDot(gens, a, alpha, 0);
            out.coef = Int(signPow(cfg.mergeSign, merges)) * signPow(cfg.splitSign, merges);
            break;
        }
        case ThickDiagram::CrossK: {
            if (c1 == c2) {
                appendMerge(gens, a, b, 0);
                appendSplit(gens, b, a, 0);
                out.coef = Int(cfg.mergeSign) * cfg.splitSign;
            } else {
                // explode both strands with staircase dots, cross blockwise,
                // recombine on the far side
                appendIdempotent(gens, a, 0);
                appendDots(gens, deltaStaircase(a), 0);
                appendIdempotent(gens, b, a);
                appendDots(gens, deltaStaircase(b), a);
                appendBlockCross(gens, a, b, 0);
                int merges = appendMultiMerge(gens, b, 0);
                merges += appendMultiMerge(gens, a, b);
                out.coef = Int(signPow(cfg.mergeSign, merges)) * signPow(cfg.splitSign, merges);
            }
            break;
        }
        default:
            throw std::logic_error("not a leaf");
    }
    return out;
}

std::string leafKey(ThickDiagram::Kind kind, Color c1, Color c2, int a, int b,
                    const Partition& alpha) {
    const auto& cfg = engineConfig();
    std::ostringstream os;
    os << int(kind) << ':' << c1 << ',' << c2 << ',' << a << ',' << b << ':' << alpha.str()
       << ":cfg" << cfg.factorOnAscending << cfg.mergeSign << cfg.splitSign << cfg.deltaReversed;
    return os.str();
}

struct ThickCache {
    std::shared_mutex mu;
    std::unordered_map<std::string, ThinElement> map;
};

ThickCache& thickCache() {
    static ThickCache c;
    return c;
}

ThinElement cachedLeaf(ThickDiagram::Kind kind, Color c1, Color c2, int a, int b,
                       const Partition& alpha, const ThickObject& dom) {
    std::string key = leafKey(kind, c1, c2, a, b, alpha);
    {
        std::shared_lock lk(thickCache().mu);
        auto it = thickCache().map.find(key);
        if (it != thickCache().map.end()) return it->second;
    }
    Lowered low = lowerLeaf(kind, c1, c2, a, b, alpha, dom);
    ThinElement el = reduceDiagram(low.diagram) * low.coef;
    {
        std::unique_lock lk(thickCache().mu);
        thickCache().map.emplace(key, el);
    }
    return el;
}

}  // namespace

ColorSeq thinSeq(const ThickObject& obj) {
    ColorSeq s;
    for (auto& st : obj)
        for (int r = 0; r < st.thickness; ++r) s.push_back(st.color);
    return s;
}

int objectShift(const ThickObject& obj) {
    int s = 0;
    for (auto& st : obj) s -= st.thickness * (st.thickness - 1) / 2;
    return s;
}

// --- tree builders -----------------------------------------------------------

ThickDiagram ThickDiagram::id(Color i, int a) {
    ThickDiagram d;
    d.kind_ = IdK;
    d.color_ = i;
    d.a_ = a;
    if (a > 0) d.dom_ = d.cod_ = {ThickStrand{i, a}};
    return d;
}

ThickDiagram ThickDiagram::merge(Color i, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative thickness");
    if (a == 0) return id(i, b);
    if (b == 0) return id(i, a);
    ThickDiagram d;
    d.kind_ = MergeK;
    d.color_ = i;
    d.a_ = a;
    d.b_ = b;
    d.dom_ = {ThickStrand{i, a}, ThickStrand{i, b}};
    d.cod_ = {ThickStrand{i, a + b}};
    return d;
}

ThickDiagram ThickDiagram::split(Color i, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative thickness");
    if (a == 0) return id(i, b);
    if (b == 0) return id(i, a);
    ThickDiagram d;
    d.kind_ = SplitK;
    d.color_ = i;
    d.a_ = a;
    d.b_ = b;
    d.dom_ = {ThickStrand{i, a + b}};
    d.cod_ = {ThickStrand{i, a}, ThickStrand{i, b}};
    return d;
}

ThickDiagram ThickDiagram::dot(Color i, int a, Partition alpha) {
    if (a == 0 && !alpha.empty()) return zero({}, {});
    ThickDiagram d;
    d.kind_ = DotK;
    d.color_ = i;
    d.a_ = a;
    d.alpha_ = std::move(alpha);
    if (a > 0) d.dom_ = d.cod_ = {ThickStrand{i, a}};
    return d;
}

ThickDiagram ThickDiagram::cross(Color iL, int a, Color iR, int b) {
    if (a == 0) return id(iR, b);
    if (b == 0) return id(iL, a);
    ThickDiagram d;
    d.kind_ = CrossK;
    d.color_ = iL;
    d.color2_ = iR;
    d.a_ = a;
    d.b_ = b;
    d.dom_ = {ThickStrand{iL, a}, ThickStrand{iR, b}};
    d.cod_ = {ThickStrand{iR, b}, ThickStrand{iL, a}};
    return d;
}

ThickDiagram ThickDiagram::compose(ThickDiagram top, ThickDiagram bottom) {
    if (top.dom() != bottom.cod())
        throw std::invalid_argument("thick compose: thickness/color mismatch");
    ThickDiagram d;
    d.kind_ = ComposeK;
    d.dom_ = bottom.dom();
    d.cod_ = top.cod();
    d.kids_.push_back(std::move(top));
    d.kids_.push_back(std::move(bottom));
    return d;
}

ThickDiagram ThickDiagram::tensor(ThickDiagram left, ThickDiagram right) {
    ThickDiagram d;
    d.kind_ = TensorK;
    d.dom_ = left.dom();
    d.dom_.insert(d.dom_.end(), right.dom().begin(), right.dom().end());
    d.cod_ = left.cod();
    d.cod_.insert(d.cod_.end(), right.cod().begin(), right.cod().end());
    d.kids_.push_back(std::move(left));
    d.kids_.push_back(std::move(right));
    return d;
}

ThickDiagram ThickDiagram::zero(ThickObject dom, ThickObject cod) {
    ThickDiagram d;
    d.kind_ = ZeroK;
    d.dom_ = std::move(dom);
    d.cod_ = std::move(cod);
    return d;
}

ThickDiagram ThickDiagram::thin(Diagram diag) {
    diag.validate();
    ThickDiagram d;
    d.kind_ = ThinK;
    for (Color c : diag.bottom) d.dom_.push_back(ThickStrand{c, 1});
    for (Color c : diag.topSeq()) d.cod_.push_back(ThickStrand{c, 1});
    d.thin_ = std::move(diag);
    return d;
}

int ThickDiagram::degree() const {
    switch (kind_) {
        case IdK:
        case ZeroK:
            return 0;
        case MergeK:
        case SplitK:
            return -a_ * b_;
        case DotK:
            return 2 * alpha_.weight();
        case CrossK:
            return -a_ * b_ * cartanPairing(color_, color2_);
        case ComposeK:
        case TensorK:
            return kids_[0].degree() + kids_[1].degree();
        case ThinK:
            return thin_.degree();  // thickness-one boundary carries no shift
    }
    throw std::logic_error("unreachable");
}

// --- compilation --------------------------------------------------------------

ThinElement ThickDiagram::explode() const {
    switch (kind_) {
        case IdK:
        case MergeK:
        case SplitK:
        case DotK:
        case CrossK:
            return cachedLeaf(kind_, color_, color2_, a_, b_, alpha_, dom_);
        case ComposeK:
            return klr::compose(kids_[0].explode(), kids_[1].explode());
        case TensorK:
            return tensorElems(kids_[0].explode(), kids_[1].explode());
        case ZeroK:
            return ThinElement(thinSeq(dom_), thinSeq(cod_));
        case ThinK:
            return reduceDiagram(thin_);
    }
    throw std::logic_error("unreachable");
}

std::pair<Int, Diagram> ThickDiagram::explodeRaw() const {
    switch (kind_) {
        case IdK:
        case MergeK:
        case SplitK:
        case DotK:
        case CrossK: {
            Lowered low = lowerLeaf(kind_, color_, color2_, a_, b_, alpha_, dom_);
            return {low.coef, std::move(low.diagram)};
        }
        case ComposeK: {
            auto [ct, dt] = kids_[0].explodeRaw();
            auto [cb, db] = kids_[1].explodeRaw();
            if (db.topSeq() != dt.bottom)
                throw std::invalid_argument("thick compose: thin boundary mismatch");
            Diagram d;
            d.bottom = db.bottom;
            d.gens = std::move(db.gens);
            d.gens.insert(d.gens.end(), dt.gens.begin(), dt.gens.end());
            return {ct * cb, std::move(d)};
        }
        case TensorK: {
            auto [cl, dl] = kids_[0].explodeRaw();
            auto [cr, dr] = kids_[1].explodeRaw();
            Diagram d;
            d.bottom = dl.bottom;
            d.bottom.insert(d.bottom.end(), dr.bottom.begin(), dr.bottom.end());
            d.gens = std::move(dl.gens);
            int off = static_cast<int>(dl.bottom.size());
            for (auto g : dr.gens) {
                g.pos += off;
                d.gens.push_back(g);
            }
            return {cl * cr, std::move(d)};
        }
        case ZeroK:
            return {0, Diagram{thinSeq(dom_), {}}};
        case ThinK:
            return {1, thin_};
    }
    throw std::logic_error("unreachable");
}

// --- direct generator elements -------------------------------------------------

ThinElement idempotent(Color i, int a) { return ThickDiagram::id(i, a).explode(); }
ThinElement splitElement(Color i, int a, int b) { return ThickDiagram::split(i, a, b).explode(); }
ThinElement mergeElement(Color i, int a, int b) { return ThickDiagram::merge(i, a, b).explode(); }
ThinElement thickDot(Color i, int a, const Partition& alpha) {
    return ThickDiagram::dot(i, a, alpha).explode();
}
ThinElement thickCross(Color iL, int a, Color iR, int b) {
    return ThickDiagram::cross(iL, a, iR, b).explode();
}

ThinElement schurOnStrand(Color i, int a, const Partition& alpha, const Partition& beta) {
    return compose(thickDot(i, a, alpha), thickDot(i, a, beta));
}

// --- cache persistence ----------------------------------------------------------

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string configLine() {
    const auto& cfg = engineConfig();
    std::ostringstream os;
    os << "config factor_on_ascending=" << cfg.factorOnAscending
       << " merge_sign=" << cfg.mergeSign << " split_sign=" << cfg.splitSign
       << " delta_reversed=" << cfg.deltaReversed;
    return os.str();
}

}  // namespace

void saveThickCache(const std::string& path) {
    std::ostringstream body;
    {
        std::shared_lock lk(thickCache().mu);
        for (auto& [k, el] : thickCache().map) {
            body << "entry " << k << '\t' << printElement(el) << '\t';
            for (size_t i = 0; i < el.bottom().size(); ++i) body << (i ? " " : "") << el.bottom()[i];
            body << '\t';
            for (size_t i = 0; i < el.top().size(); ++i) body << (i ? " " : "") << el.top()[i];
            body << '\n';
        }
    }
    std::string content = "KLRCACHE 1\n" + configLine() + "\n" + body.str();
    std::ofstream f(path, std::ios::trunc);
    f << content << "checksum " << std::hex << fnv1a(content) << "\n";
}

bool loadThickCache(const std::string& path, std::string& warning) {
    std::ifstream f(path);
    if (!f) {
        warning = "cache file not found";
        return false;
    }
    std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    size_t mark = all.rfind("checksum ");
    if (mark == std::string::npos || all.compare(0, 11, "KLRCACHE 1\n") != 0) {
        warning = "cache file corrupt: missing header or checksum";
        return false;
    }
    std::string content = all.substr(0, mark);
    uint64_t want = 0;
    std::string trailer;
    {
        std::istringstream cs(all.substr(mark + 9));
        cs >> std::hex >> want;
        cs >> trailer;  // nothing may follow the checksum line
    }
    if (!trailer.empty() || fnv1a(content) != want) {
        warning = "cache file corrupt: checksum mismatch";
        return false;
    }
    std::istringstream is(content);
    std::string line;
    std::getline(is, line);  // magic
    std::getline(is, line);
    if (line != configLine()) {
        warning = "cache file ignored: engine configuration differs";
        return false;
    }
    size_t loaded = 0;
    while (std::getline(is, line)) {
        if (line.rfind("entry ", 0) != 0) continue;
        size_t t1 = line.find('\t');
        size_t t2 = line.find('\t', t1 + 1);
        size_t t3 = line.find('\t', t2 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos || t3 == std::string::npos) {
            warning = "cache file corrupt: malformed entry";
            return false;
        }
        std::string key = line.substr(6, t1 - 6);
        std::string elem = line.substr(t1 + 1, t2 - t1 - 1);
        auto seqOf = [](const std::string& s) {
            ColorSeq seq;
            std::istringstream ss(s);
            int v;
            while (ss >> v) seq.push_back(v);
            return seq;
        };
        ColorSeq bottom = seqOf(line.substr(t2 + 1, t3 - t2 - 1));
        ColorSeq top = seqOf(line.substr(t3 + 1));
        try {
            ThinElement el(bottom, top);
            if (elem != "0") el += parseElement(elem);
            std::unique_lock lk(thickCache().mu);
            thickCache().map.insert_or_assign(key, std::move(el));
            ++loaded;
        } catch (const std::exception& e) {
            warning = std::string("cache file corrupt: ") + e.what();
            return false;
        }
    }
    (void)loaded;
    return true;
}

void clearThickCache() {
    std::unique_lock lk(thickCache().mu);
    thickCache().map.clear();
}

}  // namespace klr
