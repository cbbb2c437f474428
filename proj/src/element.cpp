#include "houghton/element.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace houghton {

std::string to_string(const RayPoint& p) {
    std::ostringstream os;
    os << "(" << p.index << "," << p.ray << ")";
    return os.str();
}

namespace {

void check_arity(int arity) {
    if (arity < 2) throw DomainError("invalid_element", "arity must be at least 2");
}

void check_point(int arity, const RayPoint& p, const char* what) {
    if (p.ray < 1 || p.ray > arity || p.index < 0)
        throw DomainError("invalid_point", std::string(what) + " " + to_string(p) +
                                               " outside N x {1.." + std::to_string(arity) + "}");
}

// Strip table entries that agree with the translation rule, making every
// threshold minimal.
void canonicalize(const TranslationVector& m, std::vector<std::vector<RayPoint>>& tables) {
    for (std::size_t x = 0; x < tables.size(); ++x) {
        auto& t = tables[x];
        while (!t.empty()) {
            int i = static_cast<int>(t.size()) - 1;
            RayPoint translated{i + m[x], static_cast<int>(x) + 1};
            if (translated.index < 0 || t.back() != translated) break;
            t.pop_back();
        }
    }
}

// Shared bijectivity/injectivity check.  The image of ray x's tail is the
// set of indices >= z_x + m_x, so every table image must land strictly
// below that line; for group elements the table images must also cover
// the low region exactly.
void validate(int arity, const TranslationVector& m,
              const std::vector<std::vector<RayPoint>>& tables, bool require_surjective) {
    check_arity(arity);
    if (static_cast<int>(m.size()) != arity || static_cast<int>(tables.size()) != arity)
        throw DomainError("invalid_element", "translation/table shape does not match arity");

    long long total = std::accumulate(m.begin(), m.end(), 0LL);
    if (require_surjective && total != 0)
        throw DomainError("invalid_element", "translation amounts must sum to zero");
    if (!require_surjective && total < 0)
        throw DomainError("invalid_element", "translation amounts must sum to >= 0");

    std::vector<int> low(arity); // low region height per ray: z_x + m_x
    for (int x = 0; x < arity; ++x) {
        int z = static_cast<int>(tables[x].size());
        low[x] = z + m[x];
        if (low[x] < 0)
            throw DomainError("invalid_element",
                              "ray " + std::to_string(x + 1) +
                                  " translates below index 0 (threshold " + std::to_string(z) +
                                  ", translation " + std::to_string(m[x]) + ")");
    }

    std::vector<std::vector<int>> cover(arity);
    for (int x = 0; x < arity; ++x) cover[x].assign(low[x], 0);

    std::string doubly;
    for (int x = 0; x < arity; ++x) {
        for (std::size_t i = 0; i < tables[x].size(); ++i) {
            const RayPoint& q = tables[x][i];
            check_point(arity, q, "image");
            if (q.index >= low[q.ray - 1]) {
                throw DomainError("invalid_element",
                                  "image " + to_string(q) + " of " +
                                      to_string({static_cast<int>(i), x + 1}) +
                                      " collides with the translated tail of ray " +
                                      std::to_string(q.ray));
            }
            if (++cover[q.ray - 1][q.index] > 1) doubly += " " + to_string(q);
        }
    }
    if (!doubly.empty())
        throw DomainError("invalid_element", "doubly-covered points:" + doubly);

    if (require_surjective) {
        std::string uncovered;
        for (int x = 0; x < arity; ++x)
            for (int i = 0; i < low[x]; ++i)
                if (cover[x][i] == 0) uncovered += " " + to_string({i, x + 1});
        if (!uncovered.empty())
            throw DomainError("invalid_element", "uncovered points:" + uncovered);
    }
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { a %= b; std::swap(a, b); }
    return a;
}

} // namespace

Element Element::identity(int arity) {
    check_arity(arity);
    Element e;
    e.arity_ = arity;
    e.m_.assign(arity, 0);
    e.tables_.assign(arity, {});
    return e;
}

Element Element::from_parts(int arity, TranslationVector m,
                            std::vector<std::vector<RayPoint>> tables) {
    validate(arity, m, tables, /*require_surjective=*/true);
    canonicalize(m, tables);
    Element e;
    e.arity_ = arity;
    e.m_ = std::move(m);
    e.tables_ = std::move(tables);
    return e;
}

Element Element::from_cycles(int arity, const std::vector<std::vector<RayPoint>>& cycs) {
    check_arity(arity);
    std::map<RayPoint, RayPoint> images;
    for (const auto& c : cycs) {
        if (c.size() < 2) throw DomainError("invalid_element", "cycle of length < 2");
        for (std::size_t i = 0; i < c.size(); ++i) {
            check_point(arity, c[i], "cycle entry");
            if (!images.emplace(c[i], c[(i + 1) % c.size()]).second)
                throw DomainError("invalid_element", "cycles are not disjoint at " + to_string(c[i]));
        }
    }
    std::vector<std::vector<RayPoint>> tables(arity);
    for (const auto& [p, q] : images) {
        auto& t = tables[p.ray - 1];
        if (static_cast<int>(t.size()) <= p.index) {
            int old = static_cast<int>(t.size());
            t.resize(p.index + 1);
            for (int i = old; i <= p.index; ++i) t[i] = RayPoint{i, p.ray};
        }
        t[p.index] = q;
    }
    return from_parts(arity, TranslationVector(arity, 0), std::move(tables));
}

Element Element::transposition(int arity, const RayPoint& a, const RayPoint& b) {
    return from_cycles(arity, {{a, b}});
}

Element Element::ray_shift(int arity, int src, int dst) {
    check_arity(arity);
    if (src == dst || src < 1 || dst < 1 || src > arity || dst > arity)
        throw DomainError("invalid_element", "ray_shift needs two distinct rays in range");
    TranslationVector m(arity, 0);
    m[src - 1] = -1;
    m[dst - 1] = 1;
    std::vector<std::vector<RayPoint>> tables(arity);
    tables[src - 1] = {RayPoint{0, dst}};
    return from_parts(arity, std::move(m), std::move(tables));
}

bool Element::is_identity() const noexcept {
    for (int v : m_)
        if (v != 0) return false;
    for (const auto& t : tables_)
        if (!t.empty()) return false;
    return true;
}

RayPoint Element::apply(const RayPoint& p) const {
    check_point(arity_, p, "point");
    const auto& t = tables_[p.ray - 1];
    if (p.index < static_cast<int>(t.size())) return t[p.index];
    return RayPoint{p.index + m_[p.ray - 1], p.ray};
}

std::vector<RayPoint> Element::support() const {
    std::vector<RayPoint> out;
    for (int x = 1; x <= arity_; ++x) {
        if (m_[x - 1] != 0)
            throw DomainError("infinite_order", "support of a translating element is infinite");
        const auto& t = tables_[x - 1];
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] != RayPoint{static_cast<int>(i), x}) out.push_back({static_cast<int>(i), x});
    }
    return out;
}

std::vector<RayPoint> Element::fixed_low_points() const {
    std::vector<RayPoint> out;
    for (int x = 1; x <= arity_; ++x) {
        const auto& t = tables_[x - 1];
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] == RayPoint{static_cast<int>(i), x}) out.push_back({static_cast<int>(i), x});
    }
    return out;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    for (int x = 0; x < a.arity_; ++x) {
        if (auto c = a.tables_[x].size() <=> b.tables_[x].size(); c != 0) return c;
        for (std::size_t i = 0; i < a.tables_[x].size(); ++i)
            if (auto c = a.tables_[x][i] <=> b.tables_[x][i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::size_t Element::hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ULL;
    };
    mix(static_cast<std::uint64_t>(arity_));
    for (int v : m_) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(v)));
    for (const auto& t : tables_) {
        mix(t.size());
        for (const auto& p : t) mix((static_cast<std::uint64_t>(p.ray) << 32) ^ static_cast<std::uint32_t>(p.index));
    }
    return static_cast<std::size_t>(h);
}

RayPoint apply(const Element& e, const RayPoint& p) { return e.apply(p); }

Element compose(const Element& a, const Element& b) {
    if (a.arity() != b.arity())
        throw DomainError("arity_mismatch", "compose of arity " + std::to_string(a.arity()) +
                                                " with arity " + std::to_string(b.arity()));
    int n = a.arity();
    TranslationVector m(n);
    std::vector<std::vector<RayPoint>> tables(n);
    for (int x = 0; x < n; ++x) {
        m[x] = a.translations()[x] + b.translations()[x];
        int z = std::max({a.threshold(x + 1), b.threshold(x + 1) - a.translations()[x], -m[x], 0});
        tables[x].resize(z);
        for (int i = 0; i < z; ++i) tables[x][i] = b.apply(a.apply({i, x + 1}));
    }
    return Element::from_parts(n, std::move(m), std::move(tables));
}

Element invert(const Element& e) {
    int n = e.arity();
    TranslationVector m(n);
    std::vector<std::vector<RayPoint>> tables(n);
    for (int x = 0; x < n; ++x) {
        m[x] = -e.translations()[x];
        tables[x].resize(e.threshold(x + 1) + e.translations()[x]);
    }
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < e.threshold(x + 1); ++i) {
            RayPoint q = e.tables()[x][i];
            tables[q.ray - 1][q.index] = RayPoint{i, x + 1};
        }
    return Element::from_parts(n, std::move(m), std::move(tables));
}

Element pow(const Element& e, long long k) {
    if (k < 0) return pow(invert(e), -k);
    Element acc = Element::identity(e.arity());
    Element base = e;
    while (k > 0) {
        if (k & 1) acc = compose(acc, base);
        k >>= 1;
        if (k) base = compose(base, base);
    }
    return acc;
}

const TranslationVector& phi(const Element& e) { return e.translations(); }

std::vector<std::vector<RayPoint>> cycles(const Element& e) {
    std::vector<RayPoint> moved = e.support();
    std::unordered_set<RayPoint, RayPointHash> seen;
    std::vector<std::vector<RayPoint>> out;
    for (const RayPoint& start : moved) { // already sorted (ray, index)
        if (seen.count(start)) continue;
        std::vector<RayPoint> cyc{start};
        seen.insert(start);
        for (RayPoint p = e.apply(start); p != start; p = e.apply(p)) {
            cyc.push_back(p);
            seen.insert(p);
        }
        out.push_back(std::move(cyc)); // starts at its least point: moved is scanned in order
    }
    return out;
}

std::optional<std::uint64_t> order(const Element& e) {
    for (int v : phi(e))
        if (v != 0) return std::nullopt;
    std::uint64_t ord = 1;
    for (const auto& c : cycles(e)) {
        std::uint64_t len = c.size();
        ord = ord / gcd_u64(ord, len) * len;
    }
    return ord;
}

Element conjugate(const Element& q, const Element& h) {
    return compose(compose(invert(h), q), h);
}

CycleType cycle_type(const Element& e) {
    if (!order(e)) throw DomainError("infinite_order", "cycle type needs a finite-order element");
    CycleType t;
    for (const auto& c : cycles(e)) t.push_back(c.size());
    std::sort(t.begin(), t.end());
    return t;
}

std::optional<Element> conjugator(const Element& q1, const Element& q2) {
    if (q1.arity() != q2.arity())
        throw DomainError("arity_mismatch", "conjugator arguments of different arity");
    if (!order(q1) || !order(q2))
        throw DomainError("infinite_order", "conjugator needs finite-order elements");

    auto c1 = cycles(q1);
    auto c2 = cycles(q2);
    if (c1.size() != c2.size()) return std::nullopt;
    auto by_len = [](const std::vector<RayPoint>& a, const std::vector<RayPoint>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    };
    std::sort(c1.begin(), c1.end(), by_len);
    std::sort(c2.begin(), c2.end(), by_len);
    for (std::size_t i = 0; i < c1.size(); ++i)
        if (c1[i].size() != c2[i].size()) return std::nullopt;

    // Map cycle entries across, then match the leftover points of the
    // combined support in sorted order so h is a bijection.
    std::map<RayPoint, RayPoint> img;
    std::unordered_set<RayPoint, RayPointHash> used;
    for (std::size_t i = 0; i < c1.size(); ++i)
        for (std::size_t j = 0; j < c1[i].size(); ++j) {
            img[c1[i][j]] = c2[i][j];
            used.insert(c2[i][j]);
        }
    std::vector<RayPoint> rest_dom, rest_img;
    auto s1 = q1.support();
    auto s2 = q2.support();
    std::vector<RayPoint> all(s1);
    all.insert(all.end(), s2.begin(), s2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const RayPoint& p : all) {
        if (!img.count(p)) rest_dom.push_back(p);
        if (!used.count(p)) rest_img.push_back(p);
    }
    for (std::size_t i = 0; i < rest_dom.size(); ++i) img[rest_dom[i]] = rest_img[i];

    int n = q1.arity();
    std::vector<std::vector<RayPoint>> tables(n);
    for (const auto& [p, q] : img) {
        auto& t = tables[p.ray - 1];
        if (static_cast<int>(t.size()) <= p.index) {
            int old = static_cast<int>(t.size());
            t.resize(p.index + 1);
            for (int i = old; i <= p.index; ++i) t[i] = RayPoint{i, p.ray};
        }
        t[p.index] = q;
    }
    return Element::from_parts(n, TranslationVector(n, 0), std::move(tables));
}

} // namespace houghton
