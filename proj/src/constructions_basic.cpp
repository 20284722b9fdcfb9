#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <numeric>

#include "construct_util.hpp"
#include "polycross/constructions.hpp"

namespace polycross {

namespace bmp = boost::multiprecision;
using Big = bmp::number<bmp::cpp_bin_float<240>>;

namespace {

Rat round_to_digits(const Big& v, int digits) {
    Big r = bmp::round(v * bmp::pow(Big(10), digits));
    Int num(static_cast<bmp::cpp_int>(r).str());
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

std::vector<Point> regular_polygon(int n, int level) {
    if (n < 3) throw ConstructionError("regular polygon needs n >= 3");
    if (level < 0 || level > kMaxPolygonLevel) throw ConstructionError("polygon precision level out of range");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Point>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, level});
        if (it != cache.end()) return it->second;
    }
    const int digits = 12 << level;
    const Big two_pi = 2 * boost::math::constants::pi<Big>();
    const Big phase = Big(level) / 13;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Big a = two_pi * i / n + phase;
        pts.push_back({round_to_digits(bmp::cos(a), digits), round_to_digits(bmp::sin(a), digits)});
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(n, level), pts);
    return pts;
}

namespace {

template <class Build>
Polyline over_levels(const std::string& what, int n, int k, Build build) {
    std::string last;
    for (int level = 0; level <= kMaxPolygonLevel; ++level) {
        Polyline L = build(level);
        Classification c = classify(L);
        if (c.is(n, k)) return L;
        last = c.describe();
        if (c.kind != Classification::Kind::Degenerate)
            throw ConstructionError(what + ": expected " + type_string({n, k}) + ", got " + last);
    }
    throw ConstructionError(what + ": degenerate at every precision level (" + last + ")");
}

// Retries only on degeneracy; any non-degenerate classification is returned as is.
template <class Build>
Polyline as_is_over_levels(const std::string& what, Build build) {
    std::string last;
    for (int level = 0; level <= kMaxPolygonLevel; ++level) {
        Polyline L = build(level);
        Classification c = classify(L);
        if (c.kind != Classification::Kind::Degenerate) return L;
        last = c.describe();
    }
    throw ConstructionError(what + ": degenerate at every precision level (" + last + ")");
}

std::string args(std::initializer_list<long> xs) {
    std::string s = "(";
    bool first = true;
    for (long x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

Polyline star(int n, int span) {
    const std::string what = "star" + args({n, span});
    if (span < 1) throw ConstructionError(what + ": span must be >= 1");
    if (std::gcd(n, span) != 1) throw ConstructionError(what + ": gcd(n, span) != 1 splits the star into components");
    if (n < 2 * span + 1) throw ConstructionError(what + ": needs n >= 2*span+1");
    return over_levels(what, n, 2 * (span - 1), [&](int level) {
        auto A = regular_polygon(n, level);
        Polyline L;
        for (int i = 0; i < n; ++i) L.v.push_back(A[static_cast<std::size_t>((static_cast<long>(i) * span) % n)]);
        return L;
    });
}

Polyline main_diagonals(int n) {
    if (n < 5 || n % 2 == 0) throw ConstructionError("main_diagonals needs odd n >= 5");
    return star(n, (n - 1) / 2);
}

Polyline lemma4_diagonals(int m) {
    if (m < 2) throw ConstructionError("lemma4_diagonals needs m >= 2");
    return star(4 * m, 2 * m - 1);
}

Polyline comb_construction(int k) {
    if (k < 1) throw ConstructionError("comb construction needs k >= 1");
    auto A = [](int i) { return Point{Rat(-i), Rat(-1)}; };
    auto B = [](int i) { return Point{Rat(i + 1), Rat(-2)}; };
    auto C = [](int i) { return Point{Rat(1), Rat(i)}; };
    Polyline L;
    L.v.push_back({Rat(0), Rat(0)});
    for (int i = 1; i <= k; ++i) {
        L.v.push_back(C(2 * k + 3 - 2 * i));
        L.v.push_back(B(i));
        L.v.push_back(C(2 * k + 2 - 2 * i));
        L.v.push_back(A(i));
    }
    L.v.push_back(C(1));
    L.v.push_back(B(k + 1));
    L.v.push_back(A(k + 1));
    Classification c = classify(L);
    if (c.is(4 * k + 4, 2 * k)) return L;
    std::string last = c.describe();
    if (c.kind != Classification::Kind::Degenerate)
        throw ConstructionError("comb" + args({k}) + ": expected " + type_string({4 * k + 4, 2 * k}) + ", got " + last);
    // The grid coordinates can put crossings or vertices on top of each other; nudge them apart.
    for (int seed = 0; seed < 8; ++seed) {
        for (int e = 6; e <= 20; e += 2) {
            Polyline M = L;
            for (int i = 0; i < M.size(); ++i) {
                long a = ((i + 1) * (37 + 2 * seed)) % 101 - 50, b = ((i + 1) * (53 + 2 * seed)) % 103 - 51;
                Rat scale(Int(1), Int(100) * (Int(1) << e));
                M.v[static_cast<std::size_t>(i)] = M[i] + Point{Rat(a) * scale, Rat(b) * scale};
            }
            Classification cm = classify(M);
            if (cm.is(4 * k + 4, 2 * k)) return M;
            if (cm.kind != Classification::Kind::Degenerate) last = cm.describe();
        }
    }
    throw ConstructionError("comb" + args({k}) + ": expected " + type_string({4 * k + 4, 2 * k}) + ", got " + last);
}

Polyline additive_pattern(int n, const std::vector<int>& pattern) {
    std::string what = "additive_pattern(" + std::to_string(n) + ")";
    if (n < 3 || pattern.empty()) throw ConstructionError(what + ": needs n >= 3 and a nonempty pattern");
    std::vector<int> order;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    long r = 0;
    for (int j = 0; j < n; ++j) {
        if (seen[static_cast<std::size_t>(r)]) throw ConstructionError(what + ": pattern revisits residue " + std::to_string(r));
        seen[static_cast<std::size_t>(r)] = true;
        order.push_back(static_cast<int>(r));
        r = ((r + pattern[static_cast<std::size_t>(j) % pattern.size()]) % n + n) % n;
    }
    if (r != 0) throw ConstructionError(what + ": pattern does not return to 0 after n steps");
    return as_is_over_levels(what, [&](int level) {
        auto A = regular_polygon(n, level);
        Polyline L;
        for (int i : order) L.v.push_back(A[static_cast<std::size_t>(i)]);
        return L;
    });
}

std::vector<std::pair<int, int>> SegmentCollection::segments() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& comp : components)
        for (std::size_t i = 0; i < comp.size(); ++i) out.emplace_back(comp[i], comp[(i + 1) % comp.size()]);
    return out;
}

std::vector<int> collection_profile(const SegmentCollection& C) {
    auto segs = C.segments();
    std::vector<int> counts(segs.size(), 0);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            auto [a, b] = segs[i];
            auto [c, d] = segs[j];
            if (a == c || a == d || b == c || b == d) continue;
            auto r = proper_crossing({C.vertices[a], C.vertices[b]}, {C.vertices[c], C.vertices[d]});
            if (r.kind == CrossingResult::Kind::Degenerate)
                throw ConstructionError("segment collection has a degenerate contact");
            if (r.is_crossing()) {
                ++counts[i];
                ++counts[j];
            }
        }
    }
    return counts;
}

SegmentCollection span_collection(int n, int span) {
    if (span < 1 || span >= n) throw ConstructionError("span_collection needs 1 <= span < n");
    SegmentCollection C;
    C.vertices = regular_polygon(n, 0);
    int g = std::gcd(n, span);
    for (int c = 0; c < g; ++c) {
        std::vector<int> comp;
        for (int t = 0; t < n / g; ++t) comp.push_back(static_cast<int>((c + static_cast<long>(t) * span) % n));
        C.components.push_back(std::move(comp));
    }
    return C;
}

namespace {

void check_double_args(const std::string& what, int n, int p, int q, const Rat& h) {
    if (n < 3 || p < 0 || q < 0) throw ConstructionError(what + ": needs n >= 3 and p, q >= 0");
    if (std::gcd(n, p + q) != 1) throw ConstructionError(what + ": gcd(n, p+q) != 1");
    if (h < 1) throw ConstructionError(what + ": needs h >= 1");
}

}  // namespace

Polyline double_polygon(int n, int p, int q, const Rat& h) {
    std::string what = "double_polygon" + args({n, p, q}) + " h=" + format_rat(h);
    check_double_args(what, n, p, q, h);
    return as_is_over_levels(what, [&](int level) {
        auto A = regular_polygon(n, level);
        Polyline L;
        for (int t = 0; t < n; ++t) {
            long i = (static_cast<long>(t) * (p + q)) % n;
            L.v.push_back((1 / h) * A[static_cast<std::size_t>(i)]);
            L.v.push_back(A[static_cast<std::size_t>((i + p) % n)]);
        }
        return L;
    });
}

Polyline double_polygon(int n, int p, int q) { return double_polygon(n, p, q, Rat(n)); }

Polyline neg_double_polygon(int n, int p, int q, const Rat& h) {
    std::string what = "neg_double_polygon" + args({n, p, q}) + " h=" + format_rat(h);
    check_double_args(what, n, p, q, h);
    return as_is_over_levels(what, [&](int level) {
        auto A = regular_polygon(n, level);
        Polyline L;
        for (int t = 0; t < n; ++t) {
            long i = (static_cast<long>(t) * (p + q)) % n;
            L.v.push_back(A[static_cast<std::size_t>(i)]);
            L.v.push_back((-1 / h) * A[static_cast<std::size_t>((i + p) % n)]);
        }
        return L;
    });
}

// ---------------------------------------------------------------------------
// Fixture catalogue

namespace {

struct RawFixture {
    FixtureInfo info;
    std::vector<std::pair<const char*, const char*>> coords;
};

const std::vector<RawFixture>& raw_fixtures() {
    static const std::vector<RawFixture> table = {
        {{"Z10_3", {10, 3}, "ABCDEFGHIJ", "specimen"},
         {{"0", "7"}, {"7", "4.3"}, {"4", "1"}, {"5", "4.7"}, {"6", "1"}, {"2", "6"}, {"9", "4"}, {"4.3", "3.8"}, {"6", "7"}, {"5", "4"}}},
        {{"Z12_3", {12, 3}, "ABCDEFGHIJKL", "specimen"},
         {{"2", "0"}, {"6", "3.25"}, {"5", "7"}, {"4", "3"}, {"0", "5"}, {"4", "2"}, {"6", "7"}, {"2", "3.75"}, {"3", "0"}, {"4", "4"}, {"8", "2"}, {"4", "5"}}},
        {{"Z14_3", {14, 3}, "ABCDEFGHIJKLMN", "specimen"},
         {{"0", "2"}, {"7.3", "1.7"}, {"8.5", "6.7"}, {"4.5", "2.6"}, {"1.3", "0"}, {"8", "1.7"}, {"1.1", "7"}, {"4.5", "2.3"}, {"9", "0"}, {"7.2", "2.1"}, {"1.9", "2.1"}, {"7.6", "6.7"}, {"8.5", "0.4"}, {"5.7", "3"}}},
        {{"Z16_3", {16, 3}, "ABCDEFGHIJKLMNPQ", "specimen"},
         {{"1", "0"}, {"3", "10"}, {"13", "4"}, {"6", "0"}, {"8", "5"}, {"0", "3"}, {"5", "6"}, {"8", "12"}, {"9", "5"}, {"8", "0"}, {"4", "5"}, {"1", "15"}, {"12", "5"}, {"6", "4"}, {"15", "3"}, {"2", "13"}}},
        {{"Z14_7", {14, 7}, "", "specimen"},
         {{"10", "6"}, {"1", "1"}, {"5", "8"}, {"9", "1"}, {"0", "6"}, {"7", "3"}, {"2", "6"}, {"8", "5"}, {"0", "0"}, {"5", "7"}, {"10", "0"}, {"2", "5"}, {"8", "6"}, {"3", "3"}}},
        {{"Z16_5", {16, 5}, "", "specimen"},
         {{"0", "1"}, {"4", "4"}, {"5", "0"}, {"5", "5"}, {"4", "0"}, {"7", "5"}, {"2", "7"}, {"4", "1"}, {"8", "6"}, {"4", "3"}, {"3", "7"}, {"3", "2"}, {"4", "7"}, {"1", "2"}, {"6", "0"}, {"4", "6"}}},
        {{"Z42_19", {42, 19}, "", "specimen; raw grid coordinates have coincident crossings, vertices are nudged by a fixed sub-1/1000 offset"},
         {{"14", "12"}, {"7", "18"}, {"2", "7"}, {"7", "17"}, {"14", "4"}, {"11", "17"}, {"1", "16"}, {"10", "3"}, {"2", "15"}, {"12", "6"}, {"3", "14"}, {"8", "5"}, {"15", "11"}, {"2", "5"},
          {"14", "9"}, {"10", "17"}, {"3", "7"}, {"7", "19"}, {"1", "4"}, {"13", "9"}, {"10", "20"}, {"13", "7"}, {"11", "20"}, {"4", "13"}, {"10", "0"}, {"13", "15"}, {"4", "17"}, {"12", "14"},
          {"0", "17"}, {"11", "7"}, {"5", "16"}, {"14", "16"}, {"10", "5"}, {"2", "9"}, {"10", "6"}, {"13", "14"}, {"3", "6"}, {"10", "18"}, {"3", "8"}, {"7", "20"}, {"13", "12"}, {"5", "7"}}},
        {{"title16_5", {16, 5}, "", "title figure, same vertices as Z16_5"},
         {{"0", "1"}, {"4", "4"}, {"5", "0"}, {"5", "5"}, {"4", "0"}, {"7", "5"}, {"2", "7"}, {"4", "1"}, {"8", "6"}, {"4", "3"}, {"3", "7"}, {"3", "2"}, {"4", "7"}, {"1", "2"}, {"6", "0"}, {"4", "6"}}},
        {{"title12_3", {12, 3}, "", "title figure"},
         {{"1.5", "0"}, {"5.5", "3.25"}, {"4.5", "7"}, {"3.5", "3"}, {"0", "4.66"}, {"3.5", "2"}, {"5.5", "7"}, {"1.5", "3.75"}, {"2.5", "0"}, {"3.5", "4"}, {"7", "2.33"}, {"3.5", "5"}}},
        {{"C1_n6", {6, 1}, "", "hexagon of index one"},
         {{"0", "0"}, {"9", "2"}, {"6", "10"}, {"3", "2"}, {"12", "0"}, {"6", "7"}}},
        {{"C1_n8", {8, 1}, "", "octagon of index one"},
         {{"0", "0"}, {"8", "1"}, {"3", "2"}, {"6", "10"}, {"9", "2"}, {"4", "1"}, {"12", "0"}, {"6", "7"}}},
        {{"C1_n10", {10, 1}, "", "decagon of index one"},
         {{"1", "6.5"}, {"4.5", "2.5"}, {"9", "0"}, {"8.5", "5.5"}, {"6", "10"}, {"3.5", "5.5"}, {"3", "0"}, {"7.5", "2.5"}, {"11", "6.5"}, {"6", "8"}}},
        {{"C2_n8", {8, 2}, "", "octagon of index two"},
         {{"1", "5"}, {"9", "10"}, {"6", "3.5"}, {"3", "10"}, {"11", "5"}, {"3", "0"}, {"6", "6.5"}, {"9", "0"}}},
    };
    return table;
}

// Deterministic nudge, far below the unit grid spacing of the raw specimen.
Point nudge(int i) {
    Rat dx(Int(((i * 37) % 101) - 50), Int(100000));
    Rat dy(Int(((i * 53) % 103) - 51), Int(100000));
    dx.canonicalize();
    dy.canonicalize();
    return {dx, dy};
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalogue() {
    static const std::vector<FixtureInfo> cat = [] {
        std::vector<FixtureInfo> out;
        for (const auto& f : raw_fixtures()) out.push_back(f.info);
        out.push_back({"star15_4", {15, 6}, "", "star(15,4), subdivision input"});
        out.push_back({"split30_3", {30, 3}, "", "subdivide(star(15,4), 2)"});
        out.push_back({"dodecagon12_6", {12, 6}, "", "additive pattern (4,4,7) on 12 vertices"});
        out.push_back({"pattern21_12", {21, 12}, "", "additive pattern (7,7,13) on 21 vertices"});
        return out;
    }();
    return cat;
}

Polyline fixture(const std::string& name) {
    for (const auto& f : raw_fixtures()) {
        if (f.info.name != name) continue;
        Polyline L;
        for (const auto& [x, y] : f.coords) L.v.push_back({rat_from_decimal(x), rat_from_decimal(y)});
        if (name == "Z42_19")
            for (int i = 0; i < L.size(); ++i) L.v[i] = L.v[i] + nudge(i);
        return L;
    }
    if (name == "star15_4") return star(15, 4);
    if (name == "split30_3") return subdivide(star(15, 4), 2);
    if (name == "dodecagon12_6") return additive_pattern(12, {4, 4, 7});
    if (name == "pattern21_12") return additive_pattern(21, {7, 7, 13});
    throw ConstructionError("unknown fixture '" + name + "'");
}

int fixture_edge(const std::string& name, char from, char to) {
    for (const auto& f : fixture_catalogue()) {
        if (f.name != name) continue;
        auto a = f.labels.find(from), b = f.labels.find(to);
        if (a == std::string::npos || b == std::string::npos)
            throw ConstructionError("fixture '" + name + "' has no vertex labelled " + std::string{from} + " or " + std::string{to});
        int n = static_cast<int>(f.labels.size());
        int ia = static_cast<int>(a), ib = static_cast<int>(b);
        if ((ia + 1) % n == ib) return ia;
        if ((ib + 1) % n == ia) return ib;
        throw ConstructionError("vertices " + std::string{from} + " and " + std::string{to} + " are not adjacent");
    }
    throw ConstructionError("unknown fixture '" + name + "'");
}

}  // namespace polycross
