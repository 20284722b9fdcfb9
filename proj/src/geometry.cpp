#include "polycross/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace polycross {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Int parse_int(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    if (!all_digits(body)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return Int(std::string(s));
}

}  // namespace

Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(den)) throw std::invalid_argument("malformed denominator in '" + std::string(s) + "'");
    Int d(std::string{den});
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    Rat r(parse_int(num), d);
    r.canonicalize();
    return r;
}

std::string format_rat(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_decimal(std::string_view s) {
    bool neg = !s.empty() && s.front() == '-';
    if (neg) s.remove_prefix(1);
    auto dotpos = s.find('.');
    std::string digits(s.substr(0, dotpos));
    std::string frac = dotpos == std::string_view::npos ? "" : std::string(s.substr(dotpos + 1));
    if (digits.empty()) digits = "0";
    if (!all_digits(digits) || (!frac.empty() && !all_digits(frac)))
        throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rat r(Int(digits + frac), den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }

bool lex_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

double approx_len(const Point& v) { return std::hypot(v.x.get_d(), v.y.get_d()); }

int orient(const Point& p, const Point& q, const Point& r) {
    return sgn(cross(q - p, r - p));
}

const char* to_string(DegenerateKind k) {
    switch (k) {
        case DegenerateKind::CollinearOverlap: return "collinear overlap";
        case DegenerateKind::EndpointInInterior: return "endpoint in interior";
        case DegenerateKind::ParallelTouching: return "parallel touching";
    }
    return "?";
}

namespace {

// Position of p along the line through s, valid when p is collinear with s.
Rat along(const Segment& s, const Point& p) { return dot(p - s.a, s.b - s.a); }

bool strictly_inside(const Segment& s, const Point& p) {
    Rat t = along(s, p);
    return t > 0 && t < dot(s.b - s.a, s.b - s.a);
}

}  // namespace

CrossingResult proper_crossing(const Segment& s1, const Segment& s2) {
    CrossingResult res;
    const Point &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    if (o1 == 0 && o2 == 0) {
        // Collinear: compare the parameter intervals along s1.
        Rat len = dot(b - a, b - a);
        Rat tc = along(s1, c), td = along(s1, d);
        if (tc > td) std::swap(tc, td);
        Rat lo = tc > 0 ? tc : Rat(0);
        Rat hi = td < len ? td : len;
        if (lo < hi) {
            res.kind = CrossingResult::Kind::Degenerate;
            res.degenerate = DegenerateKind::CollinearOverlap;
        } else if (lo == hi) {
            res.kind = CrossingResult::Kind::Degenerate;
            res.degenerate = DegenerateKind::ParallelTouching;
        }
        return res;
    }
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        Rat t = cross(c - a, d - c) / cross(b - a, d - c);
        res.kind = CrossingResult::Kind::Crossing;
        res.point = a + t * (b - a);
        return res;
    }
    if (a == c || a == d || b == c || b == d) return res;  // shared endpoint only
    bool touch = (o1 == 0 && strictly_inside(s1, c)) || (o2 == 0 && strictly_inside(s1, d)) ||
                 (o3 == 0 && strictly_inside(s2, a)) || (o4 == 0 && strictly_inside(s2, b));
    if (touch) {
        res.kind = CrossingResult::Kind::Degenerate;
        res.degenerate = DegenerateKind::EndpointInInterior;
    }
    return res;
}

std::optional<Triple> in_general_position(const std::vector<Point>& pts) {
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0) return Triple{i, j, k};
    return std::nullopt;
}

}  // namespace polycross
