// Exact rational planar primitives.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycross {

// GMP rationals are kept canonical (lowest terms, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p" or "p/q" (decimal integers, optional leading minus, q > 0).
Rat parse_rat(std::string_view s);
// Inverse of parse_rat; the denominator is omitted when it equals 1.
std::string format_rat(const Rat& r);
// Parses a terminating decimal such as "-3.25" exactly.
Rat rat_from_decimal(std::string_view s);

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rat& s, const Point& p);
bool lex_less(const Point& a, const Point& b);
Rat cross(const Point& u, const Point& v);
Rat dot(const Point& u, const Point& v);
// Counterclockwise quarter turn.
inline Point rot90(const Point& v) { return {-v.y, v.x}; }
Point midpoint(const Point& a, const Point& b);
double approx_len(const Point& v);

struct Segment {
    Point a, b;
};

int orient(const Point& p, const Point& q, const Point& r);

enum class DegenerateKind { CollinearOverlap, EndpointInInterior, ParallelTouching };
const char* to_string(DegenerateKind k);

struct CrossingResult {
    enum class Kind { Crossing, None, Degenerate };
    Kind kind = Kind::None;
    Point point;                 // set for Crossing
    DegenerateKind degenerate{}; // set for Degenerate

    bool is_crossing() const { return kind == Kind::Crossing; }
};

CrossingResult proper_crossing(const Segment& s1, const Segment& s2);

struct Triple {
    int i, j, k;
};
// First collinear triple in lexicographic index order, if any.
std::optional<Triple> in_general_position(const std::vector<Point>& pts);

}  // namespace polycross
