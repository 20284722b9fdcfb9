// Closed polylines, crossing profiles and type classification.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycross/geometry.hpp"

namespace polycross {

struct Polyline {
    std::vector<Point> v;

    Polyline() = default;
    explicit Polyline(std::vector<Point> pts) : v(std::move(pts)) {}

    int size() const { return static_cast<int>(v.size()); }
    const Point& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    Segment edge(int i) const { return {v[i], v[(i + 1) % v.size()]}; }
    bool operator==(const Polyline& o) const { return v == o.v; }
};

struct TypeNK {
    int n = 0, k = 0;
    bool operator==(const TypeNK& o) const { return n == o.n && k == o.k; }
};

std::string type_string(const TypeNK& t);

struct CrossingRecord {
    int i, j;   // edge indices, i < j
    Point p;
    Rat ti, tj; // edge parameters of p in (0,1)
};

struct DegeneracyReport {
    enum class Kind { CollinearOverlap, EndpointInInterior, ParallelTouching, VertexCoincidence, CoincidentCrossings };
    Kind kind;
    int a = -1, b = -1;  // offending edge pair
    int c = -1, d = -1;  // second pair for coincident crossings
    std::string describe() const;
};

struct IntersectionProfile {
    std::vector<int> per_edge;
    std::vector<CrossingRecord> crossings;
    std::optional<DegeneracyReport> degenerate;
};

// Throws std::invalid_argument on fewer than 3 vertices or repeated consecutive vertices.
IntersectionProfile intersection_profile(const Polyline& L);

// Crossings on one edge as (parameter, other edge), sorted along the edge.
std::vector<std::pair<Rat, int>> crossings_on_edge(const IntersectionProfile& prof, int edge);

struct Classification {
    enum class Kind { Uniform, NonUniform, Degenerate };
    Kind kind = Kind::Degenerate;
    TypeNK type;  // meaningful for Uniform
    IntersectionProfile profile;

    bool is_uniform() const { return kind == Kind::Uniform; }
    bool is(int n, int k) const { return kind == Kind::Uniform && type.n == n && type.k == k; }
    std::string describe() const;
};

Classification classify(const Polyline& L);
Classification classify(const Polyline& L, IntersectionProfile prof);

struct VerifyReport {
    bool pass = false;
    int edge = -1;
    int expected = 0;
    int actual = 0;
    std::string message;
};

VerifyReport verify_type(const Polyline& L, int n, int k);

std::string to_json(const Polyline& L, std::optional<TypeNK> claimed = std::nullopt);
// Throws std::invalid_argument on malformed documents.
Polyline from_json(const std::string& text, std::optional<TypeNK>* claimed = nullptr);

}  // namespace polycross
