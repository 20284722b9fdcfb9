// Internal helpers shared by the construction sources.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "polycross/constructions.hpp"

namespace polycross::detail {

// 2^-e as a rational.
Rat dyadic(int e);

// Simplest dyadic rational in the middle half of (lo, hi).
Rat simple_between(const Rat& lo, const Rat& hi);

// Vertex graph where every live node has at most two neighbours; used to
// rewire polylines during surgeries and read the result back as one cycle.
class CycleGraph {
public:
    CycleGraph() = default;
    explicit CycleGraph(const Polyline& L);

    int add(const Point& p);
    // Appends a polyline as a fresh cycle; returns the id of its first vertex.
    int add_cycle(const std::vector<Point>& pts);
    void link(int a, int b);
    void unlink(int a, int b);
    void kill(int a);
    const Point& point(int a) const { return pts_[static_cast<std::size_t>(a)]; }
    const std::array<int, 2>& neighbours(int a) const { return nb_[static_cast<std::size_t>(a)]; }
    int size() const { return static_cast<int>(pts_.size()); }

    // Throws ConstructionError unless the live nodes form exactly one cycle.
    Polyline extract() const;

private:
    std::vector<Point> pts_;
    std::vector<std::array<int, 2>> nb_;
    std::vector<bool> alive_;
};

// Splits node pair (up, down), both located at V, into two nodes at V -/+ eta*axis
// so that the edges on the left side of axis (from up) and right side (from down)
// are rewired without creating crossings. Returns the two new node ids.
std::array<int, 2> merge_at_vertex(CycleGraph& G, int up, int down, const Point& axis, const Rat& eta);

// Splits every edge e into pieces[e] sub-edges, each carrying an equal share of
// the edge's crossings. Returns an empty polyline when the counts do not divide
// or no skew in the retry budget keeps the profile valid for `expect`.
Polyline split_edges(const Polyline& L, const IntersectionProfile& prof, const std::vector<int>& pieces, TypeNK expect);

// Indices of pts in counterclockwise hull order; throws unless strictly convex.
std::vector<int> convex_order(const std::vector<Point>& pts);

Rat min_edge_inf_norm(const Polyline& L);
Rat inf_norm(const Point& v);

}  // namespace polycross::detail
