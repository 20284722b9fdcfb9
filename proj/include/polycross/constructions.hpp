// Polyline constructions and surgeries. Every returned polyline has been
// classified exactly; operations with a type contract verify it.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polycross/polyline.hpp"

namespace polycross {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed chains over a shared vertex array; each component is a cyclic list of vertex indices.
struct SegmentCollection {
    std::vector<Point> vertices;
    std::vector<std::vector<int>> components;

    std::vector<std::pair<int, int>> segments() const;
};

// Crossings per segment (in segments() order). Throws ConstructionError on degenerate contact.
std::vector<int> collection_profile(const SegmentCollection& C);

// Regular n-gon approximated at 12 * 2^level decimal digits; levels above 0 are also rotated.
std::vector<Point> regular_polygon(int n, int level = 0);
inline constexpr int kMaxPolygonLevel = 4;

Polyline star(int n, int span);
Polyline main_diagonals(int n);
Polyline lemma4_diagonals(int m);
Polyline comb_construction(int k);
Polyline additive_pattern(int n, const std::vector<int>& pattern);
SegmentCollection span_collection(int n, int span);

// P-type polylines (inner polygon scaled by 1/h) and M-type (scaled by -1/h).
Polyline double_polygon(int n, int p, int q, const Rat& h);
Polyline double_polygon(int n, int p, int q);
Polyline neg_double_polygon(int n, int p, int q, const Rat& h);

Polyline subdivide(const Polyline& L, int p);
Polyline glue(const Polyline& L1, const Polyline& L2);
Polyline parallel_merge(const Polyline& L, int p);
Polyline lightning_replace(const Polyline& L, int edge, int folds);
Polyline crossing_surgery(const Polyline& L, int i, int j);
Polyline cross_double(const Polyline& L);
Polyline theorem2_merge(const Polyline& L1, const SegmentCollection& C2, int s);
// Convenience: main_diagonals(k+3) merged with span_collection(k+d, k/2+1).
Polyline theorem2_merge(int k, int d);

// Empty string when the ordered edge pair (i, j) satisfies both surgery
// conditions, otherwise the name of the first failed condition ("K9/1", "K9/2").
std::string surgery_condition(const Polyline& L, const IntersectionProfile& prof, int i, int j);
std::vector<std::pair<int, int>> surgery_candidates(const Polyline& L);

struct FixtureInfo {
    std::string name;
    TypeNK type;
    std::string labels;  // vertex labels in traversal order, empty when unlabeled
    std::string note;
};

const std::vector<FixtureInfo>& fixture_catalogue();
Polyline fixture(const std::string& name);
// Index of the edge joining the vertices with the given labels.
int fixture_edge(const std::string& name, char from, char to);

}  // namespace polycross
