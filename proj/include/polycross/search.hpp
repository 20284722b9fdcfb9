// Brute-force witness search over cyclic vertex orders of point sets.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polycross/polyline.hpp"

namespace polycross {

struct PointSet {
    std::vector<Point> points;
    std::string source;  // "random(seed=S,i=I)", "db(record=R)", "explicit"
};

struct SearchWitness {
    std::size_t set_index = 0;  // position in the scanned stream
    std::vector<int> order;     // starts with 0
    bool coincident = false;    // crossing points coincide; counts still uniform
};

struct SearchReport {
    int n = 0, k = 0;
    std::uint64_t configurations = 0;
    std::uint64_t orders = 0;
    std::uint64_t degenerate_skipped = 0;
    std::uint64_t coincident_flagged = 0;
    std::vector<SearchWitness> witnesses;

    std::string summary() const;
};

// Throws std::invalid_argument when the set has fewer than 3 points or three collinear points.
void require_general_position(const PointSet& ps);

// All cyclic orders (vertex 0 fixed, reversals skipped) whose polyline has every edge crossed exactly k times.
std::vector<SearchWitness> search_pointset(const PointSet& ps, int k, SearchReport* stats = nullptr);

// Deterministic given the sources; jobs > 1 scans sets in parallel and merges in source order.
SearchReport exhaustive_scan(int n, int k, const std::vector<PointSet>& sources, int jobs = 1);

// Integer coordinates uniform in [0, 2^20)^2, rejection-sampled to general position
// (and to convex position when convex is set).
std::vector<PointSet> random_pointsets(int n, int count, std::uint64_t seed, bool convex = false);

bool in_convex_position(const std::vector<Point>& pts);

// Raw records of n points, each coordinate an unsigned little-endian integer of `width` bits (8 or 16).
std::vector<PointSet> load_pointset_db(const std::string& path, int n, int width);

Polyline order_polyline(const PointSet& ps, const std::vector<int>& order);

}  // namespace polycross
