// Slow reference implementations used as test oracles.
#pragma once

#include <algorithm>
#include <vector>

#include "polycross/polyline.hpp"

namespace oracle {

using polycross::Point;
using polycross::Polyline;
using polycross::Rat;

// Solves a + t(b-a) = c + u(d-c) by Cramer's rule; true iff 0 < t, u < 1 and the segments are not parallel.
inline bool crosses(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rat ex = b.x - a.x, ey = b.y - a.y, fx = d.x - c.x, fy = d.y - c.y;
    Rat det = ex * (-fy) - (-fx) * ey;
    if (det == 0) return false;
    Rat rx = c.x - a.x, ry = c.y - a.y;
    Rat t = (rx * (-fy) - (-fx) * ry) / det;
    Rat u = (ex * ry - ey * rx) / det;
    return t > 0 && t < 1 && u > 0 && u < 1;
}

inline std::vector<int> per_edge(const Polyline& L) {
    const int n = L.size();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (crosses(L[i], L[(i + 1) % n], L[j], L[(j + 1) % n])) ++c[i], ++c[j];
        }
    return c;
}

inline bool collinear(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

// Smallest rotation of the order or of its reversal, as a vertex list.
inline std::vector<int> canonical_cycle(std::vector<int> o) {
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < o.size(); ++r) {
            std::vector<int> c(o.begin() + static_cast<long>(r), o.end());
            c.insert(c.end(), o.begin(), o.begin() + static_cast<long>(r));
            if (best.empty() || c < best) best = c;
        }
        std::reverse(o.begin(), o.end());
    }
    return best;
}

}  // namespace oracle
