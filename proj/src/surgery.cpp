#include <algorithm>
#include <cmath>
#include <numeric>

#include "construct_util.hpp"
#include "polycross/constructions.hpp"

namespace polycross {

using detail::CycleGraph;
using detail::dyadic;

namespace {

Classification require_uniform(const Polyline& L, const std::string& what) {
    Classification c = classify(L);
    if (!c.is_uniform()) throw ConstructionError(what + ": input is not uniform (" + c.describe() + ")");
    return c;
}

// Exponent e with 2^-e <= x.
int dyadic_floor_exp(const Rat& x) {
    int e = 0;
    while (dyadic(e) > x) ++e;
    while (e > -64 && dyadic(e - 1) <= x) --e;
    return e;
}

}  // namespace

Polyline subdivide(const Polyline& L, int p) {
    if (p < 2) throw ConstructionError("subdivide needs p >= 2");
    Classification c = require_uniform(L, "subdivide");
    if (c.type.k % p != 0)
        throw ConstructionError("subdivide: crossing count " + std::to_string(c.type.k) + " is not divisible by " + std::to_string(p));
    std::vector<int> pieces(static_cast<std::size_t>(L.size()), p);
    Polyline out = detail::split_edges(L, c.profile, pieces, {p * L.size(), c.type.k / p});
    if (out.size() == 0) throw ConstructionError("subdivide: no valid skew found within the retry budget");
    return out;
}

Polyline lightning_replace(const Polyline& L, int edge, int folds) {
    if (folds < 3 || folds % 2 == 0) throw ConstructionError("lightning needs an odd fold count >= 3");
    const int n = L.size();
    if (edge < 0 || edge >= n) throw ConstructionError("lightning: edge index out of range");
    Classification c = require_uniform(L, "lightning");
    const int k = c.type.k;
    int grown = k - 1 + folds;
    int pieces = 1;
    if (k > 0) {
        if (grown % k != 0)
            throw ConstructionError("lightning: " + std::to_string(grown) + " crossings on re-crossed edges cannot be rebalanced into groups of " +
                                    std::to_string(k));
        pieces = grown / k;
    }
    std::vector<bool> crossing_edge(static_cast<std::size_t>(n), false);
    for (const auto& [t, other] : crossings_on_edge(c.profile, edge)) crossing_edge[static_cast<std::size_t>(other)] = true;
    const TypeNK expect{n + (folds - 1) + k * (pieces - 1), k};

    const Point P = L[edge], Q = L[(edge + 1) % n];
    const Point t = Q - P, nrm = rot90(t);
    const int h = (folds - 1) / 2;
    int shift = 6;
    while ((1 << (shift - 6)) < folds) ++shift;
    for (int sigma : {1, -1}) {
        for (const Rat& beta : {Rat(1, 4), Rat(1, 16)}) {
            const Point w = t + Rat(sigma) * beta * nrm;
            for (int attempt = 0; attempt < 16; ++attempt) {
                Rat delta = dyadic(shift + attempt);
                std::vector<Point> Z(static_cast<std::size_t>(folds + 1));
                for (int m = 0; m <= h; ++m) {
                    Z[static_cast<std::size_t>(2 * m)] = P + Rat(m) * delta * w;
                    Z[static_cast<std::size_t>(2 * m + 1)] = Q - Rat(h - m) * delta * w;
                }
                Polyline Z1;
                std::vector<int> piece_of, want;
                for (int i = 0; i < n; ++i) {
                    bool hit = crossing_edge[static_cast<std::size_t>(i)];
                    Z1.v.push_back(L[i]);
                    piece_of.push_back(hit ? pieces : 1);
                    want.push_back(hit ? grown : k);
                    if (i == edge) {
                        for (int m = 1; m < folds; ++m) {
                            Z1.v.push_back(Z[static_cast<std::size_t>(m)]);
                            piece_of.push_back(1);
                            want.push_back(k);
                        }
                    }
                }
                IntersectionProfile prof = intersection_profile(Z1);
                if (prof.degenerate) continue;
                bool ok = prof.per_edge == want;
                if (!ok) continue;
                Polyline out = pieces > 1 ? detail::split_edges(Z1, prof, piece_of, expect) : Z1;
                if (out.size() > 0 && classify(out).is(expect.n, expect.k)) return out;
            }
        }
    }
    throw ConstructionError("lightning: rebalancing failed within the retry budget");
}

namespace {

struct SurgeryPlan {
    std::string fail;  // empty when both conditions hold
    int A = -1, B = -1, N = -1;
    std::vector<int> cyc;  // traversal from A through B
    int r = -1;            // position of N in cyc
    Point X;
};

SurgeryPlan plan_surgery(const Polyline& L, const IntersectionProfile& prof, int i, int j) {
    const int n = L.size();
    if (i < 0 || j < 0 || i >= n || j >= n) throw ConstructionError("surgery: edge index out of range");
    const CrossingRecord* rec = nullptr;
    for (const auto& c : prof.crossings)
        if ((c.i == i && c.j == j) || (c.i == j && c.j == i)) rec = &c;
    if (!rec) throw ConstructionError("surgery: edges " + std::to_string(i) + " and " + std::to_string(j) + " do not cross");
    SurgeryPlan plan;
    plan.X = rec->p;
    // Endpoint of `e` next to the crossing with `other`, or -1 if the crossing is not marginal.
    auto marginal_end = [&](int e, int other) {
        auto on = crossings_on_edge(prof, e);
        if (on.front().second == other) return e;
        if (on.back().second == other) return (e + 1) % n;
        return -1;
    };
    int bi = marginal_end(i, j), ni = marginal_end(j, i);
    if (bi < 0 || ni < 0) {
        plan.fail = "K9/1";
        return plan;
    }
    plan.B = bi;
    plan.A = bi == i ? (i + 1) % n : i;
    int dir = plan.B == (plan.A + 1) % n ? 1 : -1;
    for (int t = 0; t < n; ++t) plan.cyc.push_back(((plan.A + dir * t) % n + n) % n);
    int e0 = j, e1 = (j + 1) % n;
    auto pos = [&](int v) { return static_cast<int>(std::find(plan.cyc.begin(), plan.cyc.end(), v) - plan.cyc.begin()); };
    int first = pos(e0) < pos(e1) ? e0 : e1;
    if (first != ni) {
        plan.fail = "K9/2";
        return plan;
    }
    plan.N = ni;
    plan.r = pos(ni);
    return plan;
}

}  // namespace

std::string surgery_condition(const Polyline& L, const IntersectionProfile& prof, int i, int j) {
    return plan_surgery(L, prof, i, j).fail;
}

std::vector<std::pair<int, int>> surgery_candidates(const Polyline& L) {
    IntersectionProfile prof = intersection_profile(L);
    std::vector<std::pair<int, int>> out;
    if (prof.degenerate) return out;
    for (const auto& c : prof.crossings) {
        if (plan_surgery(L, prof, c.i, c.j).fail.empty()) out.emplace_back(c.i, c.j);
        if (plan_surgery(L, prof, c.j, c.i).fail.empty()) out.emplace_back(c.j, c.i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polyline crossing_surgery(const Polyline& L, int i, int j) {
    Classification c = require_uniform(L, "surgery");
    const int n = L.size(), k = c.type.k;
    if (k < 3 || k % 2 == 0) throw ConstructionError("surgery needs an odd crossing count k > 1");
    SurgeryPlan plan = plan_surgery(L, c.profile, i, j);
    if (!plan.fail.empty()) throw ConstructionError("surgery: condition " + plan.fail + " fails for edges " + std::to_string(i) + ", " + std::to_string(j));
    const auto& cyc = plan.cyc;
    const int r = plan.r;
    const Point X = plan.X, B = L[plan.B], N = L[plan.N];
    const Point bx = B - X, nx = N - X;
    const int h = (k - 1) / 2;
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rat eta = dyadic(3 + attempt);
        Rat delta = eta / (2 * k);
        Point b1 = X + eta * bx, n1 = X + eta * nx;
        Polyline out;
        out.v.push_back(L[cyc[0]]);
        for (int m = 0; m <= h; ++m) {
            out.v.push_back(b1 + Rat(m) * delta * bx);
            if (m < h) out.v.push_back(N - Rat(h - m) * delta * nx);
        }
        out.v.push_back(N);
        for (int q = r - 1; q >= 2; --q) out.v.push_back(L[cyc[static_cast<std::size_t>(q)]]);
        for (int m = 0; m <= h; ++m) {
            out.v.push_back(B - Rat(m) * delta * bx);
            out.v.push_back(n1 + Rat(h - m) * delta * nx);
        }
        for (int q = r + 1; q < n; ++q) out.v.push_back(L[cyc[static_cast<std::size_t>(q)]]);
        if (classify(out).is(n + 2 * k, k)) return out;
    }
    throw ConstructionError("surgery: no valid lightning placement within the retry budget");
}

Polyline cross_double(const Polyline& L) {
    const int n = L.size();
    if (n % 2 == 0) throw ConstructionError("cross_double needs an odd number of edges");
    Classification c = require_uniform(L, "cross_double");
    std::vector<Point> off(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point u = L[i] - L[(i + n - 1) % n], w = L[(i + 1) % n] - L[i];
        Point o = (1 / detail::inf_norm(w)) * w - (1 / detail::inf_norm(u)) * u;
        if (cross(u, w) < 0) o = Rat(-1) * o;
        if (cross(u, w) == 0) o = rot90(w);
        off[static_cast<std::size_t>(i)] = o;
    }
    int e0 = dyadic_floor_exp(detail::min_edge_inf_norm(L)) + 8;
    for (int attempt = 0; attempt < 24; ++attempt) {
        Rat eps = dyadic(e0 + attempt);
        Polyline out;
        for (int t = 0; t < 2 * n; ++t) {
            int i = t % n;
            Rat sgn = t % 2 == 0 ? eps : Rat(-eps);
            out.v.push_back(L[i] + sgn * off[static_cast<std::size_t>(i)]);
        }
        if (classify(out).is(2 * n, 2 * c.type.k + 1)) return out;
    }
    throw ConstructionError("cross_double: no valid offset within the retry budget");
}

namespace {

std::vector<Point> glue_directions() {
    std::vector<Point> dirs;
    const double two_pi = 2 * std::acos(-1.0);
    for (int j = 0; j < 64; ++j) {
        double a = two_pi * j / 64 + 0.05;
        dirs.push_back({Rat(static_cast<long>(std::lround(4096 * std::cos(a)))), Rat(static_cast<long>(std::lround(4096 * std::sin(a))))});
    }
    return dirs;
}

// Index of the unique extreme vertex of L along dir (min when sign < 0), or -1 on ties.
int unique_extreme(const Polyline& L, const Point& dir, int sign) {
    int best = 0;
    bool tie = false;
    Rat bv = dot(dir, L[0]);
    for (int i = 1; i < L.size(); ++i) {
        Rat v = dot(dir, L[i]);
        int cmp = sign > 0 ? (v > bv) - (v < bv) : (v < bv) - (v > bv);
        if (cmp > 0) {
            best = i;
            bv = v;
            tie = false;
        } else if (cmp == 0) {
            tie = true;
        }
    }
    return tie ? -1 : best;
}

Rat bbox_size(const std::vector<Point>& pts) {
    Rat x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
    for (const auto& p : pts) {
        if (p.x < x0) x0 = p.x;
        if (p.x > x1) x1 = p.x;
        if (p.y < y0) y0 = p.y;
        if (p.y > y1) y1 = p.y;
    }
    Rat w = x1 - x0, hgt = y1 - y0;
    return w > hgt ? w : hgt;
}

Rat min_incident(const Polyline& L, int v) {
    int n = L.size();
    Rat a = detail::inf_norm(L[v] - L[(v + n - 1) % n]), b = detail::inf_norm(L[(v + 1) % n] - L[v]);
    return a < b ? a : b;
}

}  // namespace

Polyline glue(const Polyline& L1, const Polyline& L2) {
    Classification c1 = require_uniform(L1, "glue"), c2 = require_uniform(L2, "glue");
    if (c1.type.k != c2.type.k)
        throw ConstructionError("glue: crossing counts differ (" + std::to_string(c1.type.k) + " vs " + std::to_string(c2.type.k) + ")");
    const int m = L1.size(), n = L2.size(), k = c1.type.k;
    double ratio = bbox_size(L1.v).get_d() / bbox_size(L2.v).get_d();
    Rat scale = dyadic(-static_cast<int>(std::lround(std::log2(ratio))));
    for (const Point& dir : glue_directions()) {
        int vi = unique_extreme(L1, dir, -1), wi = unique_extreme(L2, dir, +1);
        if (vi < 0 || wi < 0) continue;
        const Point V = L1[vi], W = L2[wi];
        std::vector<Point> moved;
        for (const auto& p : L2.v) moved.push_back(V + scale * (p - W));
        Polyline L2m(moved);
        Point axis{dir.y, -dir.x};
        axis = (1 / detail::inf_norm(axis)) * axis;
        Rat near = min_incident(L1, vi);
        Rat other = min_incident(L2m, wi);
        if (other < near) near = other;
        int e0 = dyadic_floor_exp(near) + 10;
        for (int attempt = 0; attempt < 12; ++attempt) {
            CycleGraph G(L1);
            int first2 = G.add_cycle(L2m.v);
            detail::merge_at_vertex(G, vi, first2 + wi, axis, dyadic(e0 + attempt));
            Polyline out = G.extract();
            if (classify(out).is(m + n, k)) return out;
        }
    }
    throw ConstructionError("glue: placement search exhausted all directions");
}

Polyline parallel_merge(const Polyline& L, int p) {
    if (p < 2) throw ConstructionError("parallel_merge needs p >= 2");
    Classification c = require_uniform(L, "parallel_merge");
    const int n = L.size(), k = c.type.k;
    std::vector<Point> dir(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dir[static_cast<std::size_t>(i)] = L[(i + 1) % n] - L[i];
    for (int i = 0; i < n; ++i)
        if (cross(dir[static_cast<std::size_t>((i + n - 1) % n)], dir[static_cast<std::size_t>(i)]) == 0)
            throw ConstructionError("parallel_merge: consecutive edges are parallel at vertex " + std::to_string(i));

    // Candidate turning vertices, straightest corners first.
    std::vector<std::pair<double, int>> blunt;
    for (int i = 0; i < n; ++i) {
        const Point &u = dir[static_cast<std::size_t>((i + n - 1) % n)], &w = dir[static_cast<std::size_t>(i)];
        blunt.emplace_back(-dot(u, w).get_d() / (approx_len(u) * approx_len(w)), i);
    }
    std::sort(blunt.begin(), blunt.end());

    auto line_meet = [](const Point& p1, const Point& d1, const Point& p2, const Point& d2) {
        Rat s = cross(p2 - p1, d2) / cross(d1, d2);
        return p1 + s * d1;
    };
    const int tries = std::min(n, 8);
    for (int ci = 0; ci < tries; ++ci) {
        const int iv = blunt[static_cast<std::size_t>(ci)].second;
        const int iw = (iv + n / 2) % n;
        if (p > 2 && (n < 4 || (iw + 1) % n == iv || (iv + 1) % n == iw)) continue;
        for (const Rat& mu_factor : {Rat(1, 4), Rat(1), Rat(1, 16)}) {
            for (int attempt = 0; attempt < 10; ++attempt) {
                Rat eps = dyadic(8 + attempt);
                CycleGraph G;
                auto id = [&](int i, int j) { return j * n + ((i % n) + n) % n; };
                for (int j = 0; j < p; ++j) {
                    std::vector<Point> pts;
                    for (int i = 0; i < n; ++i) {
                        const Point &dp = dir[static_cast<std::size_t>((i + n - 1) % n)], &dc = dir[static_cast<std::size_t>(i)];
                        Rat off = Rat(j) * eps;
                        pts.push_back(line_meet(L[(i + n - 1) % n] + off * rot90(dp), dp, L[i] + off * rot90(dc), dc));
                    }
                    G.add_cycle(pts);
                }
                Rat mu = eps * mu_factor;
                auto uturn = [&](int v, int a, int b) {
                    Point M = midpoint(G.point(id(v, a)), G.point(id(v, b)));
                    Point xin = M - mu * dir[static_cast<std::size_t>((v + n - 1) % n)];
                    Point xout = M + mu * dir[static_cast<std::size_t>(v)];
                    G.kill(id(v, a));
                    G.kill(id(v, b));
                    int xi = G.add(xin), xo = G.add(xout);
                    G.link(xi, id(v - 1, a));
                    G.link(xi, id(v - 1, b));
                    G.link(xo, id(v + 1, a));
                    G.link(xo, id(v + 1, b));
                };
                for (int a = 0; a + 1 < p; a += 2) uturn(iv, a, a + 1);
                for (int a = 1; a + 1 < p; a += 2) uturn(iw, a, a + 1);
                Polyline out = G.extract();
                if (classify(out).is(p * n, p * k)) return out;
            }
        }
    }
    throw ConstructionError("parallel_merge: no valid offset within the retry budget");
}

namespace {

Point circle_point(const Point& center, const Rat& radius, double theta) {
    double u = std::tan(theta / 2);
    Rat ur(static_cast<long>(std::llround(u * 1048576.0)), 1048576L);
    ur.canonicalize();
    Rat den = 1 + ur * ur;
    return {center.x + radius * (1 - ur * ur) / den, center.y + radius * 2 * ur / den};
}

}  // namespace

Polyline theorem2_merge(const Polyline& L1, const SegmentCollection& C2, int s) {
    Classification c1 = require_uniform(L1, "theorem2_merge");
    const int k = c1.type.k;
    const int n1 = L1.size(), n2 = static_cast<int>(C2.vertices.size());
    if (s < 1 || static_cast<int>(C2.components.size()) != s)
        throw ConstructionError("theorem2_merge: collection has " + std::to_string(C2.components.size()) + " components, expected " + std::to_string(s));
    if (n1 < 2 * s || n2 < 2 * s) throw ConstructionError("theorem2_merge: each part needs at least 2s vertices");
    for (int x : collection_profile(C2))
        if (x != k) throw ConstructionError("theorem2_merge: collection segments do not all carry " + std::to_string(k) + " crossings");

    std::vector<int> ord1 = detail::convex_order(L1.v), ord2 = detail::convex_order(C2.vertices);
    std::vector<int> comp_of(static_cast<std::size_t>(n2), -1);
    for (std::size_t ci = 0; ci < C2.components.size(); ++ci)
        for (int v : C2.components[ci]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(ci);
    int start2 = -1;
    for (int st = 0; st < n2 && start2 < 0; ++st) {
        std::vector<bool> used(static_cast<std::size_t>(s), false);
        bool ok = true;
        for (int t = 0; t < s && ok; ++t) {
            int cidx = comp_of[static_cast<std::size_t>(ord2[static_cast<std::size_t>((st + t) % n2)])];
            ok = cidx >= 0 && !used[static_cast<std::size_t>(cidx)];
            if (ok) used[static_cast<std::size_t>(cidx)] = true;
        }
        if (ok) start2 = st;
    }
    if (start2 < 0) throw ConstructionError("theorem2_merge: no run of s hull vertices meets every component once");

    const double pi = std::acos(-1.0);
    const double theta_min = 0.15;
    const Point center{Rat(s - 1, 2), Rat(0)};
    const Rat radius(s);
    for (int attempt = 0; attempt < 12; ++attempt) {
        auto jitter = [&](int j) { return (((j * 7919 + attempt * 104729) % 1000) / 1000.0 - 0.5) * 0.4 * (attempt > 0); };
        std::vector<Point> p1(static_cast<std::size_t>(n1)), p2(static_cast<std::size_t>(n2));
        for (int t = 0; t < s; ++t) p1[static_cast<std::size_t>(ord1[static_cast<std::size_t>(t)])] = {Rat(t), Rat(0)};
        int cnt1 = n1 - s;
        for (int j = 0; j < cnt1; ++j) {
            double th = theta_min + (pi - 2 * theta_min) * (j + 0.5 + jitter(j)) / cnt1;
            p1[static_cast<std::size_t>(ord1[static_cast<std::size_t>(s + j)])] = circle_point(center, radius, th);
        }
        for (int t = 0; t < s; ++t) p2[static_cast<std::size_t>(ord2[static_cast<std::size_t>((start2 + t) % n2)])] = {Rat(s - 1 - t), Rat(0)};
        int cnt2 = n2 - s;
        for (int j = 0; j < cnt2; ++j) {
            double th = pi + theta_min + (pi - 2 * theta_min) * (j + 0.5 + jitter(j + 500)) / cnt2;
            p2[static_cast<std::size_t>(ord2[static_cast<std::size_t>((start2 + s + j) % n2)])] = circle_point(center, radius, th);
        }
        for (int pass = 0; pass < 4; ++pass) {
            CycleGraph G{Polyline(p1)};
            std::vector<int> node2(static_cast<std::size_t>(n2));
            for (const auto& comp : C2.components) {
                std::vector<Point> pts;
                for (int v : comp) pts.push_back(p2[static_cast<std::size_t>(v)]);
                int first = G.add_cycle(pts);
                for (std::size_t q = 0; q < comp.size(); ++q) node2[static_cast<std::size_t>(comp[q])] = first + static_cast<int>(q);
            }
            Rat eta = dyadic(4 + pass);
            for (int t = 0; t < s; ++t)
                detail::merge_at_vertex(G, ord1[static_cast<std::size_t>(t)], node2[static_cast<std::size_t>(ord2[static_cast<std::size_t>((start2 + s - 1 - t) % n2)])],
                                        Point{Rat(1), Rat(0)}, eta);
            Polyline out = G.extract();
            if (classify(out).is(n1 + n2, k)) return out;
        }
    }
    throw ConstructionError("theorem2_merge: no valid placement within the retry budget");
}

Polyline theorem2_merge(int k, int d) {
    if (k < 2 || k % 2 != 0) throw ConstructionError("theorem2_merge needs an even k >= 2");
    if (d < 3) throw ConstructionError("theorem2_merge needs d >= 3");
    int s = std::gcd(d - 2, k / 2 + 1);
    return theorem2_merge(main_diagonals(k + 3), span_collection(k + d, k / 2 + 1), s);
}

}  // namespace polycross
