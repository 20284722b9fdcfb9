#include "construct_util.hpp"

#include <algorithm>
#include <numeric>

namespace polycross::detail {

Rat dyadic(int e) {
    Int num = 1, den = 1;
    if (e >= 0)
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return Rat(num, den);
}

Rat simple_between(const Rat& lo, const Rat& hi) {
    Rat a = lo + (hi - lo) / 4, b = hi - (hi - lo) / 4;
    for (int j = 0;; ++j) {
        Rat scaled = a / dyadic(j);
        Int m;
        mpz_cdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        Rat cand = Rat(m) * dyadic(j);
        if (cand <= b) return cand;
    }
}

CycleGraph::CycleGraph(const Polyline& L) { add_cycle(L.v); }

int CycleGraph::add(const Point& p) {
    pts_.push_back(p);
    nb_.push_back({-1, -1});
    alive_.push_back(true);
    return size() - 1;
}

int CycleGraph::add_cycle(const std::vector<Point>& pts) {
    int first = size();
    for (const auto& p : pts) add(p);
    int m = static_cast<int>(pts.size());
    for (int i = 0; i < m; ++i) link(first + i, first + (i + 1) % m);
    return first;
}

void CycleGraph::link(int a, int b) {
    auto put = [&](int x, int y) {
        auto& s = nb_[static_cast<std::size_t>(x)];
        if (s[0] < 0) s[0] = y;
        else if (s[1] < 0) s[1] = y;
        else throw ConstructionError("surgery graph: vertex already has two neighbours");
    };
    put(a, b);
    put(b, a);
}

void CycleGraph::unlink(int a, int b) {
    auto drop = [&](int x, int y) {
        auto& s = nb_[static_cast<std::size_t>(x)];
        if (s[0] == y) s[0] = -1;
        else if (s[1] == y) s[1] = -1;
    };
    drop(a, b);
    drop(b, a);
}

void CycleGraph::kill(int a) {
    auto s = nb_[static_cast<std::size_t>(a)];
    for (int b : s)
        if (b >= 0) unlink(a, b);
    alive_[static_cast<std::size_t>(a)] = false;
}

Polyline CycleGraph::extract() const {
    int start = -1, live = 0;
    for (int i = 0; i < size(); ++i) {
        if (!alive_[static_cast<std::size_t>(i)]) continue;
        ++live;
        if (start < 0) start = i;
        if (nb_[static_cast<std::size_t>(i)][0] < 0 || nb_[static_cast<std::size_t>(i)][1] < 0)
            throw ConstructionError("surgery graph: dangling vertex");
    }
    if (start < 0) throw ConstructionError("surgery graph is empty");
    Polyline L;
    int prev = -1, cur = start;
    do {
        L.v.push_back(pts_[static_cast<std::size_t>(cur)]);
        const auto& s = nb_[static_cast<std::size_t>(cur)];
        int next = s[0] != prev ? s[0] : s[1];
        prev = cur;
        cur = next;
        if (L.size() > live) break;
    } while (cur != start);
    if (L.size() != live) throw ConstructionError("surgery graph splits into several cycles");
    return L;
}

std::array<int, 2> merge_at_vertex(CycleGraph& G, int up, int down, const Point& axis, const Rat& eta) {
    const Point V = G.point(up);
    auto U = G.neighbours(up);
    auto D = G.neighbours(down);
    for (int u : U)
        if (cross(axis, G.point(u) - V) <= 0) throw ConstructionError("merge: upper edge not above the axis");
    for (int d : D)
        if (cross(axis, G.point(d) - V) >= 0) throw ConstructionError("merge: lower edge not below the axis");
    int up_left = cross(G.point(U[0]) - V, G.point(U[1]) - V) > 0 ? U[1] : U[0];
    int up_right = up_left == U[0] ? U[1] : U[0];
    int down_left = cross(G.point(D[0]) - V, G.point(D[1]) - V) > 0 ? D[0] : D[1];
    int down_right = down_left == D[0] ? D[1] : D[0];
    G.kill(up);
    G.kill(down);
    int tl = G.add(V - eta * axis), tr = G.add(V + eta * axis);
    G.link(tl, up_left);
    G.link(tl, down_left);
    G.link(tr, up_right);
    G.link(tr, down_right);
    return {tl, tr};
}

Polyline split_edges(const Polyline& L, const IntersectionProfile& prof, const std::vector<int>& pieces, TypeNK expect) {
    const int n = L.size();
    std::vector<std::vector<Rat>> ticks(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        int g = pieces[static_cast<std::size_t>(e)];
        if (g <= 1) continue;
        auto on = crossings_on_edge(prof, e);
        int m = static_cast<int>(on.size());
        if (m % g != 0) return {};
        int q = m / g;
        for (int r = 1; r < g; ++r) {
            if (q == 0)
                ticks[static_cast<std::size_t>(e)].push_back(Rat(r, g));
            else
                ticks[static_cast<std::size_t>(e)].push_back(simple_between(on[static_cast<std::size_t>(r * q - 1)].first, on[static_cast<std::size_t>(r * q)].first));
        }
    }
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rat eps = dyadic(16 + attempt);
        Polyline out;
        for (int e = 0; e < n; ++e) {
            const Point &A = L[e], &B = L[(e + 1) % n];
            out.v.push_back(A);
            for (const Rat& t : ticks[static_cast<std::size_t>(e)]) out.v.push_back(A + t * (B - A) + eps * rot90(B - A));
        }
        if (classify(out).is(expect.n, expect.k)) return out;
    }
    return {};
}

std::vector<int> convex_order(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return lex_less(pts[a], pts[b]); });
    std::vector<int> hull;
    auto build = [&](auto begin, auto end) {
        std::size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 && orient(pts[hull[hull.size() - 2]], pts[hull.back()], pts[*it]) <= 0) hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back();
    };
    build(idx.begin(), idx.end());
    build(idx.rbegin(), idx.rend());
    if (static_cast<int>(hull.size()) != n) throw ConstructionError("points are not in strictly convex position");
    return hull;
}

Rat inf_norm(const Point& v) {
    Rat ax = abs(v.x), ay = abs(v.y);
    return ax > ay ? ax : ay;
}

Rat min_edge_inf_norm(const Polyline& L) {
    Rat best = inf_norm(L[1] - L[0]);
    for (int i = 1; i < L.size(); ++i) {
        Rat m = inf_norm(L[(i + 1) % L.size()] - L[i]);
        if (m < best) best = m;
    }
    return best;
}

}  // namespace polycross::detail
