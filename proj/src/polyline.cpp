#include "polycross/polyline.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polycross {

std::string type_string(const TypeNK& t) {
    return "<" + std::to_string(t.n) + "|" + std::to_string(t.k) + ">";
}

std::string DegeneracyReport::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::CollinearOverlap: os << "collinear overlap"; break;
        case Kind::EndpointInInterior: os << "vertex inside a non-adjacent edge"; break;
        case Kind::ParallelTouching: os << "collinear edges touching"; break;
        case Kind::VertexCoincidence: os << "non-adjacent edges share a vertex"; break;
        case Kind::CoincidentCrossings: os << "coincident crossing points"; break;
    }
    os << " (edges " << a << "," << b;
    if (c >= 0) os << " and " << c << "," << d;
    os << ")";
    return os.str();
}

namespace {

struct IPt {
    Int x, y;
};

int iorient(const IPt& p, const IPt& q, const IPt& r) {
    Int v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(v);
}

Int icross(const IPt& u0, const IPt& u1, const IPt& v0, const IPt& v1) {
    return (u1.x - u0.x) * (v1.y - v0.y) - (u1.y - u0.y) * (v1.x - v0.x);
}

// Position of p along segment (a,b), scaled by |b-a|^2; p assumed collinear.
Int ialong(const IPt& a, const IPt& b, const IPt& p) {
    return (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
}

bool iinside(const IPt& a, const IPt& b, const IPt& p) {
    Int t = ialong(a, b, p);
    return t > 0 && t < ialong(a, b, b);
}

bool ieq(const IPt& a, const IPt& b) { return a.x == b.x && a.y == b.y; }

}  // namespace

IntersectionProfile intersection_profile(const Polyline& L) {
    const int n = L.size();
    if (n < 3) throw std::invalid_argument("polyline needs at least 3 vertices");
    for (int i = 0; i < n; ++i)
        if (L[i] == L[(i + 1) % n])
            throw std::invalid_argument("repeated consecutive vertex at index " + std::to_string(i));

    // Predicates are invariant under positive scaling, so work on integers.
    Int scale = 1;
    for (const auto& p : L.v) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.x.get_den_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.y.get_den_mpz_t());
    }
    std::vector<IPt> P(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        P[i].x = L[i].x.get_num() * (scale / L[i].x.get_den());
        P[i].y = L[i].y.get_num() * (scale / L[i].y.get_den());
    }

    IntersectionProfile prof;
    prof.per_edge.assign(static_cast<std::size_t>(n), 0);
    auto flag = [&](DegeneracyReport::Kind kind, int i, int j) {
        if (!prof.degenerate) prof.degenerate = DegeneracyReport{kind, i, j};
    };

    for (int i = 0; i < n; ++i) {
        const IPt &a = P[i], &b = P[(i + 1) % n];
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the closing vertex
            const IPt &c = P[j], &d = P[(j + 1) % n];
            if (ieq(a, c) || ieq(a, d) || ieq(b, c) || ieq(b, d)) {
                flag(DegeneracyReport::Kind::VertexCoincidence, i, j);
                continue;
            }
            int o1 = iorient(a, b, c), o2 = iorient(a, b, d);
            if (o1 == 0 && o2 == 0) {
                Int len = ialong(a, b, b);
                Int tc = ialong(a, b, c), td = ialong(a, b, d);
                if (tc > td) std::swap(tc, td);
                if (td >= 0 && tc <= len) {
                    bool point = td == 0 || tc == len;
                    flag(point ? DegeneracyReport::Kind::ParallelTouching : DegeneracyReport::Kind::CollinearOverlap, i, j);
                }
                continue;
            }
            int o3 = iorient(c, d, a), o4 = iorient(c, d, b);
            if (o1 * o2 < 0 && o3 * o4 < 0) {
                Int den = icross(a, b, c, d);
                Rat ti(icross(a, c, c, d), den), tj(icross(a, c, a, b), den);
                ti.canonicalize();
                tj.canonicalize();
                Point p = L[i] + ti * (L[(i + 1) % n] - L[i]);
                prof.crossings.push_back({i, j, std::move(p), std::move(ti), std::move(tj)});
                ++prof.per_edge[i];
                ++prof.per_edge[j];
                continue;
            }
            if ((o1 == 0 && iinside(a, b, c)) || (o2 == 0 && iinside(a, b, d)) || (o3 == 0 && iinside(c, d, a)) ||
                (o4 == 0 && iinside(c, d, b)))
                flag(DegeneracyReport::Kind::EndpointInInterior, i, j);
        }
    }

    if (prof.crossings.size() > 1) {
        std::vector<std::size_t> idx(prof.crossings.size());
        for (std::size_t t = 0; t < idx.size(); ++t) idx[t] = t;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t u, std::size_t w) { return lex_less(prof.crossings[u].p, prof.crossings[w].p); });
        for (std::size_t t = 1; t < idx.size(); ++t) {
            const auto &u = prof.crossings[idx[t - 1]], &w = prof.crossings[idx[t]];
            if (u.p == w.p) {
                if (!prof.degenerate)
                    prof.degenerate = DegeneracyReport{DegeneracyReport::Kind::CoincidentCrossings, u.i, u.j, w.i, w.j};
                break;
            }
        }
    }
    return prof;
}

std::vector<std::pair<Rat, int>> crossings_on_edge(const IntersectionProfile& prof, int edge) {
    std::vector<std::pair<Rat, int>> out;
    for (const auto& c : prof.crossings) {
        if (c.i == edge) out.emplace_back(c.ti, c.j);
        else if (c.j == edge) out.emplace_back(c.tj, c.i);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

Classification classify(const Polyline& L, IntersectionProfile prof) {
    Classification c;
    c.profile = std::move(prof);
    if (c.profile.degenerate) {
        c.kind = Classification::Kind::Degenerate;
        return c;
    }
    const auto& pe = c.profile.per_edge;
    bool uniform = std::all_of(pe.begin(), pe.end(), [&](int x) { return x == pe.front(); });
    c.kind = uniform ? Classification::Kind::Uniform : Classification::Kind::NonUniform;
    c.type = {L.size(), uniform ? pe.front() : -1};
    return c;
}

Classification classify(const Polyline& L) { return classify(L, intersection_profile(L)); }

std::string Classification::describe() const {
    switch (kind) {
        case Kind::Uniform: return "Uniform" + type_string(type);
        case Kind::NonUniform: {
            std::vector<int> vals = profile.per_edge;
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            std::string s = "NonUniform(counts";
            for (int x : vals) s += " " + std::to_string(x);
            return s + ")";
        }
        case Kind::Degenerate: return "Degenerate(" + profile.degenerate->describe() + ")";
    }
    return "?";
}

VerifyReport verify_type(const Polyline& L, int n, int k) {
    VerifyReport r;
    r.expected = k;
    if (L.size() != n) {
        r.message = "edge count " + std::to_string(L.size()) + ", expected " + std::to_string(n);
        r.actual = L.size();
        return r;
    }
    Classification c = classify(L);
    if (c.kind == Classification::Kind::Degenerate) {
        r.message = c.describe();
        return r;
    }
    for (int i = 0; i < n; ++i) {
        if (c.profile.per_edge[i] != k) {
            r.edge = i;
            r.actual = c.profile.per_edge[i];
            r.message = "edge " + std::to_string(i) + ": expected " + std::to_string(k) + ", actual " + std::to_string(r.actual);
            return r;
        }
    }
    r.pass = true;
    r.actual = k;
    r.message = "pass";
    return r;
}

std::string to_json(const Polyline& L, std::optional<TypeNK> claimed) {
    nlohmann::ordered_json doc;
    auto verts = nlohmann::ordered_json::array();
    for (const auto& p : L.v) verts.push_back({format_rat(p.x), format_rat(p.y)});
    doc["vertices"] = std::move(verts);
    if (claimed) doc["claimed_type"] = {claimed->n, claimed->k};
    return doc.dump(2) + "\n";
}

Polyline from_json(const std::string& text, std::optional<TypeNK>* claimed) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw std::invalid_argument("document needs a \"vertices\" array");
    Polyline L;
    for (const auto& rec : doc["vertices"]) {
        if (!rec.is_array() || rec.size() != 2 || !rec[0].is_string() || !rec[1].is_string())
            throw std::invalid_argument("each vertex must be [\"x\", \"y\"] with string coordinates");
        L.v.push_back({parse_rat(rec[0].get<std::string>()), parse_rat(rec[1].get<std::string>())});
    }
    if (L.size() < 3) throw std::invalid_argument("polyline needs at least 3 vertices");
    for (int i = 0; i < L.size(); ++i)
        if (L[i] == L[(i + 1) % L.size()])
            throw std::invalid_argument("repeated consecutive vertex at index " + std::to_string(i));
    if (claimed) {
        claimed->reset();
        if (doc.contains("claimed_type")) {
            const auto& ct = doc["claimed_type"];
            if (!ct.is_array() || ct.size() != 2 || !ct[0].is_number_integer() || !ct[1].is_number_integer())
                throw std::invalid_argument("claimed_type must be [n, k]");
            *claimed = TypeNK{ct[0].get<int>(), ct[1].get<int>()};
        }
    }
    return L;
}

}  // namespace polycross
