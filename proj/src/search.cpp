#include "polycross/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace polycross {

std::string SearchReport::summary() const {
    std::ostringstream os;
    os << "type " << type_string({n, k}) << ": configurations " << configurations << ", cyclic orders " << orders
       << ", degenerate orders skipped " << degenerate_skipped << ", witnesses " << witnesses.size();
    if (coincident_flagged) os << " (" << coincident_flagged << " with coincident crossing points)";
    return os.str();
}

void require_general_position(const PointSet& ps) {
    if (ps.points.size() < 3) throw std::invalid_argument("point set needs at least 3 points");
    if (auto t = in_general_position(ps.points))
        throw std::invalid_argument("point set " + ps.source + " is not in general position: points " + std::to_string(t->i) + ", " +
                                    std::to_string(t->j) + ", " + std::to_string(t->k) + " are collinear");
}

Polyline order_polyline(const PointSet& ps, const std::vector<int>& order) {
    Polyline L;
    for (int i : order) L.v.push_back(ps.points[static_cast<std::size_t>(i)]);
    return L;
}

std::vector<SearchWitness> search_pointset(const PointSet& ps, int k, SearchReport* stats) {
    require_general_position(ps);
    const int n = static_cast<int>(ps.points.size());
    std::vector<signed char> o(static_cast<std::size_t>(n * n * n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (a != b && b != c && a != c) o[static_cast<std::size_t>((a * n + b) * n + c)] = static_cast<signed char>(orient(ps.points[a], ps.points[b], ps.points[c]));
    auto O = [&](int a, int b, int c) { return o[static_cast<std::size_t>((a * n + b) * n + c)]; };

    std::vector<int> perm(static_cast<std::size_t>(n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> seq(static_cast<std::size_t>(n)), cnt(static_cast<std::size_t>(n));
    std::vector<SearchWitness> found;
    std::uint64_t orders = 0, coincident = 0;
    do {
        if (perm.front() > perm.back()) continue;  // reversal of an order already seen
        ++orders;
        seq[0] = 0;
        std::copy(perm.begin(), perm.end(), seq.begin() + 1);
        std::fill(cnt.begin(), cnt.end(), 0);
        bool over = false;
        for (int i = 0; i < n && !over; ++i) {
            int a = seq[i], b = seq[(i + 1) % n];
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                int c = seq[j], d = seq[(j + 1) % n];
                if (O(a, b, c) * O(a, b, d) < 0 && O(c, d, a) * O(c, d, b) < 0) {
                    if (++cnt[i] > k || ++cnt[j] > k) {
                        over = true;
                        break;
                    }
                }
            }
        }
        if (over || std::any_of(cnt.begin(), cnt.end(), [&](int x) { return x != k; })) continue;
        // Never trust the table: re-verify exactly.
        SearchWitness w;
        w.order = seq;
        Classification c = classify(order_polyline(ps, seq));
        if (c.is(n, k)) {
            found.push_back(std::move(w));
        } else if (c.kind == Classification::Kind::Degenerate &&
                   c.profile.degenerate->kind == DegeneracyReport::Kind::CoincidentCrossings &&
                   std::all_of(c.profile.per_edge.begin(), c.profile.per_edge.end(), [&](int x) { return x == k; })) {
            w.coincident = true;
            ++coincident;
            found.push_back(std::move(w));
        } else {
            throw std::logic_error("search: orientation table disagrees with exact verification");
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (stats) {
        stats->orders += orders;
        stats->coincident_flagged += coincident;
        stats->configurations += 1;
    }
    return found;
}

SearchReport exhaustive_scan(int n, int k, const std::vector<PointSet>& sources, int jobs) {
    for (const auto& ps : sources)
        if (static_cast<int>(ps.points.size()) != n)
            throw std::invalid_argument("point set " + ps.source + " has " + std::to_string(ps.points.size()) + " points, expected " + std::to_string(n));
    std::vector<SearchReport> part(sources.size());
    std::vector<std::vector<SearchWitness>> hits(sources.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= sources.size()) return;
            try {
                hits[i] = search_pointset(sources[i], k, &part[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    int threads = std::max(1, std::min<int>(jobs, static_cast<int>(sources.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    SearchReport rep;
    rep.n = n;
    rep.k = k;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        rep.configurations += part[i].configurations;
        rep.orders += part[i].orders;
        rep.degenerate_skipped += part[i].degenerate_skipped;
        rep.coincident_flagged += part[i].coincident_flagged;
        for (auto& w : hits[i]) {
            w.set_index = i;
            rep.witnesses.push_back(std::move(w));
        }
    }
    return rep;
}

bool in_convex_position(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (int p = 0; p < n; ++p)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    if (p == a || p == b || p == c) continue;
                    int s1 = orient(pts[a], pts[b], pts[p]), s2 = orient(pts[b], pts[c], pts[p]), s3 = orient(pts[c], pts[a], pts[p]);
                    if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) return false;
                }
    return true;
}

std::vector<PointSet> random_pointsets(int n, int count, std::uint64_t seed, bool convex) {
    if (n < 3) throw std::invalid_argument("random point sets need n >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(0, (1L << 20) - 1);
    std::vector<PointSet> out;
    for (int i = 0; i < count; ++i) {
        PointSet ps;
        ps.source = "random(seed=" + std::to_string(seed) + ",i=" + std::to_string(i) + ")";
        for (;;) {
            ps.points.clear();
            while (static_cast<int>(ps.points.size()) < n) {
                Point p{Rat(coord(rng)), Rat(coord(rng))};
                bool ok = true;
                for (std::size_t a = 0; a < ps.points.size() && ok; ++a) {
                    if (ps.points[a] == p) ok = false;
                    for (std::size_t b = a + 1; b < ps.points.size() && ok; ++b)
                        if (orient(ps.points[a], ps.points[b], p) == 0) ok = false;
                }
                if (ok) ps.points.push_back(p);
            }
            if (!convex || in_convex_position(ps.points)) break;
        }
        out.push_back(std::move(ps));
    }
    return out;
}

std::vector<PointSet> load_pointset_db(const std::string& path, int n, int width) {
    if (width != 8 && width != 16) throw std::invalid_argument("coordinate width must be 8 or 16 bits");
    if (n < 3) throw std::invalid_argument("database point sets need n >= 3");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open point-set database '" + path + "'");
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::size_t bpc = static_cast<std::size_t>(width / 8);
    const std::size_t rec = static_cast<std::size_t>(n) * 2 * bpc;
    if (bytes.size() % rec != 0)
        throw std::invalid_argument("size mismatch: " + std::to_string(bytes.size()) + " bytes is not a multiple of the record size " +
                                    std::to_string(rec) + " (n=" + std::to_string(n) + ", width=" + std::to_string(width) + ")");
    std::vector<PointSet> out;
    for (std::size_t r = 0; r * rec < bytes.size(); ++r) {
        PointSet ps;
        ps.source = "db(record=" + std::to_string(r) + ")";
        const unsigned char* base = bytes.data() + r * rec;
        auto read = [&](std::size_t idx) {
            unsigned v = base[idx * bpc];
            if (bpc == 2) v |= static_cast<unsigned>(base[idx * bpc + 1]) << 8;
            return v;
        };
        for (int i = 0; i < n; ++i) ps.points.push_back({Rat(read(2 * i)), Rat(read(2 * i + 1))});
        if (auto t = in_general_position(ps.points))
            throw std::invalid_argument("database record " + std::to_string(r) + " is not in general position (points " + std::to_string(t->i) +
                                        ", " + std::to_string(t->j) + ", " + std::to_string(t->k) + ")");
        out.push_back(std::move(ps));
    }
    return out;
}

}  // namespace polycross
