#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "polycross/search.hpp"

using namespace polycross;

namespace {

// Every vertex permutation, classified exactly, deduplicated up to rotation and reversal.
std::set<std::vector<int>> all_witnesses(const PointSet& ps, int k) {
    const int n = static_cast<int>(ps.points.size());
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i;
    std::set<std::vector<int>> out;
    do {
        if (classify(order_polyline(ps, p)).is(n, k)) out.insert(oracle::canonical_cycle(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string temp_file(const std::string& name, const std::vector<unsigned char>& bytes) {
    auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return path;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("order count is (n-1)!/2") {
    const std::uint64_t expect[] = {0, 0, 0, 1, 3, 12, 60, 360, 2520};
    for (int n = 3; n <= 8; ++n) {
        auto sets = random_pointsets(n, 2, 17);
        SearchReport rep = exhaustive_scan(n, 1, sets);
        CHECK(rep.configurations == 2);
        CHECK(rep.orders == 2 * expect[n]);
    }
}

TEST_CASE("witness sets match all-permutations oracle") {
    for (int n = 4; n <= 7; ++n) {
        auto sets = random_pointsets(n, n == 7 ? 2 : 6, 5 + n);
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (int k = 0; k <= n - 3; ++k) {
                auto got = search_pointset(sets[i], k);
                std::set<std::vector<int>> canon;
                for (const auto& w : got) {
                    CHECK(w.order.front() == 0);
                    CHECK(canon.insert(oracle::canonical_cycle(w.order)).second);  // no order seen twice
                    CHECK(classify(order_polyline(sets[i], w.order)).is(n, k));
                }
                CHECK(canon == all_witnesses(sets[i], k));
            }
    }
}

TEST_CASE("convex 4-set with k=0 gives its convex order") {
    PointSet sq{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}, "explicit"};
    auto w = search_pointset(sq, 0);
    REQUIRE(w.size() == 1);
    CHECK(w[0].order == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("pentagram order for convex 5-sets") {
    for (const auto& ps : random_pointsets(5, 10, 3, true)) {
        CHECK(in_convex_position(ps.points));
        CHECK(search_pointset(ps, 2).size() == 1);
    }
}

TEST_CASE("no six-point witness for k=2") {
    CHECK(exhaustive_scan(6, 2, random_pointsets(6, 20, 4)).witnesses.empty());
}

TEST_CASE("general position is enforced") {
    PointSet bad{{{0, 0}, {1, 1}, {2, 2}, {0, 5}}, "explicit"};
    CHECK_THROWS_AS(search_pointset(bad, 0), std::invalid_argument);
    for (const auto& ps : random_pointsets(8, 20, 1)) CHECK_FALSE(in_general_position(ps.points).has_value());
}

TEST_CASE("reports are deterministic and independent of the job count") {
    auto a = random_pointsets(7, 12, 42), b = random_pointsets(7, 12, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].points == b[i].points);
    SearchReport r1 = exhaustive_scan(7, 2, a, 1), r4 = exhaustive_scan(7, 2, b, 4);
    CHECK(r1.summary() == r4.summary());
    REQUIRE(r1.witnesses.size() == r4.witnesses.size());
    for (std::size_t i = 0; i < r1.witnesses.size(); ++i) {
        CHECK(r1.witnesses[i].set_index == r4.witnesses[i].set_index);
        CHECK(r1.witnesses[i].order == r4.witnesses[i].order);
    }
    CHECK(random_pointsets(7, 3, 1)[0].points != random_pointsets(7, 3, 2)[0].points);
}

TEST_CASE("database loading") {
    // two 5-point records, 8-bit
    std::vector<unsigned char> rec8 = {0, 0, 10, 1, 12, 9, 5, 14, 1, 8, 3, 2, 200, 7, 100, 100, 9, 250, 40, 60};
    auto sets = load_pointset_db(temp_file("pc_db8.bin", rec8), 5, 8);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].points[2] == Point{12, 9});
    CHECK(sets[1].points[3] == Point{9, 250});
    CHECK(sets[1].source == "db(record=1)");

    std::vector<unsigned char> rec16 = {0x01, 0x02, 0, 0, 0xff, 0xff, 0x10, 0, 0, 0x80, 0x00, 0x40};
    auto s16 = load_pointset_db(temp_file("pc_db16.bin", rec16), 3, 16);
    REQUIRE(s16.size() == 1);
    CHECK(s16[0].points[0] == Point{0x0201, 0});
    CHECK(s16[0].points[1] == Point{0xffff, 0x10});

    CHECK(load_pointset_db(temp_file("pc_empty.bin", {}), 8, 8).empty());

    std::vector<unsigned char> trunc(rec8.begin(), rec8.end() - 1);
    try {
        load_pointset_db(temp_file("pc_trunc.bin", trunc), 5, 8);
        FAIL("expected a size mismatch");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("record size 10") != std::string::npos);
    }

    std::vector<unsigned char> col = rec8;
    col.insert(col.end(), {0, 0, 1, 1, 2, 2, 7, 1, 3, 9});
    try {
        load_pointset_db(temp_file("pc_col.bin", col), 5, 8);
        FAIL("expected a general-position error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("record 2") != std::string::npos);
    }
    CHECK_THROWS_AS(load_pointset_db("/nonexistent/db.bin", 8, 8), std::invalid_argument);
    CHECK_THROWS_AS(load_pointset_db(temp_file("pc_db8.bin", rec8), 5, 12), std::invalid_argument);
}

}
