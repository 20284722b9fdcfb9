#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polycross/geometry.hpp"

using namespace polycross;

TEST_SUITE("geometry") {

TEST_CASE("rational parsing round-trips") {
    for (const char* s : {"0", "7", "-3", "3/2", "-13/10", "1/1000000000000000000000"}) CHECK(format_rat(parse_rat(s)) == s);
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(format_rat(parse_rat("6/4")) == "3/2");
    CHECK(rat_from_decimal("-3.25") == Rat(-13, 4));
    CHECK(rat_from_decimal("0.000001") == Rat(1, 1000000));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("orientation signs") {
    Point o{0, 0}, a{1, 0}, b{0, 1};
    CHECK(orient(o, a, b) == 1);
    CHECK(orient(o, b, a) == -1);
    CHECK(orient(o, a, Point{2, 0}) == 0);
    CHECK(orient(o, a, Point{Rat(1, 3), Rat(1, 1000000000)}) == 1);
}

TEST_CASE("proper_crossing agrees with a Cramer's-rule oracle on random small-grid segments") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-4, 4);
    int crossings = 0, degenerate = 0;
    for (int it = 0; it < 20000; ++it) {
        Point a{c(rng), c(rng)}, b{c(rng), c(rng)}, p{c(rng), c(rng)}, q{c(rng), c(rng)};
        if (a == b || p == q) continue;
        auto r = proper_crossing({a, b}, {p, q});
        bool touching_or_overlap = oracle::collinear(a, b, p) || oracle::collinear(a, b, q) || oracle::collinear(p, q, a) ||
                                   oracle::collinear(p, q, b);
        if (r.kind == CrossingResult::Kind::Crossing) {
            ++crossings;
            REQUIRE(oracle::crosses(a, b, p, q));
            CHECK(orient(a, b, r.point) == 0);
            CHECK(orient(p, q, r.point) == 0);
        } else if (r.kind == CrossingResult::Kind::None) {
            CHECK_FALSE(oracle::crosses(a, b, p, q));
        } else {
            ++degenerate;
            CHECK(touching_or_overlap);
        }
    }
    CHECK(crossings > 100);
    CHECK(degenerate > 100);
}

TEST_CASE("degenerate contact kinds") {
    CHECK(proper_crossing({{0, 0}, {4, 0}}, {{2, 0}, {2, 3}}).kind == CrossingResult::Kind::Degenerate);
    CHECK(proper_crossing({{0, 0}, {4, 0}}, {{2, 0}, {2, 3}}).degenerate == DegenerateKind::EndpointInInterior);
    CHECK(proper_crossing({{0, 0}, {4, 0}}, {{2, 0}, {6, 0}}).degenerate == DegenerateKind::CollinearOverlap);
    CHECK(proper_crossing({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}).is_crossing());
    CHECK(proper_crossing({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}).point == Point{Rat(1, 2), Rat(1, 2)});
    CHECK(proper_crossing({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}).kind == CrossingResult::Kind::None);
    CHECK(proper_crossing({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}).kind == CrossingResult::Kind::None);
}

TEST_CASE("general position matches a triple scan") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(0, 5);
    for (int it = 0; it < 500; ++it) {
        std::vector<Point> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({c(rng), c(rng)});
        std::optional<Triple> first;
        for (int i = 0; i < 6 && !first; ++i)
            for (int j = i + 1; j < 6 && !first; ++j)
                for (int k = j + 1; k < 6 && !first; ++k)
                    if (oracle::collinear(pts[i], pts[j], pts[k])) first = Triple{i, j, k};
        auto got = in_general_position(pts);
        REQUIRE(got.has_value() == first.has_value());
        if (got) CHECK((got->i == first->i && got->j == first->j && got->k == first->k));
    }
}

}
