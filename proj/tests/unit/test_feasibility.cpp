#include "doctest.h"
#include "polycross/feasibility.hpp"
#include "polycross/search.hpp"

using namespace polycross;

TEST_SUITE("feasibility") {

TEST_CASE("infeasibility rules") {
    CHECK(infeasibility_rule(7, 3) == RuleId::ParityLemma);
    CHECK(infeasibility_rule(10, 8) == RuleId::TooFewEdges);
    CHECK(infeasibility_rule(10, 7) == RuleId::NMinus3Lemma);
    CHECK(infeasibility_rule(6, 2) == RuleId::Lemma62);
    CHECK(infeasibility_rule(10, 6) == RuleId::NMinus4Lemma);
    CHECK(infeasibility_rule(8, 3) == RuleId::ExhaustiveSearchFact);
    CHECK(infeasibility_rule(9, 4) == RuleId::ExhaustiveSearchFact);
    CHECK_FALSE(infeasibility_rule(12, 8).has_value());
    CHECK_FALSE(infeasibility_rule(9, 6).has_value());
    CHECK(decide(8, 3).describe() == "Infeasible (exhaustive-search fact)");
}

TEST_CASE("verdict examples") {
    auto v = decide(9, 6);
    REQUIRE(v.feasible());
    CHECK(v.recipe->str() == "star(9,4)");
    CHECK(decide(12, 5).status == Verdict::Status::Unknown);
    CHECK(decide(12, 5).describe() == "Unknown (open problem)");
    CHECK(classify(witness(10, 3)).is(10, 3));
    CHECK(classify(witness(42, 11)).is(42, 11));
    CHECK(classify(witness(4, 0)).is(4, 0));
    CHECK_THROWS_AS(witness(6, 2), ConstructionError);
    CHECK_THROWS_AS(witness(42, 23), ConstructionError);
    CHECK(decide(42, 23).describe() == "Feasible (claimed, witness withheld)");
}

TEST_CASE("parity: odd n with odd k is never feasible") {
    for (int n = 3; n <= 41; n += 2)
        for (int k = 1; k <= n; k += 2) CHECK(decide(n, k).status == Verdict::Status::Infeasible);
}

TEST_CASE("small sets") {
    CHECK(compute_C(1, 12).feasible == std::vector<int>{6, 8, 10, 12});
    CHECK(compute_C(4, 15).feasible == std::vector<int>{7, 8, 10, 11, 12, 13, 14, 15});
    CHECK(compute_C(6, 14).feasible == std::vector<int>{9, 11, 12, 13, 14});
    CHECK(compute_B(6).feasible == std::vector<int>{1});
    CHECK(compute_B(5).feasible == std::vector<int>{2});
    CHECK(compute_C(5, 12).unknown == std::vector<int>{12});
}

TEST_CASE("even-index coverage from 2k+3 on") {
    for (int k = 2; k <= 12; k += 2)
        for (int n = 2 * k + 3; n <= 2 * k + 20; ++n) CHECK_MESSAGE(decide(n, k).feasible(), n << "," << k);
}

TEST_CASE("witnesses verify for small types") {
    for (int n = 3; n <= 24; ++n)
        for (int k = 0; k <= 8; ++k) {
            auto v = decide(n, k);
            if (!v.evaluable()) continue;
            CHECK_MESSAGE(verify_type(witness(n, k), n, k).pass, n << "," << k << " " << v.recipe->str());
        }
}

TEST_CASE("even-k composition of stars") {
    auto r = theorem1_recipe(60, 4);
    REQUIRE(r.has_value());
    CHECK(classify(evaluate(*r)).is(60, 4));
    auto o = theorem1_recipe(80, 3);
    REQUIRE(o.has_value());
    CHECK(classify(evaluate(*o)).is(80, 3));
}

TEST_CASE("search finds nothing for rule-excluded small types") {
    auto sets6 = random_pointsets(6, 6, 99);
    auto sets7 = random_pointsets(7, 3, 99);
    for (int k = 0; k <= 6; ++k) {
        if (decide(6, k).status == Verdict::Status::Infeasible) CHECK(exhaustive_scan(6, k, sets6).witnesses.empty());
        if (decide(7, k).status == Verdict::Status::Infeasible) CHECK(exhaustive_scan(7, k, sets7).witnesses.empty());
    }
}

TEST_CASE("recipe JSON round-trip") {
    Recipe r = make::glue(make::subdivide(make::star(21, 10), 9), make::lightning(make::fixture("Z12_3"), -1, 7));
    auto doc = r.to_json();
    Recipe back = Recipe::from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.to_json() == doc);
    CHECK(back.str() == r.str());
    CHECK(r.evaluable());
    CHECK_FALSE(make::glue(make::star(5, 2), make::claimed(42, 23, "x")).evaluable());
    CHECK_THROWS_AS(Recipe::from_json(nlohmann::json::parse("{\"op\": 3}")), std::invalid_argument);
    CHECK_THROWS_AS(Recipe::from_json(nlohmann::json::parse("{\"op\": \"nope\", \"params\": {}, \"children\": []}")), std::invalid_argument);
    CHECK(decide(42, 25).to_json()["status"] == "Feasible");
}

}
