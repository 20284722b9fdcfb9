#include <regex>

#include "doctest.h"
#include "polycross/constructions.hpp"
#include "polycross/render.hpp"

using namespace polycross;

namespace {

int count(const std::string& s, const std::string& what) {
    int c = 0;
    for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("element counts") {
    std::string z = render_svg(fixture("Z10_3"));
    CHECK(count(z, "<line ") == 10);
    CHECK(count(z, "<circle ") == 10);
    CHECK(count(z, "<text") == 0);
    std::string s = render_svg(star(5, 2));
    CHECK(count(s, "<line ") == 5);
    CHECK(count(s, "<circle ") == 5);
    CHECK(s.find("version=\"1.1\"") != std::string::npos);
    CHECK(s.rfind("</svg>\n") == s.size() - 7);
}

TEST_CASE("labels carry the crossing counts") {
    RenderSpec spec;
    spec.labels = true;
    for (auto [L, k] : {std::pair{fixture("Z16_5"), 5}, std::pair{star(11, 4), 6}}) {
        std::string svg = render_svg(L, spec);
        std::regex label(">([0-9]+)</text>");
        int seen = 0;
        for (auto it = std::sregex_iterator(svg.begin(), svg.end(), label); it != std::sregex_iterator(); ++it, ++seen)
            CHECK(std::stoi((*it)[1]) == k);
        CHECK(seen == L.size());
    }
}

TEST_CASE("coordinates stay inside the canvas with six decimals") {
    RenderSpec spec;
    spec.width = 300;
    spec.height = 200;
    std::string svg = render_svg(fixture("Z42_19"), spec);
    std::regex num("(cx|cy)=\"(-?[0-9]+\\.[0-9]{6})\"");
    int seen = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), num); it != std::sregex_iterator(); ++it, ++seen) {
        double v = std::stod((*it)[2]);
        CHECK(v >= 0);
        CHECK(v <= ((*it)[1] == "cx" ? 300 : 200));
    }
    CHECK(seen == 2 * 42);
    CHECK(render_svg(fixture("Z42_19"), spec) == svg);
}

TEST_CASE("invalid specs") {
    RenderSpec spec;
    spec.width = 0;
    CHECK_THROWS_AS(render_svg(star(5, 2), spec), std::invalid_argument);
    spec = {};
    spec.margin = 0.5;
    CHECK_THROWS_AS(render_svg(star(5, 2), spec), std::invalid_argument);
}

}
