// Serializable construction trees used as feasibility witnesses.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polycross/constructions.hpp"

namespace polycross {

struct Recipe {
    std::string op;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<Recipe> children;

    nlohmann::ordered_json to_json() const;
    // Throws std::invalid_argument on malformed trees.
    static Recipe from_json(const nlohmann::json& doc);
    // Compact form such as glue(star(9,4), star(9,4)).
    std::string str() const;
    // False when the tree contains a "claimed" leaf (asserted type without coordinates).
    bool evaluable() const;
};

// Evaluates the tree; results are cached by serialized recipe. Throws ConstructionError.
Polyline evaluate(const Recipe& r);

namespace make {
Recipe star(int n, int span);
Recipe comb(int k);
Recipe pattern(int n, const std::vector<int>& pattern);
Recipe double_polygon(int n, int p, int q, const Rat& h);
Recipe neg_double_polygon(int n, int p, int q, const Rat& h);
Recipe fixture(const std::string& name);
Recipe subdivide(Recipe child, int p);
Recipe glue(Recipe a, Recipe b);
Recipe parallel_merge(Recipe child, int p);
// edge < 0 tries every edge in order.
Recipe lightning(Recipe child, int edge, int folds);
Recipe surgery(Recipe child, int i, int j);
Recipe cross_double(Recipe child);
Recipe theorem2(int k, int d);
Recipe claimed(int n, int k, const std::string& note);
}  // namespace make

}  // namespace polycross
