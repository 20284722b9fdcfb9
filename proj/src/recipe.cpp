#include "polycross/recipe.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace polycross {

nlohmann::ordered_json Recipe::to_json() const {
    nlohmann::ordered_json doc;
    doc["op"] = op;
    doc["params"] = params;
    auto kids = nlohmann::ordered_json::array();
    for (const auto& c : children) kids.push_back(c.to_json());
    doc["children"] = std::move(kids);
    return doc;
}

Recipe Recipe::from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("op") || !doc["op"].is_string())
        throw std::invalid_argument("recipe node needs a string \"op\"");
    Recipe r;
    r.op = doc["op"].get<std::string>();
    static const std::set<std::string> ops = {"star", "main_diagonals", "lemma4_diagonals", "comb", "pattern", "double_polygon",
                                              "neg_double_polygon", "fixture", "subdivide", "glue", "parallel_merge", "lightning",
                                              "surgery", "cross_double", "theorem2", "claimed"};
    if (!ops.count(r.op)) throw std::invalid_argument("unknown recipe op '" + r.op + "'");
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) throw std::invalid_argument("recipe \"params\" must be an object");
        r.params = nlohmann::ordered_json::parse(doc["params"].dump());
    }
    if (doc.contains("children")) {
        if (!doc["children"].is_array()) throw std::invalid_argument("recipe \"children\" must be an array");
        for (const auto& c : doc["children"]) r.children.push_back(from_json(c));
    }
    return r;
}

std::string Recipe::str() const {
    std::string s = op + "(";
    bool first = true;
    for (const auto& [key, val] : params.items()) {
        if (op == "claimed" && key == "note") continue;
        if (!first) s += ",";
        s += val.is_string() ? val.get<std::string>() : val.dump();
        first = false;
    }
    for (const auto& c : children) {
        if (!first) s += ", ";
        s += c.str();
        first = false;
    }
    return s + ")";
}

bool Recipe::evaluable() const {
    if (op == "claimed") return false;
    for (const auto& c : children)
        if (!c.evaluable()) return false;
    return true;
}

namespace {

int ip(const Recipe& r, const char* key) {
    if (!r.params.contains(key) || !r.params[key].is_number_integer())
        throw std::invalid_argument("recipe " + r.op + " needs integer parameter \"" + key + "\"");
    return r.params[key].get<int>();
}

Rat rp(const Recipe& r, const char* key) {
    if (!r.params.contains(key)) throw std::invalid_argument("recipe " + r.op + " needs parameter \"" + key + "\"");
    const auto& v = r.params[key];
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) return parse_rat(v.get<std::string>());
    throw std::invalid_argument("recipe parameter \"" + std::string(key) + "\" must be an integer or \"p/q\" string");
}

const Recipe& child(const Recipe& r, std::size_t i) {
    if (r.children.size() <= i) throw std::invalid_argument("recipe " + r.op + " is missing a child");
    return r.children[i];
}

Polyline eval_uncached(const Recipe& r) {
    const std::string& op = r.op;
    if (op == "star") return star(ip(r, "n"), ip(r, "span"));
    if (op == "main_diagonals") return main_diagonals(ip(r, "n"));
    if (op == "lemma4_diagonals") return lemma4_diagonals(ip(r, "m"));
    if (op == "comb") return comb_construction(ip(r, "k"));
    if (op == "pattern") {
        if (!r.params.contains("pattern") || !r.params["pattern"].is_array())
            throw std::invalid_argument("recipe pattern needs an array \"pattern\"");
        return additive_pattern(ip(r, "n"), r.params["pattern"].get<std::vector<int>>());
    }
    if (op == "double_polygon") return double_polygon(ip(r, "n"), ip(r, "p"), ip(r, "q"), rp(r, "h"));
    if (op == "neg_double_polygon") return neg_double_polygon(ip(r, "n"), ip(r, "p"), ip(r, "q"), rp(r, "h"));
    if (op == "fixture") {
        if (!r.params.contains("name") || !r.params["name"].is_string())
            throw std::invalid_argument("recipe fixture needs a string \"name\"");
        return fixture(r.params["name"].get<std::string>());
    }
    if (op == "subdivide") return subdivide(evaluate(child(r, 0)), ip(r, "p"));
    if (op == "glue") return glue(evaluate(child(r, 0)), evaluate(child(r, 1)));
    if (op == "parallel_merge") return parallel_merge(evaluate(child(r, 0)), ip(r, "p"));
    if (op == "lightning") {
        Polyline base = evaluate(child(r, 0));
        int edge = ip(r, "edge"), folds = ip(r, "folds");
        if (edge >= 0) return lightning_replace(base, edge, folds);
        std::string last;
        for (int e = 0; e < base.size(); ++e) {
            try {
                return lightning_replace(base, e, folds);
            } catch (const ConstructionError& err) {
                last = err.what();
            }
        }
        throw ConstructionError("lightning failed on every edge: " + last);
    }
    if (op == "surgery") return crossing_surgery(evaluate(child(r, 0)), ip(r, "i"), ip(r, "j"));
    if (op == "cross_double") return cross_double(evaluate(child(r, 0)));
    if (op == "theorem2") return theorem2_merge(ip(r, "k"), ip(r, "d"));
    if (op == "claimed") throw ConstructionError("type asserted without coordinates; nothing to evaluate");
    throw std::invalid_argument("unknown recipe op '" + op + "'");
}

}  // namespace

Polyline evaluate(const Recipe& r) {
    static std::mutex mu;
    static std::map<std::string, Polyline> cache;
    const std::string key = r.to_json().dump();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Polyline out = eval_uncached(r);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

namespace make {

namespace {
Recipe node(std::string op, nlohmann::ordered_json params, std::vector<Recipe> kids = {}) {
    Recipe r;
    r.op = std::move(op);
    r.params = std::move(params);
    r.children = std::move(kids);
    return r;
}
}  // namespace

Recipe star(int n, int span) { return node("star", {{"n", n}, {"span", span}}); }
Recipe comb(int k) { return node("comb", {{"k", k}}); }
Recipe pattern(int n, const std::vector<int>& p) { return node("pattern", {{"n", n}, {"pattern", p}}); }
Recipe double_polygon(int n, int p, int q, const Rat& h) {
    return node("double_polygon", {{"n", n}, {"p", p}, {"q", q}, {"h", format_rat(h)}});
}
Recipe neg_double_polygon(int n, int p, int q, const Rat& h) {
    return node("neg_double_polygon", {{"n", n}, {"p", p}, {"q", q}, {"h", format_rat(h)}});
}
Recipe fixture(const std::string& name) { return node("fixture", {{"name", name}}); }
Recipe subdivide(Recipe c, int p) { return node("subdivide", {{"p", p}}, {std::move(c)}); }
Recipe glue(Recipe a, Recipe b) { return node("glue", nlohmann::ordered_json::object(), {std::move(a), std::move(b)}); }
Recipe parallel_merge(Recipe c, int p) { return node("parallel_merge", {{"p", p}}, {std::move(c)}); }
Recipe lightning(Recipe c, int edge, int folds) { return node("lightning", {{"edge", edge}, {"folds", folds}}, {std::move(c)}); }
Recipe surgery(Recipe c, int i, int j) { return node("surgery", {{"i", i}, {"j", j}}, {std::move(c)}); }
Recipe cross_double(Recipe c) { return node("cross_double", nlohmann::ordered_json::object(), {std::move(c)}); }
Recipe theorem2(int k, int d) { return node("theorem2", {{"k", k}, {"d", d}}); }
Recipe claimed(int n, int k, const std::string& note) { return node("claimed", {{"n", n}, {"k", k}, {"note", note}}); }

}  // namespace make

}  // namespace polycross
