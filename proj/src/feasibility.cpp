#include "polycross/feasibility.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "polycross/numtheory.hpp"

namespace polycross {

const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::ParityLemma: return "ParityLemma";
        case RuleId::TooFewEdges: return "TooFewEdges";
        case RuleId::NMinus3Lemma: return "NMinus3Lemma";
        case RuleId::Lemma62: return "Lemma62";
        case RuleId::NMinus4Lemma: return "NMinus4Lemma";
        case RuleId::ExhaustiveSearchFact: return "ExhaustiveSearchFact";
    }
    return "?";
}

std::string rule_reason(RuleId r) {
    switch (r) {
        case RuleId::ParityLemma: return "parity: n and k are both odd";
        case RuleId::TooFewEdges: return "too few edges: k >= n-2";
        case RuleId::NMinus3Lemma: return "k = n-3 requires odd n";
        case RuleId::Lemma62: return "no polyline of type <6|2> exists";
        case RuleId::NMinus4Lemma: return "k = n-4 requires n divisible by 4";
        case RuleId::ExhaustiveSearchFact: return "exhaustive-search fact";
    }
    return "?";
}

std::string Verdict::describe() const {
    switch (status) {
        case Status::Feasible:
            if (!evaluable()) return "Feasible (claimed, witness withheld)";
            return "Feasible: " + recipe->str();
        case Status::Infeasible: return "Infeasible (" + rule_reason(*rule) + ")";
        case Status::Unknown: return "Unknown (open problem)";
    }
    return "?";
}

nlohmann::ordered_json Verdict::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["status"] = status == Status::Feasible ? "Feasible" : status == Status::Infeasible ? "Infeasible" : "Unknown";
    if (rule) doc["rule"] = rule_name(*rule);
    if (recipe) doc["recipe"] = recipe->to_json();
    if (!source.empty()) doc["source"] = source;
    return doc;
}

std::optional<RuleId> infeasibility_rule(int n, int k) {
    if (n % 2 == 1 && k % 2 == 1) return RuleId::ParityLemma;
    if (k >= n - 2) return RuleId::TooFewEdges;
    if (k == n - 3 && n % 2 == 0) return RuleId::NMinus3Lemma;
    if (n == 6 && k == 2) return RuleId::Lemma62;
    if (k == n - 4 && n % 4 != 0) return RuleId::NMinus4Lemma;
    if ((n == 8 && k == 3) || (n == 9 && k == 4)) return RuleId::ExhaustiveSearchFact;
    return std::nullopt;
}

namespace {

namespace mk = make;

struct Found {
    Recipe recipe;
    std::string source;
};

// Evaluable recipe for a feasible sub-type, used inside compositions.
std::optional<Recipe> sub(int n, int k) {
    if (n < 3 || k < 0) return std::nullopt;
    Verdict v = decide(n, k);
    if (!v.feasible() || !v.evaluable()) return std::nullopt;
    return v.recipe;
}

std::optional<Found> from_fixture(int n, int k) {
    for (const auto& f : fixture_catalogue())
        if (f.type.n == n && f.type.k == k) return Found{mk::fixture(f.name), "fixture " + f.name};
    return std::nullopt;
}

struct Homothety {
    bool neg;
    int n, p;
    Rat h;
    int k;
};

const std::vector<Homothety>& homotheties() {
    static const std::vector<Homothety> table = {
        {false, 7, 2, Rat(3, 2), 5},   {false, 7, 3, Rat(5, 2), 9},    {true, 7, 1, Rat(6), 6},
        {true, 9, 2, Rat(2), 6},       {true, 7, 1, Rat(3, 2), 8},     {false, 21, 4, Rat(13, 10), 11},
        {true, 21, 4, Rat(3, 2), 22},  {false, 21, 4, Rat(6, 5), 13},  {false, 21, 5, Rat(6, 5), 17},
        {false, 21, 8, Rat(15), 25},   {false, 21, 8, Rat(11, 10), 29}, {false, 21, 10, Rat(2), 37},
        {true, 21, 2, Rat(3), 30},     {true, 21, 1, Rat(10), 34},
    };
    return table;
}

Recipe homothety_recipe(const Homothety& h) {
    return h.neg ? mk::neg_double_polygon(h.n, h.p, h.p, h.h) : mk::double_polygon(h.n, h.p, h.p, h.h);
}

std::optional<Found> closed_form(int n, int k) {
    if (k == 0) return Found{mk::star(n, 1), "convex polygon"};
    if (k % 2 == 0 && std::gcd(n, k / 2 + 1) == 1 && n >= k + 3) return Found{mk::star(n, k / 2 + 1), "star polygon"};
    if (k % 2 == 0 && n == 2 * k + 4) return Found{mk::comb(k / 2), "comb construction"};
    if (k == 5 && n % 4 == 2 && n >= 10) return Found{mk::cross_double(mk::star(n / 2, 2)), "crossed doubling of a star"};
    if (n == 12 && k == 6) return Found{mk::pattern(12, {4, 4, 7}), "additive pattern"};
    if (n == 21 && k == 12) return Found{mk::pattern(21, {7, 7, 13}), "additive pattern"};
    for (const auto& h : homotheties())
        if (2 * h.n == n && h.k == k) return Found{homothety_recipe(h), "homothetic double polygon"};
    if (n % 2 == 0) {
        int m = n / 2, p = (k + 2) / 2, q = (k + 1) / 2;
        if (m >= 3 && 4 * p <= m + 1 && std::gcd(m, k + 1) == 1)
            return Found{mk::double_polygon(m, p, q, Rat(m)), "double polygon"};
        if (m >= 2 * k + 3 && std::gcd(m, k + 1) == 1) return Found{mk::subdivide(mk::star(m, k + 1), 2), "subdivided star"};
    }
    return std::nullopt;
}

std::optional<Found> table_entry(int n, int k) {
    auto g = [](std::optional<Recipe> a, std::optional<Recipe> b, const std::string& src) -> std::optional<Found> {
        if (a && b) return Found{mk::glue(*a, *b), src};
        return std::nullopt;
    };
    switch (k) {
        case 1:
            if (n % 4 == 0 && n >= 12) return g(mk::fixture("C1_n6"), sub(n - 6, 1), "index-one table");
            break;
        case 2:
            if (n % 2 == 0 && n >= 10) {
                int h = n / 2;
                if (h % 2 == 1) return g(mk::star(h, 2), mk::star(h, 2), "index-two table");
                return g(mk::star(h - 1, 2), mk::star(h + 1, 2), "index-two table");
            }
            break;
        case 3:
            if (n == 20) return Found{mk::surgery(mk::fixture("Z14_3"), fixture_edge("Z14_3", 'B', 'A'), fixture_edge("Z14_3", 'D', 'E')), "index-three table"};
            if (n == 22) return Found{mk::surgery(mk::fixture("Z16_3"), fixture_edge("Z16_3", 'K', 'L'), fixture_edge("Z16_3", 'A', 'Q')), "index-three table"};
            if (n % 2 == 0 && n >= 24) return g(mk::fixture("Z10_3"), sub(n - 10, 3), "index-three table");
            break;
        case 4:
            if (n % 3 == 0 && n >= 15) return Found{mk::lightning(mk::star(n - 8, 3), 0, 5), "index-four table"};
            break;
        case 5:
            if (n % 4 == 0 && n >= 20) return g(mk::cross_double(mk::star(5, 2)), sub(n - 10, 5), "index-five table");
            break;
        case 6:
            if (n == 14) return Found{mk::neg_double_polygon(7, 1, 1, Rat(6)), "index-six table"};
            if (n % 2 == 1 && n >= 9) return Found{mk::star(n, 4), "index-six table"};
            if (n % 2 == 0 && n >= 18) return g(mk::star(9, 4), mk::star(n - 9, 4), "index-six table");
            break;
        default: break;
    }
    if (n == 42) {
        const std::string src = "42-edge table";
        switch (k) {
            case 2: return g(mk::star(21, 2), mk::star(21, 2), src);
            case 5: {
                Recipe p = mk::double_polygon(7, 2, 2, Rat(3, 2));
                return Found{mk::glue(mk::glue(p, p), p), src};
            }
            case 6: return Found{mk::parallel_merge(mk::glue(mk::star(7, 2), mk::star(7, 2)), 3), src};
            case 7: return Found{mk::parallel_merge(mk::fixture("C1_n6"), 7), src};
            case 10: return g(mk::star(19, 6), mk::star(23, 6), src);
            case 12: return Found{mk::parallel_merge(mk::star(7, 2), 6), src};
            case 14: return g(mk::star(17, 8), mk::star(25, 8), src);
            case 15: return Found{mk::parallel_merge(mk::double_polygon(7, 2, 2, Rat(3, 2)), 3), src};
            case 16: return Found{mk::parallel_merge(mk::star(21, 5), 2), src};
            case 18: return g(mk::star(21, 10), mk::star(21, 10), src);
            case 21: return Found{mk::parallel_merge(mk::fixture("Z14_7"), 3), src};
            case 27: return Found{mk::parallel_merge(mk::double_polygon(7, 3, 3, Rat(5, 2)), 3), src};
            case 28: return Found{mk::parallel_merge(mk::star(21, 8), 2), src};
            case 23:
            case 26:
            case 31:
            case 33:
            case 35: return Found{mk::claimed(42, k, "claimed, witness withheld by the source"), src};
            default: break;
        }
    }
    return std::nullopt;
}

std::optional<Found> theorem2_entry(int n, int k) {
    if (k >= 2 && k % 2 == 0 && n >= 2 * k + 3) {
        if (n == 2 * k + 3 || n == 2 * k + 5) return Found{mk::star(n, k / 2 + 1), "even-index range"};
        if (n == 2 * k + 4) return Found{mk::comb(k / 2), "even-index range"};
        return Found{mk::theorem2(k, n - 2 * k - 3), "even-index range"};
    }
    if (k % 2 == 1 && n % 2 == 0 && n >= 8 * k + 6) {
        if (auto r = sub(n / 2, 2 * k)) return Found{mk::subdivide(*r, 2), "odd-index range"};
    }
    return std::nullopt;
}

// Type-level closure over the generic operations, for n up to kClosureLimit.
constexpr int kClosureLimit = 128;

std::optional<Found> closure(int n, int k) {
    if (n > kClosureLimit) return std::nullopt;
    const std::string src = "composition";
    for (int p = 2; p <= n / 3; ++p)
        if (n % p == 0)
            if (auto r = sub(n / p, p * k)) return Found{mk::subdivide(*r, p), src};
    for (int p = 2; p <= k && p <= n / 3; ++p)
        if (n % p == 0 && k % p == 0)
            if (auto r = sub(n / p, k / p)) return Found{mk::parallel_merge(*r, p), src};
    if (n % 4 == 2 && k % 2 == 1)
        if (auto r = sub(n / 2, (k - 1) / 2)) return Found{mk::cross_double(*r), src};
    if (k >= 2) {
        int grow = k % 2 == 0 ? 2 * k : 4 * k;
        int folds = k % 2 == 0 ? k + 1 : 2 * k + 1;
        if (auto r = sub(n - grow, k)) return Found{mk::lightning(*r, -1, folds), src};
    }
    for (int m = k + 3; 2 * m <= n; ++m) {
        auto a = sub(m, k);
        if (!a) continue;
        if (auto b = sub(n - m, k)) return Found{mk::glue(*a, *b), src};
    }
    return std::nullopt;
}

Verdict compute_verdict(int n, int k) {
    Verdict v;
    v.n = n;
    v.k = k;
    if (auto rule = infeasibility_rule(n, k)) {
        v.status = Verdict::Status::Infeasible;
        v.rule = rule;
        return v;
    }
    std::optional<Found> f = from_fixture(n, k);
    if (!f) f = closed_form(n, k);
    if (!f) f = table_entry(n, k);
    if (!f) f = theorem2_entry(n, k);
    if (!f)
        if (auto r = theorem1_recipe(n, k)) f = Found{*r, "star composition"};
    if (!f) f = closure(n, k);
    if (f) {
        v.status = Verdict::Status::Feasible;
        v.recipe = f->recipe;
        v.source = f->source;
    }
    return v;
}

}  // namespace

std::optional<Recipe> theorem1_recipe(int n, int k) {
    if (k < 1 || infeasibility_rule(n, k)) return std::nullopt;
    std::vector<Recipe> parts;
    if (k % 2 == 1) {
        if (n % 2 != 0 || n < 20 * (k + 1)) return std::nullopt;
        for (int x : coprime_sum_bounded(n / 2, 2 * (k + 1)).summands) parts.push_back(mk::subdivide(mk::star(x, k + 1), 2));
    } else {
        if (n < 5 * (k + 2)) return std::nullopt;
        for (int x : coprime_sum_bounded(n, k + 2).summands) parts.push_back(mk::star(x, k / 2 + 1));
    }
    Recipe r = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) r = mk::glue(r, parts[i]);
    return r;
}

Verdict decide(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Verdict> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({n, k});
        if (it != memo.end()) return it->second;
    }
    Verdict v;
    if (n < 3 || k < 0) {
        v.n = n;
        v.k = k;
        v.status = Verdict::Status::Infeasible;
        v.rule = RuleId::TooFewEdges;
    } else {
        v = compute_verdict(n, k);
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(n, k), v);
    return v;
}

Polyline witness(int n, int k) {
    Verdict v = decide(n, k);
    if (!v.feasible()) throw ConstructionError("no witness: " + type_string({n, k}) + " is " + v.describe());
    if (!v.evaluable()) throw ConstructionError("no witness: " + type_string({n, k}) + " is claimed without coordinates");
    Polyline L = evaluate(*v.recipe);
    VerifyReport rep = verify_type(L, n, k);
    if (!rep.pass) throw ConstructionError("witness for " + type_string({n, k}) + " failed verification: " + rep.message);
    return L;
}

namespace {

void file(SetResult& out, int x, const Verdict& v) {
    switch (v.status) {
        case Verdict::Status::Feasible:
            out.feasible.push_back(x);
            if (!v.evaluable()) out.claimed.push_back(x);
            break;
        case Verdict::Status::Infeasible: out.infeasible.push_back(x); break;
        case Verdict::Status::Unknown: out.unknown.push_back(x); break;
    }
}

}  // namespace

SetResult compute_C(int k, int n_max) {
    SetResult out;
    for (int n = 3; n <= n_max; ++n) file(out, n, decide(n, k));
    return out;
}

SetResult compute_B(int n) {
    SetResult out;
    for (int k = 1; k <= n; ++k) file(out, k, decide(n, k));
    return out;
}

}  // namespace polycross
