// The (n,k) feasibility oracle.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycross/recipe.hpp"

namespace polycross {

enum class RuleId { ParityLemma, TooFewEdges, NMinus3Lemma, Lemma62, NMinus4Lemma, ExhaustiveSearchFact };

const char* rule_name(RuleId r);
// Human-readable justification, e.g. "n and k are both odd".
std::string rule_reason(RuleId r);

struct Verdict {
    enum class Status { Feasible, Infeasible, Unknown };
    Status status = Status::Unknown;
    int n = 0, k = 0;
    std::optional<RuleId> rule;     // Infeasible
    std::optional<Recipe> recipe;   // Feasible
    std::string source;             // which dispatch entry produced the verdict

    bool feasible() const { return status == Status::Feasible; }
    bool evaluable() const { return recipe && recipe->evaluable(); }
    std::string describe() const;
    nlohmann::ordered_json to_json() const;
};

// First infeasibility rule that fires, if any.
std::optional<RuleId> infeasibility_rule(int n, int k);

// Memoized and thread-safe.
Verdict decide(int n, int k);

// Evaluates and re-verifies the witness. Throws ConstructionError when the
// verdict is not Feasible, has no coordinates, or fails verification.
Polyline witness(int n, int k);

// Composition of star polylines along a bounded coprime decomposition, when n is in range.
std::optional<Recipe> theorem1_recipe(int n, int k);

struct SetResult {
    std::vector<int> feasible;
    std::vector<int> infeasible;
    std::vector<int> unknown;
    std::vector<int> claimed;  // feasible entries without an evaluable witness
};

// n in [3, n_max] with decide(n,k) Feasible.
SetResult compute_C(int k, int n_max);
// k in [1, n] with decide(n,k) Feasible.
SetResult compute_B(int n);

}  // namespace polycross
