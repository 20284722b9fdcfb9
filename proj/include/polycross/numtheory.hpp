// Decompositions of an integer into a few summands coprime with a modulus.
#pragma once

#include <vector>

namespace polycross {

struct Decomposition {
    std::vector<int> summands;  // ascending
    int modulus = 1;
};

// Fewest summands first, then the lexicographically smallest ascending list.
// Preconditions: t >= 1, s >= t (t odd) or s >= 2t (t even); throws std::invalid_argument otherwise.
Decomposition coprime_sum(int s, int t);

// Like coprime_sum with every summand >= t.
// Preconditions: s >= 3t (t odd) or s >= 5t (t even).
Decomposition coprime_sum_bounded(int s, int t);

bool coprime_sum_valid(const Decomposition& d, int s, int min_summand = 1);

}  // namespace polycross
