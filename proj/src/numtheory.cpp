#include "polycross/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polycross {

namespace {

bool cop(int a, int t) { return a > 0 && std::gcd(a, t) == 1; }

std::string pair_str(int s, int t) { return "(s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")"; }

}  // namespace

bool coprime_sum_valid(const Decomposition& d, int s, int min_summand) {
    long total = 0;
    for (int x : d.summands) {
        if (x < min_summand || !cop(x, d.modulus)) return false;
        total += x;
    }
    std::size_t cap = d.modulus % 2 == 1 ? 2 : 3;
    return total == s && !d.summands.empty() && d.summands.size() <= cap;
}

Decomposition coprime_sum(int s, int t) {
    if (t < 1) throw std::invalid_argument("coprime_sum needs t >= 1");
    if (t % 2 == 1 ? s < t : s < 2 * t) throw std::invalid_argument("coprime_sum precondition fails for " + pair_str(s, t));
    Decomposition d;
    d.modulus = t;
    if (cop(s, t)) {
        d.summands = {s};
        return d;
    }
    for (int a = 1; 2 * a <= s; ++a)
        if (cop(a, t) && cop(s - a, t)) {
            d.summands = {a, s - a};
            return d;
        }
    for (int a = 1; 3 * a <= s; ++a) {
        if (!cop(a, t)) continue;
        for (int b = a; a + 2 * b <= s; ++b)
            if (cop(b, t) && cop(s - a - b, t)) {
                d.summands = {a, b, s - a - b};
                return d;
            }
    }
    throw std::logic_error("coprime_sum found no decomposition for " + pair_str(s, t));
}

Decomposition coprime_sum_bounded(int s, int t) {
    if (t < 1) throw std::invalid_argument("coprime_sum_bounded needs t >= 1");
    if (t % 2 == 1 ? s < 3 * t : s < 5 * t)
        throw std::invalid_argument("coprime_sum_bounded precondition fails for " + pair_str(s, t));
    Decomposition d = coprime_sum(s, t);
    auto& v = d.summands;
    // Shifting t from the largest summand to the smallest keeps both residues mod t.
    for (int guard = 0; guard < 4 * static_cast<int>(v.size()) + 4; ++guard) {
        std::sort(v.begin(), v.end());
        if (v.front() >= t) break;
        if (v.back() - t < 1) break;
        v.front() += t;
        v.back() -= t;
    }
    std::sort(v.begin(), v.end());
    if (!coprime_sum_valid(d, s, t)) throw std::logic_error("coprime_sum_bounded rebalancing failed for " + pair_str(s, t));
    return d;
}

}  // namespace polycross
