#include "ripcert/rng.hpp"

#include <algorithm>

#include "ripcert/errors.hpp"

namespace ripcert {

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw ParameterError("Rng::next_below: bound must be positive");
    }
    // Reject draws from the tail so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

double Rng::next_unit_open() {
    double u;
    do {
        u = next_unit();
    } while (u == 0.0);
    return u;
}

std::vector<int> Rng::sample_combination(int n, int k) {
    if (k < 0 || k > n) {
        throw ParameterError("Rng::sample_combination: need 0 <= k <= n");
    }
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    for (int j = n - k; j < n; ++j) {
        const int t = static_cast<int>(next_below(static_cast<std::uint64_t>(j) + 1));
        if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) {
            chosen.push_back(j);
        } else {
            chosen.push_back(t);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace ripcert
