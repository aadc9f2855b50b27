#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace ripcert {

// C(n, k), saturating at `cap` instead of overflowing.
std::uint64_t binomial(int n, int k,
                       std::uint64_t cap = std::numeric_limits<std::uint64_t>::max());

// Visits every k-subset of {0, ..., n-1} in lexicographic order.
// `visit` receives the current combination and returns false to stop early.
template <typename Visitor>
void for_each_combination(int n, int k, Visitor&& visit) {
    if (k < 0 || k > n) {
        return;
    }
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        comb[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        if (!visit(std::span<const int>(comb))) {
            return;
        }
        // Advance the rightmost index that still has room.
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace ripcert
