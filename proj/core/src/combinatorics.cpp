#include "ripcert/combinatorics.hpp"

namespace ripcert {

std::uint64_t binomial(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // Multiply before dividing; the running value after step i is C(n-k+i, i),
    // an integer, so the division is always exact.
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (result > cap / factor) {
            return cap;
        }
        result = result * factor / static_cast<std::uint64_t>(i);
        if (result >= cap) {
            return cap;
        }
    }
    return result;
}

}  // namespace ripcert
