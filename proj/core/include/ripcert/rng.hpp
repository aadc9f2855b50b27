#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ripcert {

// Seeded random stream. All draws are built on the standardized
// mt19937_64 output sequence, so identical seeds reproduce identical
// results on every platform; std::uniform_int_distribution is avoided
// because its mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in (0, 1); the zero draw is rejected.
    double next_unit_open();

    // Fisher-Yates shuffle driven by this stream.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[next_below(i)]);
        }
    }

    // Sorted uniform random k-subset of {0, ..., n-1} (Floyd's algorithm).
    std::vector<int> sample_combination(int n, int k);

private:
    std::mt19937_64 engine_;
};

}  // namespace ripcert
