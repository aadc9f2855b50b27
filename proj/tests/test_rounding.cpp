#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>

#include "ripcert/graph.hpp"
#include "ripcert/rounding.hpp"
#include "ripcert/spectral.hpp"
#include "test_support.hpp"

using namespace ripcert;
using namespace ripcert::testing;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> entries) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (double e : entries) {
        x(i++) = e;
    }
    return x;
}

}  // namespace

TEST_CASE("normalize_for_rounding") {
    CHECK(rounding::normalize_for_rounding(vec({-2.0, 0.0, 1.0})).isApprox(vec({1.0, 0.0, 0.5})));
    CHECK(rounding::normalize_for_rounding(vec({0.0, 1.0, 0.0})) == vec({0.0, 1.0, 0.0}));
    CHECK(rounding::normalize_for_rounding(vec({0.3, 0.3})) == vec({1.0, 1.0}));
    CHECK_THROWS_AS(rounding::normalize_for_rounding(vec({0.0, 0.0})), ParameterError);
}

TEST_CASE("threshold_set") {
    const auto x = rounding::normalize_for_rounding(vec({1.0, 0.5, 0.0, 0.0, 0.0, 0.0}));
    CHECK(rounding::threshold_set(x, 0.7) == graph::VertexSet::from_list({0}));
    CHECK(rounding::threshold_set(x, 0.5) == graph::VertexSet::from_list({0, 1}));
    CHECK(rounding::threshold_set(x, 1.0) == graph::VertexSet::from_list({0}));
    // As t falls to the smallest positive entry the set reaches the support.
    CHECK(rounding::threshold_set(x, 1e-300) == graph::VertexSet::from_list({0, 1}));

    CHECK_THROWS_AS(rounding::threshold_set(x, 0.0), ParameterError);
    CHECK_THROWS_AS(rounding::threshold_set(x, 1.5), ParameterError);
    CHECK_THROWS_AS(rounding::threshold_set(vec({0.5, 0.2}), 0.5), ParameterError);
}

TEST_CASE("sweep_cut on the indicator of an adjacent pair") {
    const auto c6 = make_cycle(6);
    const auto result = rounding::sweep_cut(c6, vec({1.0, 1.0, 0.0, 0.0, 0.0, 0.0}));
    CHECK(result.thresholds_tried == 1);
    CHECK(result.best.set == graph::VertexSet::from_list({0, 1}));
    CHECK(result.best.expansion == doctest::Approx(0.5));
    CHECK(result.lambda_in == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(result.guarantee_applies);
    CHECK(result.best.expansion <= result.bound + 1e-9);
}

TEST_CASE("sweep_cut on a two-level vector") {
    // Frozen by hand-evaluating both thresholds and the edge form:
    // lambda = 0.6, bound = sqrt(0.84), S_1 = {0} with phi = 1,
    // S_0.5 = {0, 1} with phi = 0.5.
    const auto c6 = make_cycle(6);
    const auto result = rounding::sweep_cut(c6, vec({1.0, 0.5, 0.0, 0.0, 0.0, 0.0}));
    CHECK(result.lambda_in == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(result.bound == doctest::Approx(0.91651513899116799).epsilon(1e-12));
    CHECK(result.thresholds_tried == 2);
    CHECK(result.best.set == graph::VertexSet::from_list({0, 1}));
    CHECK(result.best.expansion == doctest::Approx(0.5));
}

TEST_CASE("sweep_cut with a zero-Rayleigh component indicator") {
    const auto g = make_two_k4s();
    const auto result = rounding::sweep_cut(g, vec({1, 1, 1, 1, 0, 0, 0, 0}));
    CHECK(result.lambda_in == 0.0);
    CHECK(result.bound == 0.0);
    CHECK(result.best.expansion == 0.0);

    CHECK_THROWS_AS(rounding::sweep_cut(g, Eigen::VectorXd::Zero(8)), ParameterError);
}

TEST_CASE("sweep_cut flags dense inputs") {
    const auto c6 = make_cycle(6);
    const auto result = rounding::sweep_cut(c6, vec({1.0, 0.9, 0.8, 0.7, 0.0, 0.0}));
    CHECK_FALSE(result.guarantee_applies);  // support is 4 > 6/2
    CHECK(result.best.set.size() <= 4);
}

TEST_CASE("randomized_threshold membership probabilities") {
    const auto x = vec({1.0, 0.5, 0.0});
    int hits_half = 0;
    const int trials = 100000;
    for (int seed = 0; seed < trials; ++seed) {
        const auto s = rounding::randomized_threshold(x, static_cast<std::uint64_t>(seed));
        CHECK(s.contains(0));        // entry 1 is always above t in (0, 1)
        CHECK_FALSE(s.contains(2));  // zero entries never enter
        hits_half += s.contains(1) ? 1 : 0;
    }
    // Pr(i in S_t) = x_i^2 = 0.25 under the 2t density.
    const double freq = static_cast<double>(hits_half) / trials;
    CHECK(freq == doctest::Approx(0.25).epsilon(0.04));
    CHECK(std::abs(freq - 0.25) <= 0.01);
}

TEST_CASE("expected_cut_stats closed forms") {
    const auto c6 = make_cycle(6);
    auto stats = rounding::expected_cut_stats(c6, vec({1, 1, 0, 0, 0, 0}));
    CHECK(stats.exp_size == doctest::Approx(2.0));
    CHECK(stats.exp_boundary == doctest::Approx(2.0));

    stats = rounding::expected_cut_stats(c6, Eigen::VectorXd::Ones(6));
    CHECK(stats.exp_size == doctest::Approx(6.0));
    CHECK(stats.exp_boundary == 0.0);

    const auto k4 = make_complete(4);
    stats = rounding::expected_cut_stats(k4, vec({1, 0, 0, 0}));
    CHECK(stats.exp_size == doctest::Approx(1.0));
    CHECK(stats.exp_boundary == doctest::Approx(3.0));
}

TEST_CASE("expectation identities on random instances") {
    Rng rng(71);
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const auto g = graph::gen_random_regular(10, 3, seed);
        for (int trial = 0; trial < 10; ++trial) {
            const int support = 1 + static_cast<int>(rng.next_below(5));
            const auto x =
                rounding::normalize_for_rounding(random_sparse_vector(10, support, rng));

            double sum_plus = 0.0;
            double sum_diff = 0.0;
            for (const auto& [u, v] : g.edges()) {
                sum_plus += (x(u) + x(v)) * (x(u) + x(v));
                sum_diff += (x(u) - x(v)) * (x(u) - x(v));
            }
            const double denom = static_cast<double>(g.degree()) * x.squaredNorm();

            // Conservation: the normalized plus- and minus-forms sum to 2.
            CHECK(std::abs((sum_plus + sum_diff) / denom - 2.0) <= 1e-10);

            // Cauchy-Schwarz bound on the expected boundary.
            const auto stats = rounding::expected_cut_stats(g, x);
            CHECK(stats.exp_boundary <= std::sqrt(sum_plus) * std::sqrt(sum_diff) + 1e-12);

            // The swept minimum cannot exceed the ratio of expectations.
            if (stats.exp_boundary > 0.0) {
                const auto sweep = rounding::sweep_cut(g, x);
                const double ratio =
                    stats.exp_boundary / (static_cast<double>(g.degree()) * stats.exp_size);
                CHECK(sweep.best.expansion <= ratio + 1e-12);
            }
        }
    }
}

TEST_CASE("sweep guarantee holds on random sparse vectors") {
    Rng rng(2024);
    int cases = 0;
    while (cases < 3000) {
        const int n = 8 + 2 * static_cast<int>(rng.next_below(4));  // 8..14 even
        const int d = 3 + static_cast<int>(rng.next_below(2));
        if (n * d % 2 != 0) {
            continue;
        }
        const auto g = graph::gen_random_regular(n, d, rng.next_u64());
        for (int rep = 0; rep < 10; ++rep) {
            const int support = 1 + static_cast<int>(rng.next_below(
                                        static_cast<std::uint64_t>(n / 2)));
            const auto x = random_sparse_vector(n, support, rng);
            const auto result = rounding::sweep_cut(g, x);
            REQUIRE(result.guarantee_applies);
            CHECK(result.best.expansion <= result.bound + 1e-9);
            CHECK(result.best.set.size() <= support);
            ++cases;
        }
    }
}

TEST_CASE("sampled cut statistics converge to the closed forms") {
    const auto g = graph::gen_random_regular(12, 3, 77);
    Rng rng(78);
    const auto x = rounding::normalize_for_rounding(random_sparse_vector(12, 5, rng));
    const auto expected = rounding::expected_cut_stats(g, x);

    const int trials = 20000;
    double sum_size = 0.0, sum_size_sq = 0.0;
    double sum_boundary = 0.0, sum_boundary_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto s = rounding::randomized_threshold(x, 1000 + static_cast<std::uint64_t>(t));
        const double size = static_cast<double>(s.size());
        double boundary = 0.0;
        for (const auto& [u, v] : g.edges()) {
            boundary += s.contains(u) != s.contains(v) ? 1.0 : 0.0;
        }
        sum_size += size;
        sum_size_sq += size * size;
        sum_boundary += boundary;
        sum_boundary_sq += boundary * boundary;
    }
    const auto check_within_3se = [&](double sum, double sum_sq, double want) {
        const double mean = sum / trials;
        const double var = std::max(sum_sq / trials - mean * mean, 0.0);
        const double se = std::sqrt(var / trials);
        CHECK(std::abs(mean - want) <= 3.0 * se + 1e-9);
    };
    check_within_3se(sum_size, sum_size_sq, expected.exp_size);
    check_within_3se(sum_boundary, sum_boundary_sq, expected.exp_boundary);
}
