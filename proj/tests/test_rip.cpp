#include "doctest.h"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <sstream>

#include "ripcert/combinatorics.hpp"
#include "ripcert/graph.hpp"
#include "ripcert/rip.hpp"
#include "ripcert/spectral.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ripcert;
using namespace ripcert::testing;

namespace {

rip::SensingMatrix laplacian_factor(const graph::RegularGraph& g) {
    return rip::factor_laplacian(spectral::laplacian(g));
}

}  // namespace

TEST_CASE("sensing matrix validation") {
    CHECK_THROWS_AS(rip::SensingMatrix{Eigen::MatrixXd()}, ParameterError);
    Eigen::MatrixXd with_nan = Eigen::MatrixXd::Zero(2, 2);
    with_nan(0, 0) = std::nan("");
    CHECK_THROWS_AS(rip::SensingMatrix{with_nan}, ParameterError);
}

TEST_CASE("factor_laplacian reconstructs the Laplacian") {
    for (const auto& g : {make_cycle(6), make_petersen(), make_two_k4s(),
                          graph::gen_random_regular(12, 4, 13)}) {
        const auto l = spectral::laplacian(g);
        const auto m = rip::factor_laplacian(l);
        CHECK(m.rows() == g.vertex_count());
        CHECK(m.cols() == g.vertex_count());
        const double residual =
            (m.matrix().transpose() * m.matrix() - l.matrix()).cwiseAbs().maxCoeff();
        CHECK(residual <= 1e-10);
    }
}

TEST_CASE("factor_psd of the two-point Laplacian") {
    Eigen::MatrixXd k2(2, 2);
    k2 << 1.0, -1.0, -1.0, 1.0;
    const auto m = rip::factor_psd(k2);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.matrix());
    CHECK(svd.singularValues()(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(svd.singularValues()(1) <= 1e-12);
}

TEST_CASE("factor_psd clamps noise but rejects real negatives") {
    Eigen::MatrixXd tiny = Eigen::MatrixXd::Identity(2, 2);
    tiny(1, 1) = -1e-14;
    const auto m = rip::factor_psd(tiny);
    CHECK((m.matrix().transpose() * m.matrix() - Eigen::MatrixXd(tiny.cwiseMax(0.0)))
              .cwiseAbs()
              .maxCoeff() <= 1e-10);

    Eigen::MatrixXd negative = Eigen::MatrixXd::Identity(2, 2);
    negative(1, 1) = -1e-6;
    CHECK_THROWS_AS(rip::factor_psd(negative), NotPsdError);

    CHECK_THROWS_AS(rip::factor_psd(Eigen::MatrixXd::Zero(2, 3)), ParameterError);
}

TEST_CASE("ric_exact on an identity matrix") {
    const rip::SensingMatrix identity(Eigen::MatrixXd::Identity(5, 5));
    for (int k : {1, 3, 5}) {
        const auto estimate = rip::ric_exact(identity, k);
        CHECK(estimate.value <= 1e-12);
        CHECK(estimate.order == k);
        CHECK(estimate.kind == rip::RicKind::exact);
    }
}

namespace {

// All adjacent pairs of C6 tie exactly in real arithmetic, so the argmax
// lands on one of them up to last-bit rounding.
bool is_c6_adjacent_pair(const graph::VertexSet& s) {
    if (s.size() != 2) {
        return false;
    }
    const int u = s.members()[0];
    const int v = s.members()[1];
    return v == u + 1 || (u == 0 && v == 5);
}

}  // namespace

TEST_CASE("ric_exact on the C6 factor") {
    // Frozen from the mask oracle: adjacent-pair Gram eigenvalues {1/2, 3/2},
    // so delta_2 = 1 - sqrt(1/2) and the lower side wins over sqrt(3/2) - 1.
    const auto m = laplacian_factor(make_cycle(6));
    const auto estimate = rip::ric_exact(m, 2);
    CHECK(estimate.value == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
    CHECK(is_c6_adjacent_pair(estimate.witness_support));
    CHECK(estimate.witness_side == rip::WitnessSide::lower);
    CHECK(estimate.witness_sigma_min == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(estimate.witness_sigma_max == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
}

TEST_CASE("a zero column forces delta_1 = 1") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(0, 0) = 1.0;
    const auto estimate = rip::ric_exact(rip::SensingMatrix(m), 1);
    CHECK(estimate.value == doctest::Approx(1.0));
    CHECK(estimate.witness_support == graph::VertexSet::from_list({1}));
}

TEST_CASE("ric_exact refuses budgets it cannot honor") {
    const auto m = laplacian_factor(make_cycle(6));
    CHECK_THROWS_AS(rip::ric_exact(m, 3, /*budget=*/10), BudgetError);
    CHECK_THROWS_AS(rip::ric_exact(m, 0), ParameterError);
    CHECK_THROWS_AS(rip::ric_exact(m, 7), ParameterError);
}

TEST_CASE("ric_exact agrees with the mask oracle") {
    // Connected instances keep every submatrix comfortably nonsingular, so
    // the Gram-eigenvalue route and the SVD route agree to 1e-12.
    std::vector<graph::RegularGraph> graphs{make_cycle(6), make_petersen()};
    for (std::uint64_t seed : {31u, 32u}) {
        auto g = graph::gen_random_regular(10, 3, seed);
        REQUIRE(is_connected(g));
        graphs.push_back(std::move(g));
    }
    for (const auto& g : graphs) {
        const auto m = laplacian_factor(g);
        for (int k = 1; k <= 4; ++k) {
            const auto got = rip::ric_exact(m, k);
            CHECK(std::abs(got.value - oracle_ric(m.matrix(), k)) <= 1e-12);
        }
    }
}

TEST_CASE("ric_montecarlo never exceeds the exact constant") {
    Rng seeds(101);
    for (const auto& g : {make_petersen(), graph::gen_random_regular(12, 3, 41)}) {
        const auto m = laplacian_factor(g);
        for (int k : {2, 3}) {
            const auto exact = rip::ric_exact(m, k);
            for (int rep = 0; rep < 5; ++rep) {
                const auto sampled = rip::ric_montecarlo(m, k, 25, seeds.next_u64());
                CHECK(sampled.kind == rip::RicKind::lower_bound);
                CHECK(sampled.value <= exact.value + 1e-15);
            }
        }
    }
}

TEST_CASE("exhaustive sampling reproduces ric_exact") {
    const auto m = laplacian_factor(make_petersen());
    for (int k : {2, 3}) {
        const auto exact = rip::ric_exact(m, k);
        const auto swept = rip::ric_montecarlo(m, k, binomial(10, k), 0,
                                               rip::SupportSampler::exhaustive);
        CHECK(swept.value == exact.value);
        CHECK(swept.witness_support == exact.witness_support);
    }
}

TEST_CASE("ric_montecarlo is deterministic in the seed") {
    const auto m = laplacian_factor(make_petersen());
    const auto a = rip::ric_montecarlo(m, 3, 40, 99);
    const auto b = rip::ric_montecarlo(m, 3, 40, 99);
    CHECK(a.value == b.value);
    CHECK(a.witness_support == b.witness_support);
    CHECK_THROWS_AS(rip::ric_montecarlo(m, 3, 0, 99), ParameterError);
}

TEST_CASE("is_rip decisions") {
    const rip::SensingMatrix identity(Eigen::MatrixXd::Identity(6, 6));
    CHECK(rip::is_rip(identity, 3, 0.1).holds);

    const auto m = laplacian_factor(make_cycle(6));
    const auto reject = rip::is_rip(m, 2, 0.2);
    CHECK_FALSE(reject.holds);
    CHECK(is_c6_adjacent_pair(reject.estimate.witness_support));
    CHECK(rip::is_rip(m, 2, 0.3).holds);

    CHECK_THROWS_AS(rip::is_rip(m, 2, 0.0), ParameterError);
    CHECK_THROWS_AS(rip::is_rip(m, 2, 1.0), ParameterError);
}

TEST_CASE("is_rip_montecarlo reports violations but never certifies") {
    const auto m = laplacian_factor(make_cycle(6));
    const auto violated = rip::is_rip_montecarlo(m, 2, 0.2, 60, 7);
    CHECK(violated.verdict == rip::ScanVerdict::violated);
    CHECK(violated.estimate.value > 0.2);

    // delta_2 < 0.3, so no support can witness a violation at 0.3.
    const auto clean = rip::is_rip_montecarlo(m, 2, 0.3, 60, 7);
    CHECK(clean.verdict == rip::ScanVerdict::no_violation_found);
}

TEST_CASE("ric_of_support matches the exact witness") {
    const auto m = laplacian_factor(make_cycle(6));
    const auto single = rip::ric_of_support(m, graph::VertexSet::from_list({0, 1}));
    const auto exact = rip::ric_exact(m, 2);
    CHECK(single.value == doctest::Approx(exact.value).epsilon(1e-12));
    CHECK(single.witness_sigma_min == doctest::Approx(exact.witness_sigma_min).epsilon(1e-12));
    CHECK(single.kind == rip::RicKind::lower_bound);

    const auto rerun = rip::ric_of_support(m, exact.witness_support);
    CHECK(rerun.value == exact.value);

    CHECK_THROWS_AS(rip::ric_of_support(m, graph::VertexSet{}), ParameterError);
}

TEST_CASE("indicator identity on named graphs") {
    const auto c6 = make_cycle(6);
    const auto m = laplacian_factor(c6);

    auto [quotient, phi] = rip::indicator_identity_check(m, c6, graph::VertexSet::from_list({0}));
    CHECK(quotient == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(phi == doctest::Approx(1.0));

    std::tie(quotient, phi) =
        rip::indicator_identity_check(m, c6, graph::VertexSet::from_list({0, 1}));
    CHECK(quotient == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(phi == doctest::Approx(0.5));

    const auto g8 = make_two_k4s();
    std::tie(quotient, phi) = rip::indicator_identity_check(
        laplacian_factor(g8), g8, graph::VertexSet::from_list({0, 1, 2, 3}));
    CHECK(std::abs(quotient) <= 1e-9);
    CHECK(phi == 0.0);

    CHECK_THROWS_AS(rip::indicator_identity_check(m, make_petersen(),
                                                  graph::VertexSet::from_list({0})),
                    ParameterError);
    CHECK_THROWS_AS(
        rip::indicator_identity_check(m, c6, graph::VertexSet::from_list({0, 1, 2, 3})),
        ParameterError);
    CHECK_THROWS_AS(rip::indicator_identity_check(m, c6, graph::VertexSet{}), InvalidCutError);
}

TEST_CASE("delta_k is non-decreasing and equals the at-most-k maximum") {
    for (std::uint64_t seed : {51u, 52u}) {
        const auto m = laplacian_factor(graph::gen_random_regular(10, 3, seed));
        double running_max = 0.0;
        for (int k = 1; k <= 5; ++k) {
            const double delta_k = rip::ric_exact(m, k).value;
            CHECK(delta_k >= running_max - 1e-12);
            running_max = std::max(running_max, delta_k);
            CHECK(delta_k == doctest::Approx(running_max).epsilon(1e-12));
        }
    }
}

TEST_CASE("bridge identity over all small sets") {
    const auto g = make_petersen();
    const auto m = laplacian_factor(g);
    const int n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (2 * size > n) {
            continue;
        }
        std::vector<int> members;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1u) {
                members.push_back(v);
            }
        }
        const auto s = graph::VertexSet::from_sorted(std::move(members));
        const auto [quotient, phi] = rip::indicator_identity_check(m, g, s);
        CHECK(std::abs(quotient - phi) <= 1e-9);
    }
}

TEST_CASE("ric decomposes into sparse Rayleigh extremes") {
    for (std::uint64_t seed : {61u, 62u}) {
        auto g = graph::gen_random_regular(10, 3, seed);
        REQUIRE(is_connected(g));
        const auto l = spectral::laplacian(g);
        const auto m = rip::factor_laplacian(l);
        for (int k = 1; k <= 4; ++k) {
            const double lambda_min = spectral::sparse_lambda_exact(l, k).value;
            const double lambda_max = oracle_sparse_lambda_max(l.matrix(), k);
            const double expected = std::max(1.0 - std::sqrt(lambda_min),
                                             std::sqrt(lambda_max) - 1.0);
            CHECK(rip::ric_exact(m, k).value == doctest::Approx(expected).epsilon(1e-9));
            // sigma_min over supports is sqrt(lambda_min), so 1 - delta_k
            // can never exceed it.
            CHECK(1.0 - rip::ric_exact(m, k).value <= std::sqrt(lambda_min) + 1e-9);
        }
    }
}

TEST_CASE("ric is invariant under orthogonal left factors") {
    Rng rng(111);
    const auto m = laplacian_factor(make_petersen());
    Eigen::MatrixXd noise(10, 10);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            noise(i, j) = 2.0 * rng.next_unit() - 1.0;
        }
    }
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(noise).householderQ();
    const rip::SensingMatrix rotated(q * m.matrix());
    for (int k : {2, 3}) {
        CHECK(rip::ric_exact(rotated, k).value ==
              doctest::Approx(rip::ric_exact(m, k).value).epsilon(1e-9));
    }
}

TEST_CASE("matrix files round-trip bit-exactly") {
    Rng rng(121);
    Eigen::MatrixXd m(4, 6);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 6; ++j) {
            m(i, j) = (2.0 * rng.next_unit() - 1.0) * std::pow(10.0, double(j) - 3.0);
        }
    }
    std::stringstream buffer;
    rip::write_matrix(rip::SensingMatrix(m), buffer);
    const auto back = rip::read_matrix(buffer);
    CHECK(back.rows() == 4);
    CHECK(back.cols() == 6);
    CHECK((back.matrix().array() == m.array()).all());  // 17 digits reproduce doubles exactly

    std::stringstream bad_header("0 3\n");
    CHECK_THROWS_AS(rip::read_matrix(bad_header), ParseError);
    std::stringstream truncated("2 2\n1.0 2.0\n3.0\n");
    CHECK_THROWS_AS(rip::read_matrix(truncated), ParseError);
}
