#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ripcert/graph.hpp"
#include "ripcert/rip.hpp"
#include "ripcert/spectral.hpp"

namespace ripcert::pipeline {

// Comparison tolerance shared by the chain and bridge checks.
inline constexpr double kChainTol = 1e-9;

// Parameter bundle for the expansion -> isometry reduction. For eps in
// (0, 1): delta = eps^0.4, beta = eps^(4/eps), alpha = beta/C, q = 1/alpha,
// gamma = eps^(4/eps + 2), k = floor(beta * n). beta underflows to zero for
// eps below roughly 0.05; log10_beta stays finite and is reported alongside.
struct ReductionParams {
    double eps = 0.0;
    double C = 1.0;
    double delta = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    double q = 0.0;
    double gamma = 0.0;
    int k = 0;
    double log10_beta = 0.0;
    double eq2_bound = 0.0;        // beta^(eps/4); equals eps in exact arithmetic
    double gamma_over_beta = 0.0;  // equals eps^2 in exact arithmetic
    bool eq2_check = false;        // eq2_bound + gamma/beta <= eps + eps^2 (sanity, not asserted)
};

ReductionParams derive_params(double eps, double C, int n);

// Sensing matrix M with M'M equal to the normalized Laplacian of g.
rip::SensingMatrix reduce(const graph::RegularGraph& g);

// Planted-cut experiment: a set of size s with expansion c/(d*s) <= eps
// must certify, through its indicator vector, that the reduced matrix is
// far from an order-s isometry.
struct Case1Report {
    int n = 0, d = 0, s = 0, c = 0;
    std::uint64_t seed = 0;
    ReductionParams params;
    graph::CutReport planted;
    double ratio = 0.0;     // ||M x_S|| / ||x_S||
    double sqrt_phi = 0.0;  // sqrt(expansion of the planted set)
    double sigma_min_planted = 0.0;
    bool bridge_identity_holds = false;  // |ratio^2 - phi| <= kChainTol
    bool ratio_below_sqrt_eps = false;
    // sigma_min < delta: witnesses that M is not (s, 1-delta)-RIP.
    bool violates_one_minus_delta_rip = false;
    // sigma_min < 1 - delta: witnesses that M is not (s, delta)-RIP.
    bool violates_delta_rip = false;
    bool passed = false;
};

Case1Report gap_experiment_case1(int n, int d, int s, int c, double eps, double C,
                                 std::uint64_t seed);

// Exact-enumeration experiment: when every small set expands (phi_k close
// to 1), the reduced matrix must be an order-k near-isometry. The chain
// lambda_k <= phi_k <= sqrt(lambda_k (2 - lambda_k)) and its contrapositive
// lambda_k >= 1 - sqrt(1 - phi_k^2) are checked unconditionally.
struct Case2Report {
    int n = 0, d = 0, k = 0;
    std::uint64_t seed = 0;
    bool seeded = false;  // false when run on a caller-provided graph
    ReductionParams params;
    graph::CutReport phi_witness;
    double phi_k = 0.0;
    spectral::SparseRayleighResult lambda;
    double lambda_k = 0.0;
    rip::RicEstimate ric;
    double delta_k = 0.0;
    bool premise_holds = false;                // phi_k >= 1 - eps
    std::optional<bool> rip_confirmed;         // delta_k <= eps^0.4, when premise holds
    double chain_upper = 0.0;                  // sqrt(lambda_k (2 - lambda_k))
    bool chain_holds = false;
    double contrapositive_lower = 0.0;         // 1 - sqrt(1 - phi_k^2)
    bool contrapositive_holds = false;
    bool passed = false;
};

Case2Report gap_experiment_case2(int n, int d, int k, double eps, std::uint64_t seed);
Case2Report gap_experiment_case2_on(const graph::RegularGraph& g, int k, double eps);

// Which sparsity orders verify_cheeger_suite exercises per instance.
enum class KRule { quarter, half, both };

struct SuiteConfig {
    int count = 0;
    int n_min = 0;
    int n_max = 0;
    std::vector<int> degrees;
    KRule k_rule = KRule::both;
    std::uint64_t seed = 0;
};

// One (graph, k) chain check inside the suite.
struct SuiteCheck {
    int instance = 0;
    int n = 0, d = 0, k = 0;
    std::uint64_t graph_seed = 0;
    double lambda_k = 0.0;
    double phi_k = 0.0;
    double upper = 0.0;            // sqrt(lambda_k (2 - lambda_k))
    double sweep_expansion = 0.0;  // sweep cut of the lambda_k witness
    bool chain_ok = false;
    bool sweep_ok = false;
    bool tightness_ok = false;  // upper <= sqrt(2 lambda_k)
    bool pass = false;
};

struct SuiteSummary {
    SuiteConfig config;
    int instances = 0;
    int checks = 0;
    int passes = 0;
    int failures = 0;
    double max_phi_minus_lambda = 0.0;
    double min_upper_minus_phi = 0.0;
    double max_lambda = 0.0;
    std::vector<SuiteCheck> failing;  // offending checks, serialized for replay
    bool passed = false;
};

// Random-instance verification of the chain, the rounding guarantee on the
// sparse witness, and the tightness relation against sqrt(2 lambda).
SuiteSummary verify_cheeger_suite(const SuiteConfig& cfg);

}  // namespace ripcert::pipeline
