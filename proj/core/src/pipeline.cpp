#include "ripcert/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ripcert/errors.hpp"
#include "ripcert/rng.hpp"
#include "ripcert/rounding.hpp"

namespace ripcert::pipeline {

ReductionParams derive_params(double eps, double C, int n) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw ParameterError("derive_params: eps must lie in (0, 1)");
    }
    if (!(C >= 1.0)) {
        throw ParameterError("derive_params: C must be >= 1");
    }
    if (n < 1) {
        throw ParameterError("derive_params: n must be >= 1");
    }
    ReductionParams p;
    p.eps = eps;
    p.C = C;
    p.delta = std::pow(eps, 0.4);
    const double exponent = 4.0 / eps;
    p.beta = std::pow(eps, exponent);
    p.alpha = p.beta / C;
    p.q = 1.0 / p.alpha;
    p.gamma = std::pow(eps, exponent + 2.0);
    p.k = static_cast<int>(std::floor(p.beta * static_cast<double>(n)));
    p.log10_beta = exponent * std::log10(eps);
    p.eq2_bound = std::pow(p.beta, eps / 4.0);
    p.gamma_over_beta =
        p.beta > 0.0 ? p.gamma / p.beta : std::numeric_limits<double>::quiet_NaN();
    p.eq2_check = p.eq2_bound + p.gamma_over_beta <= eps + eps * eps + 1e-9;
    return p;
}

rip::SensingMatrix reduce(const graph::RegularGraph& g) {
    return rip::factor_laplacian(spectral::laplacian(g));
}

Case1Report gap_experiment_case1(int n, int d, int s, int c, double eps, double C,
                                 std::uint64_t seed) {
    Case1Report report;
    report.params = derive_params(eps, C, n);
    report.n = n;
    report.d = d;
    report.s = s;
    report.c = c;
    report.seed = seed;

    if (s < 1 || d < 1) {
        throw ParameterError("gap_experiment_case1: need s >= 1 and d >= 1");
    }
    const double planted_phi = static_cast<double>(c) / static_cast<double>(d) /
                               static_cast<double>(s);
    if (planted_phi > eps) {
        throw ParameterError("gap_experiment_case1: planted expansion c/(d*s) must be <= eps");
    }

    const auto instance = graph::gen_planted_cut(n, d, s, c, seed);
    report.planted = graph::expansion(instance.graph, instance.planted);

    const auto m = reduce(instance.graph);
    const Eigen::VectorXd x = instance.planted.indicator(n);
    report.ratio = (m.matrix() * x).norm() / x.norm();
    report.sqrt_phi = std::sqrt(report.planted.expansion);
    report.sigma_min_planted = rip::ric_of_support(m, instance.planted).witness_sigma_min;

    const double delta = report.params.delta;
    // The identity is compared on squared norms; taking square roots first
    // would blow numerical noise up to sqrt(eps_machine) when phi = 0.
    report.bridge_identity_holds =
        std::abs(report.ratio * report.ratio - report.planted.expansion) <= kChainTol;
    report.ratio_below_sqrt_eps = report.ratio <= std::sqrt(eps) + kChainTol;
    report.violates_one_minus_delta_rip = report.sigma_min_planted < delta;
    report.violates_delta_rip = report.sigma_min_planted < 1.0 - delta;
    report.passed = report.bridge_identity_holds && report.ratio_below_sqrt_eps &&
                    report.violates_one_minus_delta_rip;
    return report;
}

Case2Report gap_experiment_case2_on(const graph::RegularGraph& g, int k, double eps) {
    Case2Report report;
    report.n = g.vertex_count();
    report.d = g.degree();
    report.k = k;
    report.params = derive_params(eps, 1.0, g.vertex_count());

    report.phi_witness = graph::min_expansion_small_sets(g, k);
    report.phi_k = report.phi_witness.expansion;

    const auto l = spectral::laplacian(g);
    report.lambda = spectral::sparse_lambda_exact(l, k);
    report.lambda_k = report.lambda.value;

    report.ric = rip::ric_exact(reduce(g), k);
    report.delta_k = report.ric.value;

    report.premise_holds = report.phi_k >= 1.0 - eps - 1e-12;
    if (report.premise_holds) {
        report.rip_confirmed = report.delta_k <= report.params.delta + 1e-12;
    }

    report.chain_upper = std::sqrt(std::max(report.lambda_k * (2.0 - report.lambda_k), 0.0));
    report.chain_holds = report.lambda_k <= report.phi_k + kChainTol &&
                         report.phi_k <= report.chain_upper + kChainTol;
    report.contrapositive_lower =
        1.0 - std::sqrt(std::max(1.0 - report.phi_k * report.phi_k, 0.0));
    report.contrapositive_holds = report.lambda_k >= report.contrapositive_lower - kChainTol;

    report.passed = report.chain_holds && report.contrapositive_holds &&
                    (!report.premise_holds || report.rip_confirmed.value());
    return report;
}

Case2Report gap_experiment_case2(int n, int d, int k, double eps, std::uint64_t seed) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw ParameterError("gap_experiment_case2: eps must lie in (0, 1)");
    }
    auto report = gap_experiment_case2_on(graph::gen_random_regular(n, d, seed), k, eps);
    report.seed = seed;
    report.seeded = true;
    return report;
}

namespace {

std::vector<int> orders_for(KRule rule, int n) {
    std::vector<int> ks;
    if (rule == KRule::quarter || rule == KRule::both) {
        ks.push_back(std::max(1, n / 4));
    }
    if (rule == KRule::half || rule == KRule::both) {
        ks.push_back(std::max(1, n / 2));
    }
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

}  // namespace

SuiteSummary verify_cheeger_suite(const SuiteConfig& cfg) {
    if (cfg.count < 1) {
        throw ParameterError("verify_cheeger_suite: need count >= 1");
    }
    if (cfg.n_min < 3 || cfg.n_max < cfg.n_min) {
        throw ParameterError("verify_cheeger_suite: need 3 <= n_min <= n_max");
    }
    if (cfg.degrees.empty()) {
        throw ParameterError("verify_cheeger_suite: need at least one degree");
    }
    for (int d : cfg.degrees) {
        if (d < 1 || d >= cfg.n_min) {
            throw ParameterError("verify_cheeger_suite: every degree must satisfy 1 <= d < n_min");
        }
    }

    SuiteSummary summary;
    summary.config = cfg;
    summary.min_upper_minus_phi = std::numeric_limits<double>::infinity();

    for (int i = 0; i < cfg.count; ++i) {
        Rng rng(cfg.seed + static_cast<std::uint64_t>(i));
        const int d = cfg.degrees[rng.next_below(cfg.degrees.size())];
        int n = 0;
        do {
            n = cfg.n_min +
                static_cast<int>(rng.next_below(static_cast<std::uint64_t>(cfg.n_max - cfg.n_min + 1)));
        } while (static_cast<std::int64_t>(n) * d % 2 != 0);
        const std::uint64_t graph_seed = rng.next_u64();
        const auto g = graph::gen_random_regular(n, d, graph_seed);
        const auto l = spectral::laplacian(g);

        ++summary.instances;
        for (int k : orders_for(cfg.k_rule, n)) {
            SuiteCheck check;
            check.instance = i;
            check.n = n;
            check.d = d;
            check.k = k;
            check.graph_seed = graph_seed;

            const auto lambda = spectral::sparse_lambda_exact(l, k);
            check.lambda_k = lambda.value;
            check.phi_k = graph::min_expansion_small_sets(g, k).expansion;
            check.upper = std::sqrt(std::max(check.lambda_k * (2.0 - check.lambda_k), 0.0));
            check.sweep_expansion = rounding::sweep_cut(g, lambda.witness).best.expansion;

            check.chain_ok = check.lambda_k <= check.phi_k + kChainTol &&
                             check.phi_k <= check.upper + kChainTol;
            check.sweep_ok = check.sweep_expansion <= check.upper + kChainTol;
            check.tightness_ok =
                check.upper <= std::sqrt(std::max(2.0 * check.lambda_k, 0.0)) + kChainTol;
            check.pass = check.chain_ok && check.sweep_ok && check.tightness_ok;

            ++summary.checks;
            if (check.pass) {
                ++summary.passes;
            } else {
                ++summary.failures;
                summary.failing.push_back(check);
            }
            summary.max_phi_minus_lambda =
                std::max(summary.max_phi_minus_lambda, check.phi_k - check.lambda_k);
            summary.min_upper_minus_phi =
                std::min(summary.min_upper_minus_phi, check.upper - check.phi_k);
            summary.max_lambda = std::max(summary.max_lambda, check.lambda_k);
        }
    }
    summary.passed = summary.failures == 0;
    return summary;
}

}  // namespace ripcert::pipeline
