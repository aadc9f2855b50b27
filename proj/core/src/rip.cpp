#include "ripcert/rip.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ripcert/combinatorics.hpp"
#include "ripcert/errors.hpp"
#include "ripcert/rng.hpp"

namespace ripcert::rip {

SensingMatrix::SensingMatrix(Eigen::MatrixXd entries) : mat_(std::move(entries)) {
    if (mat_.rows() == 0 || mat_.cols() == 0) {
        throw ParameterError("SensingMatrix: matrix must be non-empty");
    }
    if (!mat_.allFinite()) {
        throw ParameterError("SensingMatrix: entries must be finite");
    }
}

SensingMatrix factor_psd(const Eigen::MatrixXd& sym) {
    if (sym.rows() != sym.cols() || sym.rows() == 0) {
        throw ParameterError("factor_psd: matrix must be square and non-empty");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    Eigen::VectorXd eigenvalues = solver.eigenvalues();
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        if (eigenvalues(i) < -kPsdClampTol) {
            throw NotPsdError("factor_psd: eigenvalue " + std::to_string(eigenvalues(i)) +
                              " is below -" + std::to_string(kPsdClampTol));
        }
        eigenvalues(i) = std::max(eigenvalues(i), 0.0);
    }
    const Eigen::MatrixXd factor =
        eigenvalues.cwiseSqrt().asDiagonal() * solver.eigenvectors().transpose();
    return SensingMatrix(factor);
}

SensingMatrix factor_laplacian(const spectral::Laplacian& l) {
    return factor_psd(l.matrix());
}

namespace {

struct SupportExtremes {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
};

// Extreme singular values of the column submatrix selected by `supp`.
SupportExtremes support_extremes(const Eigen::MatrixXd& m, std::span<const int> supp) {
    const int rows = static_cast<int>(m.rows());
    const int k = static_cast<int>(supp.size());
    Eigen::MatrixXd sub(rows, k);
    for (int j = 0; j < k; ++j) {
        sub.col(j) = m.col(supp[static_cast<std::size_t>(j)]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub);
    const auto& sv = svd.singularValues();
    SupportExtremes extremes;
    extremes.sigma_max = sv(0);
    // A map from R^k with k > rows has a kernel regardless of the entries.
    extremes.sigma_min = k > rows ? 0.0 : sv(sv.size() - 1);
    return extremes;
}

double ric_value(const SupportExtremes& e) {
    return std::max(1.0 - e.sigma_min, e.sigma_max - 1.0);
}

WitnessSide ric_side(const SupportExtremes& e) {
    return (1.0 - e.sigma_min) >= (e.sigma_max - 1.0) ? WitnessSide::lower : WitnessSide::upper;
}

void check_order(const SensingMatrix& m, int k, const char* who) {
    if (k < 1 || k > m.cols()) {
        throw ParameterError(std::string(who) + ": need 1 <= k <= cols");
    }
}

}  // namespace

RicEstimate ric_exact(const SensingMatrix& m, int k, std::uint64_t budget) {
    check_order(m, k, "ric_exact");
    const int n = m.cols();
    const std::uint64_t supports = binomial(n, k, budget + 1);
    if (supports > budget) {
        throw BudgetError("ric_exact: C(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds the support budget of " + std::to_string(budget) +
                          "; use ric_montecarlo");
    }

    RicEstimate best;
    best.order = k;
    best.kind = RicKind::exact;
    bool found = false;
    for_each_combination(n, k, [&](std::span<const int> supp) {
        const auto extremes = support_extremes(m.matrix(), supp);
        const double value = ric_value(extremes);
        if (!found || value > best.value) {
            found = true;
            best.value = value;
            best.witness_support =
                graph::VertexSet::from_sorted(std::vector<int>(supp.begin(), supp.end()));
            best.witness_side = ric_side(extremes);
            best.witness_sigma_min = extremes.sigma_min;
            best.witness_sigma_max = extremes.sigma_max;
        }
        return true;
    });
    return best;
}

RicEstimate ric_montecarlo(const SensingMatrix& m, int k, std::uint64_t trials,
                           std::uint64_t seed, SupportSampler sampler) {
    check_order(m, k, "ric_montecarlo");
    if (trials < 1) {
        throw ParameterError("ric_montecarlo: need trials >= 1");
    }

    RicEstimate best;
    best.order = k;
    best.kind = RicKind::lower_bound;
    bool found = false;
    const auto consider = [&](std::span<const int> supp) {
        const auto extremes = support_extremes(m.matrix(), supp);
        const double value = ric_value(extremes);
        if (!found || value > best.value) {
            found = true;
            best.value = value;
            best.witness_support =
                graph::VertexSet::from_sorted(std::vector<int>(supp.begin(), supp.end()));
            best.witness_side = ric_side(extremes);
            best.witness_sigma_min = extremes.sigma_min;
            best.witness_sigma_max = extremes.sigma_max;
        }
    };

    if (sampler == SupportSampler::exhaustive) {
        std::uint64_t visited = 0;
        for_each_combination(m.cols(), k, [&](std::span<const int> supp) {
            consider(supp);
            return ++visited < trials;
        });
    } else {
        Rng rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto supp = rng.sample_combination(m.cols(), k);
            consider(supp);
        }
    }
    return best;
}

RicEstimate ric_of_support(const SensingMatrix& m, const graph::VertexSet& support) {
    if (support.empty()) {
        throw ParameterError("ric_of_support: empty support");
    }
    if (support.members().back() >= m.cols()) {
        throw ParameterError("ric_of_support: support index out of range");
    }
    const auto extremes = support_extremes(m.matrix(), support.members());
    RicEstimate estimate;
    estimate.order = support.size();
    estimate.kind = RicKind::lower_bound;
    estimate.value = ric_value(extremes);
    estimate.witness_support = support;
    estimate.witness_side = ric_side(extremes);
    estimate.witness_sigma_min = extremes.sigma_min;
    estimate.witness_sigma_max = extremes.sigma_max;
    return estimate;
}

namespace {

void check_delta(double delta, const char* who) {
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw ParameterError(std::string(who) + ": delta must lie in (0, 1)");
    }
}

}  // namespace

RipDecision is_rip(const SensingMatrix& m, int k, double delta, std::uint64_t budget) {
    check_delta(delta, "is_rip");
    RipDecision decision;
    decision.estimate = ric_exact(m, k, budget);
    decision.holds = decision.estimate.value <= delta;
    return decision;
}

RipScanResult is_rip_montecarlo(const SensingMatrix& m, int k, double delta,
                                std::uint64_t trials, std::uint64_t seed) {
    check_delta(delta, "is_rip_montecarlo");
    RipScanResult result;
    result.estimate = ric_montecarlo(m, k, trials, seed);
    result.verdict = result.estimate.value > delta ? ScanVerdict::violated
                                                   : ScanVerdict::no_violation_found;
    return result;
}

std::pair<double, double> indicator_identity_check(const SensingMatrix& m,
                                                   const graph::RegularGraph& g,
                                                   const graph::VertexSet& s) {
    if (m.cols() != g.vertex_count()) {
        throw ParameterError("indicator_identity_check: matrix columns must match vertex count");
    }
    if (s.empty()) {
        throw InvalidCutError("indicator_identity_check: empty set");
    }
    if (2 * s.size() > g.vertex_count()) {
        throw ParameterError("indicator_identity_check: need |S| <= n/2");
    }
    const Eigen::VectorXd x = s.indicator(g.vertex_count());
    const double quotient = (m.matrix() * x).squaredNorm() / x.squaredNorm();
    return {quotient, graph::expansion(g, s).expansion};
}

}  // namespace ripcert::rip
