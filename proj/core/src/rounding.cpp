#include "ripcert/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ripcert/errors.hpp"
#include "ripcert/rng.hpp"
#include "ripcert/spectral.hpp"

namespace ripcert::rounding {

namespace {

void require_normalized(const Eigen::VectorXd& x) {
    if (x.size() == 0) {
        throw ParameterError("rounding: empty vector");
    }
    double max_entry = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x(i) < 0.0 || x(i) > 1.0) {
            throw ParameterError("rounding: vector entries must lie in [0, 1]");
        }
        max_entry = std::max(max_entry, x(i));
    }
    if (std::abs(max_entry - 1.0) > 1e-12) {
        throw ParameterError("rounding: normalized vector must have maximum entry 1");
    }
}

}  // namespace

Eigen::VectorXd normalize_for_rounding(const Eigen::VectorXd& x) {
    if (x.size() == 0) {
        throw ParameterError("normalize_for_rounding: empty vector");
    }
    const double max_abs = x.cwiseAbs().maxCoeff();
    if (max_abs == 0.0) {
        throw ParameterError("normalize_for_rounding: zero vector");
    }
    return x.cwiseAbs() / max_abs;
}

graph::VertexSet threshold_set(const Eigen::VectorXd& normalized, double t) {
    require_normalized(normalized);
    if (!(t > 0.0) || t > 1.0) {
        throw ParameterError("threshold_set: t must lie in (0, 1]");
    }
    std::vector<int> members;
    for (Eigen::Index i = 0; i < normalized.size(); ++i) {
        if (normalized(i) >= t) {
            members.push_back(static_cast<int>(i));
        }
    }
    return graph::VertexSet::from_sorted(std::move(members));
}

SweepResult sweep_cut(const graph::RegularGraph& g, const Eigen::VectorXd& x) {
    if (x.size() != g.vertex_count()) {
        throw ParameterError("sweep_cut: vector dimension mismatch");
    }
    const Eigen::VectorXd normalized = normalize_for_rounding(x);

    const auto l = spectral::laplacian(g);
    const double lambda = spectral::rayleigh(l, x);

    // Every realizable threshold set arises at one of the distinct positive
    // entry values; sweep them from the top so ties favor the smaller set.
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(normalized.size()));
    for (Eigen::Index i = 0; i < normalized.size(); ++i) {
        if (normalized(i) > 0.0) {
            values.push_back(normalized(i));
        }
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    int support_size = 0;
    for (Eigen::Index i = 0; i < normalized.size(); ++i) {
        support_size += normalized(i) > 0.0 ? 1 : 0;
    }

    SweepResult result;
    result.lambda_in = lambda;
    result.bound = std::sqrt(std::max(lambda * (2.0 - lambda), 0.0));
    result.thresholds_tried = static_cast<int>(values.size());
    result.guarantee_applies = 2 * support_size <= g.vertex_count();

    bool found = false;
    std::int64_t best_boundary = 0;
    std::int64_t best_den = 1;
    for (double t : values) {
        auto set = threshold_set(normalized, t);
        if (set.size() == g.vertex_count()) {
            continue;  // the full set is not a cut; possible only when x > 0 everywhere
        }
        auto report = graph::expansion(g, set);
        const std::int64_t min_side = std::min<std::int64_t>(
            report.set.size(), g.vertex_count() - report.set.size());
        const std::int64_t den = static_cast<std::int64_t>(g.degree()) * min_side;
        if (!found || report.boundary * best_den < best_boundary * den) {
            found = true;
            best_boundary = report.boundary;
            best_den = den;
            result.best = std::move(report);
        }
    }
    if (!found) {
        throw InvalidCutError("sweep_cut: every threshold set equals the whole vertex set");
    }
    return result;
}

graph::VertexSet randomized_threshold(const Eigen::VectorXd& normalized, std::uint64_t seed) {
    require_normalized(normalized);
    Rng rng(seed);
    const double t = std::sqrt(rng.next_unit_open());
    return threshold_set(normalized, t);
}

ExpectedCutStats expected_cut_stats(const graph::RegularGraph& g,
                                    const Eigen::VectorXd& normalized) {
    if (normalized.size() != g.vertex_count()) {
        throw ParameterError("expected_cut_stats: vector dimension mismatch");
    }
    require_normalized(normalized);
    ExpectedCutStats stats;
    stats.exp_size = normalized.squaredNorm();
    for (const auto& [u, v] : g.edges()) {
        stats.exp_boundary +=
            std::abs(normalized(u) * normalized(u) - normalized(v) * normalized(v));
    }
    return stats;
}

}  // namespace ripcert::rounding
