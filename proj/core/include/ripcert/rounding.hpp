#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "ripcert/graph.hpp"

namespace ripcert::rounding {

// |x| scaled so that the largest entry is exactly 1; support unchanged.
Eigen::VectorXd normalize_for_rounding(const Eigen::VectorXd& x);

// { i : x_i >= t } for a normalized vector and t in (0, 1]. Never empty.
graph::VertexSet threshold_set(const Eigen::VectorXd& normalized, double t);

struct SweepResult {
    graph::CutReport best;
    double lambda_in = 0.0;       // Rayleigh quotient of the input vector
    double bound = 0.0;           // sqrt(lambda_in * (2 - lambda_in))
    int thresholds_tried = 0;
    bool guarantee_applies = true;  // requires ||x||_0 <= n/2
};

// Deterministic sweep over every distinct positive entry value of the
// normalized vector. When ||x||_0 <= n/2 the best cut satisfies
// expansion <= sqrt(lambda * (2 - lambda)).
SweepResult sweep_cut(const graph::RegularGraph& g, const Eigen::VectorXd& x);

// Randomized threshold with density f(t) = 2t on (0, 1), realized as
// t = sqrt(u) for uniform u. Membership probability of coordinate i is x_i^2.
graph::VertexSet randomized_threshold(const Eigen::VectorXd& normalized, std::uint64_t seed);

struct ExpectedCutStats {
    double exp_size = 0.0;      // sum of x_i^2
    double exp_boundary = 0.0;  // sum over edges of |x_u^2 - x_v^2|
};

// Closed-form expectations of |S_t| and |E(S_t, V-S_t)| under the 2t density.
ExpectedCutStats expected_cut_stats(const graph::RegularGraph& g,
                                    const Eigen::VectorXd& normalized);

}  // namespace ripcert::rounding
