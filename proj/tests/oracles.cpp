#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace ripcert::testing {

namespace {

std::vector<int> mask_members(std::uint32_t mask) {
    std::vector<int> members;
    for (int v = 0; mask != 0; ++v, mask >>= 1) {
        if (mask & 1u) {
            members.push_back(v);
        }
    }
    return members;
}

}  // namespace

OracleCut oracle_min_expansion(int n, int d, const std::vector<graph::Edge>& edges, int k) {
    OracleCut best;
    std::int64_t best_den = 1;
    bool found = false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size > k) {
            continue;
        }
        std::int64_t boundary = 0;
        for (const auto& [u, v] : edges) {
            const bool in_u = (mask >> u) & 1u;
            const bool in_v = (mask >> v) & 1u;
            if (in_u != in_v) {
                ++boundary;
            }
        }
        const std::int64_t den = static_cast<std::int64_t>(d) * std::min(size, n - size);
        auto members = mask_members(mask);

        bool better = false;
        if (!found) {
            better = true;
        } else {
            const std::int64_t lhs = boundary * best_den;  // boundary/den vs best, exactly
            const std::int64_t rhs = best.boundary * den;
            if (lhs != rhs) {
                better = lhs < rhs;
            } else {
                better = size < static_cast<int>(best.members.size()) ||
                         (size == static_cast<int>(best.members.size()) &&
                          members < best.members);
            }
        }
        if (better) {
            found = true;
            best.members = std::move(members);
            best.boundary = boundary;
            best_den = den;
            best.value = static_cast<double>(boundary) / static_cast<double>(den);
        }
    }
    return best;
}

double oracle_rayleigh_direct(const Eigen::MatrixXd& l, const Eigen::VectorXd& x) {
    return x.dot(l * x) / x.squaredNorm();
}

namespace {

double oracle_sparse_lambda_extreme(const Eigen::MatrixXd& l, int k, bool want_max) {
    const int n = static_cast<int>(l.rows());
    bool found = false;
    double best = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) {
            continue;
        }
        const auto members = mask_members(mask);
        Eigen::MatrixXd sub(k, k);
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                sub(a, b) = l(members[static_cast<std::size_t>(a)],
                              members[static_cast<std::size_t>(b)]);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub, Eigen::EigenvaluesOnly);
        const double extreme = want_max ? solver.eigenvalues()(k - 1) : solver.eigenvalues()(0);
        if (!found || (want_max ? extreme > best : extreme < best)) {
            found = true;
            best = extreme;
        }
    }
    return best;
}

}  // namespace

double oracle_sparse_lambda_min(const Eigen::MatrixXd& l, int k) {
    return oracle_sparse_lambda_extreme(l, k, false);
}

double oracle_sparse_lambda_max(const Eigen::MatrixXd& l, int k) {
    return oracle_sparse_lambda_extreme(l, k, true);
}

double oracle_ric(const Eigen::MatrixXd& m, int k) {
    const int n = static_cast<int>(m.cols());
    double worst = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) {
            continue;
        }
        const auto members = mask_members(mask);
        Eigen::MatrixXd sub(m.rows(), k);
        for (int j = 0; j < k; ++j) {
            sub.col(j) = m.col(members[static_cast<std::size_t>(j)]);
        }
        const Eigen::MatrixXd gram = sub.transpose() * sub;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
        const double sigma_min =
            k > m.rows() ? 0.0 : std::sqrt(std::max(solver.eigenvalues()(0), 0.0));
        const double sigma_max = std::sqrt(std::max(solver.eigenvalues()(k - 1), 0.0));
        worst = std::max(worst, std::max(1.0 - sigma_min, sigma_max - 1.0));
    }
    return worst;
}

double oracle_cycle_lambda2(int n) {
    return 1.0 - std::cos(2.0 * std::numbers::pi / static_cast<double>(n));
}

}  // namespace ripcert::testing
