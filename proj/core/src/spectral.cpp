#include "ripcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ripcert/combinatorics.hpp"
#include "ripcert/errors.hpp"

namespace ripcert::spectral {

namespace {

constexpr double kEntryTol = 1e-12;

}  // namespace

Laplacian::Laplacian(Eigen::MatrixXd entries, int degree) : mat_(std::move(entries)), degree_(degree) {
    const auto n = mat_.rows();
    if (n == 0 || mat_.cols() != n) {
        throw ParameterError("Laplacian: matrix must be square and non-empty");
    }
    if (degree_ <= 0) {
        throw ParameterError("Laplacian: degree must be positive");
    }
    const double off = -1.0 / static_cast<double>(degree_);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(mat_(i, i) - 1.0) > kEntryTol) {
            throw ParameterError("Laplacian: diagonal entry " + std::to_string(i) +
                                 " must equal 1");
        }
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double a = mat_(i, j);
            if (std::abs(a - mat_(j, i)) > kEntryTol) {
                throw ParameterError("Laplacian: matrix must be symmetric");
            }
            if (std::abs(a) > kEntryTol && std::abs(a - off) > kEntryTol) {
                throw ParameterError("Laplacian: off-diagonal entries must be 0 or -1/d");
            }
        }
    }
}

Laplacian laplacian(const graph::RegularGraph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
    const double off = -1.0 / static_cast<double>(g.degree());
    for (const auto& [u, v] : g.edges()) {
        l(u, v) = off;
        l(v, u) = off;
    }
    return Laplacian(std::move(l), g.degree());
}

double rayleigh(const Laplacian& l, const Eigen::VectorXd& x) {
    if (x.size() != l.size()) {
        throw ParameterError("rayleigh: vector dimension mismatch");
    }
    const double norm_sq = x.squaredNorm();
    if (norm_sq == 0.0) {
        throw ParameterError("rayleigh: zero vector");
    }
    const auto& m = l.matrix();
    double edge_sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != 0.0) {
                const double diff = x(i) - x(j);
                edge_sum += diff * diff;
            }
        }
    }
    return edge_sum / (static_cast<double>(l.degree()) * norm_sq);
}

SparseRayleighResult sparse_lambda_exact(const Laplacian& l, int k) {
    const int n = l.size();
    if (k < 1 || k > n) {
        throw ParameterError("sparse_lambda_exact: need 1 <= k <= n");
    }

    const auto& m = l.matrix();
    Eigen::MatrixXd sub(k, k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;

    const auto fill_submatrix = [&](std::span<const int> supp) {
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                sub(a, b) = m(supp[static_cast<std::size_t>(a)], supp[static_cast<std::size_t>(b)]);
            }
        }
    };

    bool found = false;
    double best_value = 0.0;
    std::vector<int> best_support;

    for_each_combination(n, k, [&](std::span<const int> supp) {
        fill_submatrix(supp);
        solver.compute(sub, Eigen::EigenvaluesOnly);
        const double value = solver.eigenvalues()(0);
        if (!found || value < best_value) {
            found = true;
            best_value = value;
            best_support.assign(supp.begin(), supp.end());
        }
        return true;
    });

    fill_submatrix(best_support);
    solver.compute(sub);
    Eigen::VectorXd best_local = solver.eigenvectors().col(0);

    SparseRayleighResult result;
    result.value = std::max(best_value, 0.0);
    result.order = k;
    result.witness = Eigen::VectorXd::Zero(n);
    // Fix the eigenvector sign so reports are reproducible.
    double lead = 0.0;
    for (int a = 0; a < k; ++a) {
        if (std::abs(best_local(a)) > 1e-14) {
            lead = best_local(a);
            break;
        }
    }
    if (lead < 0.0) {
        best_local = -best_local;
    }
    for (int a = 0; a < k; ++a) {
        result.witness(best_support[static_cast<std::size_t>(a)]) = best_local(a);
    }
    result.support = graph::VertexSet::from_sorted(std::move(best_support));
    return result;
}

double lambda_two(const Laplacian& l) {
    if (l.size() < 2) {
        throw ParameterError("lambda_two: matrix must be at least 2x2");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l.matrix());
    return solver.eigenvalues()(1);
}

}  // namespace ripcert::spectral
