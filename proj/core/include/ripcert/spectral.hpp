#pragma once

#include <Eigen/Dense>

#include "ripcert/graph.hpp"

namespace ripcert::spectral {

// Normalized Laplacian I - A/d of a d-regular graph. The matrix has unit
// diagonal, off-diagonal entries in {0, -1/d}, zero row sums, and a
// spectrum inside [0, 2].
class Laplacian {
public:
    // Validates the entry structure (not the spectral bounds, which follow
    // from it) so that edges can be recovered from nonzero off-diagonals.
    Laplacian(Eigen::MatrixXd entries, int degree);

    int size() const { return static_cast<int>(mat_.rows()); }
    int degree() const { return degree_; }
    const Eigen::MatrixXd& matrix() const { return mat_; }

private:
    Eigen::MatrixXd mat_;
    int degree_ = 0;
};

Laplacian laplacian(const graph::RegularGraph& g);

// Rayleigh quotient x'Lx / x'x evaluated in the edge form
// sum over edges (u,v) of (x_u - x_v)^2, divided by d * ||x||^2.
double rayleigh(const Laplacian& l, const Eigen::VectorXd& x);

struct SparseRayleighResult {
    double value = 0.0;
    Eigen::VectorXd witness;  // minimizing vector, embedded in n dimensions
    graph::VertexSet support;
    int order = 0;
};

// Minimum Rayleigh quotient over vectors with at most k nonzeros, computed
// exactly as the smallest eigenvalue of any k-by-k principal submatrix,
// enumerating all C(n, k) supports in lexicographic order.
SparseRayleighResult sparse_lambda_exact(const Laplacian& l, int k);

// Second smallest eigenvalue of L.
double lambda_two(const Laplacian& l);

}  // namespace ripcert::spectral
