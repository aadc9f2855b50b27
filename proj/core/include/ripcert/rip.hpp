#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <utility>

#include "ripcert/graph.hpp"
#include "ripcert/spectral.hpp"

namespace ripcert::rip {

// Real m-by-n measurement matrix applied to sparse vectors.
class SensingMatrix {
public:
    explicit SensingMatrix(Eigen::MatrixXd entries);

    int rows() const { return static_cast<int>(mat_.rows()); }
    int cols() const { return static_cast<int>(mat_.cols()); }
    const Eigen::MatrixXd& matrix() const { return mat_; }

private:
    Eigen::MatrixXd mat_;
};

// Symmetric PSD square root: M = D^{1/2} Q' from the eigendecomposition
// Q D Q'. Eigenvalues in [-1e-8, 0) are clamped to zero; anything more
// negative is refused.
inline constexpr double kPsdClampTol = 1e-8;
SensingMatrix factor_psd(const Eigen::MatrixXd& sym);

// Factor with M'M equal to the Laplacian, max-norm residual <= 1e-10.
SensingMatrix factor_laplacian(const spectral::Laplacian& l);

enum class RicKind { exact, lower_bound };
enum class WitnessSide { lower, upper };

// Restricted isometry constant of some order k, with the support that
// attains it. The constant bounds norms, not squared norms:
// value = max(1 - sigma_min, sigma_max - 1) over column submatrices.
struct RicEstimate {
    int order = 0;
    double value = 0.0;
    RicKind kind = RicKind::exact;
    graph::VertexSet witness_support;
    WitnessSide witness_side = WitnessSide::lower;
    double witness_sigma_min = 0.0;
    double witness_sigma_max = 0.0;
};

// Exact RIC by exhaustive scan over all C(n, k) supports (lexicographic
// tie-break). Refuses when the support count exceeds `budget`.
inline constexpr std::uint64_t kDefaultSupportBudget = 5'000'000;
RicEstimate ric_exact(const SensingMatrix& m, int k,
                      std::uint64_t budget = kDefaultSupportBudget);

enum class SupportSampler {
    random,      // `trials` uniform size-k supports
    exhaustive,  // first `trials` supports in lexicographic order (test hook)
};

// Monte-Carlo lower bound on the RIC: maximum over sampled supports.
RicEstimate ric_montecarlo(const SensingMatrix& m, int k, std::uint64_t trials,
                           std::uint64_t seed,
                           SupportSampler sampler = SupportSampler::random);

// RIC contribution of one fixed support (a lower bound on the order-|S| RIC).
RicEstimate ric_of_support(const SensingMatrix& m, const graph::VertexSet& support);

struct RipDecision {
    bool holds = false;  // ric(k) <= delta
    RicEstimate estimate;
};

// Exact (k, delta)-RIP decision, 0 < delta < 1.
RipDecision is_rip(const SensingMatrix& m, int k, double delta,
                   std::uint64_t budget = kDefaultSupportBudget);

enum class ScanVerdict { violated, no_violation_found };

struct RipScanResult {
    ScanVerdict verdict = ScanVerdict::no_violation_found;
    RicEstimate estimate;
};

// Sampled RIP check: can report a concrete violation witness but can never
// certify that the property holds.
RipScanResult is_rip_montecarlo(const SensingMatrix& m, int k, double delta,
                                std::uint64_t trials, std::uint64_t seed);

// (||M x_S||^2 / ||x_S||^2, phi(S)) for an indicator vector; the two agree
// whenever M factors the graph's Laplacian and |S| <= n/2.
std::pair<double, double> indicator_identity_check(const SensingMatrix& m,
                                                   const graph::RegularGraph& g,
                                                   const graph::VertexSet& s);

// Text format: header "m n", then m rows of n floats with 17 significant
// digits, which round-trips doubles exactly.
SensingMatrix read_matrix(std::istream& in);
SensingMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const SensingMatrix& m, std::ostream& out);
void write_matrix(const SensingMatrix& m, const std::filesystem::path& path);

}  // namespace ripcert::rip
