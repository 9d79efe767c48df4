#pragma once

#include "zmds/metrics.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace zmds {

/// Double-centered inner-product matrix B = -1/2 J (D o D) J.
class GramMatrix {
public:
    explicit GramMatrix(Eigen::MatrixXd entries);
    const Eigen::MatrixXd& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }

private:
    Eigen::MatrixXd entries_;
};

GramMatrix double_center(const DistanceMatrix& d);

struct EigenDecomposition {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // orthonormal columns, matching `values`
};

/// Full symmetric eigendecomposition, eigenvalues in descending order (ties
/// keep the solver's original index order). Each eigenvector is scaled so its
/// entry of largest magnitude is positive. Throws ConvergenceError when the
/// solver does not converge.
EigenDecomposition eigendecompose_symmetric(const Eigen::MatrixXd& b);
inline EigenDecomposition eigendecompose_symmetric(const GramMatrix& b) {
    return eigendecompose_symmetric(b.entries());
}

/// Relative threshold (against the largest |eigenvalue|) below which an
/// eigenvalue is treated as zero rather than positive.
inline constexpr double kPositiveEigenvalueTolerance = 1e-10;

std::size_t count_positive(const Eigen::VectorXd& eigenvalues);

struct Embedding {
    Eigen::MatrixXd coordinates;  // N x n
    Eigen::VectorXd eigenvalues;  // full spectrum, descending
    std::size_t n = 0;
    Metric source_metric = Metric::Euclidean;

    std::size_t n_objects() const noexcept { return static_cast<std::size_t>(coordinates.rows()); }
    std::size_t positive_count() const { return count_positive(eigenvalues); }
    std::size_t negative_count() const;
    /// Sum of |lambda| over eigenvalues below -tolerance.
    double negative_mass() const;
};

/// Classical (Torgerson) scaling: column p is sqrt(lambda_p) v_p for the p-th
/// largest positive eigenvalue of double_center(d). Throws
/// DimensionUnavailableError when n exceeds the positive-eigenvalue count.
Embedding embed(const DistanceMatrix& d, std::size_t n);

/// Kruskal stress-1 over unordered pairs. Throws DegenerateInputError when d
/// is identically zero.
double kruskal_stress(const DistanceMatrix& d, const Embedding& e);

/// (d_ij, embedded d_ij) for i < j in row-major order.
std::vector<std::pair<double, double>> shepard_points(const DistanceMatrix& d, const Embedding& e);

/// Stress-1 for n = 1..n_max using the leading columns of one decomposition.
std::vector<std::pair<std::size_t, double>> stress_curve(const DistanceMatrix& d, std::size_t n_max);

struct StressReport {
    double stress_1 = 0.0;
    std::vector<std::pair<double, double>> shepard_pairs;
    std::vector<std::pair<std::size_t, double>> stress_curve;
};

StressReport stress_report(const DistanceMatrix& d, const Embedding& e);

}  // namespace zmds
