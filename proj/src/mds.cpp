#include "zmds/mds.hpp"

#include "zmds/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

namespace zmds {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_counts(const DistanceMatrix& d, const Embedding& e) {
    if (d.n_objects() != e.n_objects())
        throw DimensionError("embedding has " + std::to_string(e.n_objects()) +
                             " objects but the distance matrix has " +
                             std::to_string(d.n_objects()));
}

// Squared embedded distances accumulated over the leading `cols` columns.
void accumulate_columns(const Eigen::MatrixXd& coords, Eigen::Index from, Eigen::Index to,
                        std::vector<double>& sq) {
    const Eigen::Index n = coords.rows();
    std::size_t p = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j, ++p) {
            double s = sq[p];
            for (Eigen::Index c = from; c < to; ++c) {
                const double diff = coords(i, c) - coords(j, c);
                s += diff * diff;
            }
            sq[p] = s;
        }
    }
}

double stress_from(const DistanceMatrix& d, const std::vector<double>& sq) {
    const std::size_t n = d.n_objects();
    double num = 0.0;
    double den = 0.0;
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++p) {
            const double dij = d(i, j);
            const double diff = dij - std::sqrt(sq[p]);
            num += diff * diff;
            den += dij * dij;
        }
    }
    if (den == 0.0) throw DegenerateInputError("stress is undefined for an all-zero distance matrix");
    return std::sqrt(num / den);
}

}  // namespace

GramMatrix::GramMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw DimensionError("Gram matrix must be square");
}

GramMatrix double_center(const DistanceMatrix& d) {
    const Eigen::MatrixXd sq = d.entries().array().square().matrix();
    const Eigen::Index n = sq.rows();
    const Eigen::VectorXd row_mean = sq.rowwise().mean();
    const double grand = row_mean.mean();
    Eigen::MatrixXd b(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            b(i, j) = -0.5 * (sq(i, j) - (row_mean(i) + row_mean(j)) + grand);
    return GramMatrix(std::move(b));
}

EigenDecomposition eigendecompose_symmetric(const Eigen::MatrixXd& b) {
    if (b.rows() != b.cols()) throw DimensionError("eigendecomposition needs a square matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("symmetric eigensolver did not converge");

    const Eigen::Index n = b.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    const auto& vals = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index c) { return vals(a) > vals(c); });

    EigenDecomposition out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
    for (Eigen::Index p = 0; p < n; ++p) {
        const Eigen::Index src = order[static_cast<std::size_t>(p)];
        Eigen::VectorXd v = solver.eigenvectors().col(src);
        Eigen::Index big = 0;
        for (Eigen::Index i = 1; i < n; ++i)
            if (std::abs(v(i)) > std::abs(v(big))) big = i;
        if (v(big) < 0.0) v = -v;
        out.values(p) = vals(src);
        out.vectors.col(p) = v;
    }
    return out;
}

std::size_t count_positive(const Eigen::VectorXd& eigenvalues) {
    if (eigenvalues.size() == 0) return 0;
    const double scale = eigenvalues.cwiseAbs().maxCoeff();
    const double tol = kPositiveEigenvalueTolerance * scale;
    return static_cast<std::size_t>((eigenvalues.array() > tol).count());
}

std::size_t Embedding::negative_count() const {
    if (eigenvalues.size() == 0) return 0;
    const double tol = kPositiveEigenvalueTolerance * eigenvalues.cwiseAbs().maxCoeff();
    return static_cast<std::size_t>((eigenvalues.array() < -tol).count());
}

double Embedding::negative_mass() const {
    if (eigenvalues.size() == 0) return 0.0;
    const double tol = kPositiveEigenvalueTolerance * eigenvalues.cwiseAbs().maxCoeff();
    double s = 0.0;
    for (double v : eigenvalues)
        if (v < -tol) s -= v;
    return s;
}

Embedding embed(const DistanceMatrix& d, std::size_t n) {
    if (n < 1) throw PreconditionError("embedding dimension must be at least 1");
    const auto eig = eigendecompose_symmetric(double_center(d));
    const std::size_t positive = count_positive(eig.values);
    if (n > positive) throw DimensionUnavailableError(n, positive);

    Embedding e;
    e.coordinates.resize(eig.vectors.rows(), idx(n));
    for (std::size_t p = 0; p < n; ++p)
        e.coordinates.col(idx(p)) = std::sqrt(eig.values(idx(p))) * eig.vectors.col(idx(p));
    e.eigenvalues = eig.values;
    e.n = n;
    e.source_metric = d.metric();
    return e;
}

double kruskal_stress(const DistanceMatrix& d, const Embedding& e) {
    check_counts(d, e);
    const std::size_t n = d.n_objects();
    std::vector<double> sq(n * (n - 1) / 2, 0.0);
    accumulate_columns(e.coordinates, 0, e.coordinates.cols(), sq);
    return stress_from(d, sq);
}

std::vector<std::pair<double, double>> shepard_points(const DistanceMatrix& d, const Embedding& e) {
    check_counts(d, e);
    const std::size_t n = d.n_objects();
    std::vector<double> sq(n * (n - 1) / 2, 0.0);
    accumulate_columns(e.coordinates, 0, e.coordinates.cols(), sq);
    std::vector<std::pair<double, double>> out;
    out.reserve(sq.size());
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++p) out.emplace_back(d(i, j), std::sqrt(sq[p]));
    return out;
}

namespace {

std::vector<std::pair<std::size_t, double>> curve_from(const DistanceMatrix& d, const Embedding& e,
                                                       std::size_t n_max) {
    check_counts(d, e);
    const std::size_t n = d.n_objects();
    std::vector<double> sq(n * (n - 1) / 2, 0.0);
    std::vector<std::pair<std::size_t, double>> curve;
    curve.reserve(n_max);
    for (std::size_t k = 1; k <= n_max; ++k) {
        accumulate_columns(e.coordinates, idx(k - 1), idx(k), sq);
        curve.emplace_back(k, stress_from(d, sq));
    }
    return curve;
}

}  // namespace

std::vector<std::pair<std::size_t, double>> stress_curve(const DistanceMatrix& d, std::size_t n_max) {
    if (n_max < 1) throw PreconditionError("stress curve needs n_max >= 1");
    return curve_from(d, embed(d, n_max), n_max);
}

StressReport stress_report(const DistanceMatrix& d, const Embedding& e) {
    StressReport r;
    r.stress_1 = kruskal_stress(d, e);
    r.shepard_pairs = shepard_points(d, e);
    r.stress_curve = curve_from(d, e, e.n);
    return r;
}

}  // namespace zmds
