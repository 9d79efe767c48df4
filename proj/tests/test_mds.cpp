#include "zmds/errors.hpp"
#include "zmds/mds.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace zmds;

namespace {

DistanceMatrix euclidean_of(const Eigen::MatrixXd& points) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(points.rows()));
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        for (Eigen::Index c = 0; c < points.cols(); ++c)
            rows[static_cast<std::size_t>(i)].push_back(points(i, c));
    return distance_matrix(ObjectSet::from_rows(rows), Metric::Euclidean);
}

Eigen::MatrixXd random_points(std::mt19937_64& rng, Eigen::Index n, Eigen::Index k) {
    std::normal_distribution<double> g(0.0, 5.0);
    Eigen::MatrixXd p(n, k);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index c = 0; c < k; ++c) p(i, c) = g(rng);
    return p;
}

double max_rel_distance_error(const DistanceMatrix& d, const Embedding& e) {
    double worst = 0.0;
    for (std::size_t i = 0; i < d.n_objects(); ++i)
        for (std::size_t j = i + 1; j < d.n_objects(); ++j) {
            const double got = (e.coordinates.row(static_cast<Eigen::Index>(i)) -
                                e.coordinates.row(static_cast<Eigen::Index>(j)))
                                   .norm();
            worst = std::max(worst, std::abs(got - d(i, j)) / std::max(d(i, j), 1e-300));
        }
    return worst;
}

}  // namespace

TEST_CASE("double_center") {
    SUBCASE("two points at distance 2") {
        Eigen::Matrix2d d;
        d << 0, 2, 2, 0;
        const auto b = double_center(DistanceMatrix(d, Metric::Euclidean));
        Eigen::Matrix2d expected;
        expected << 1, -1, -1, 1;
        CHECK(b.entries().isApprox(expected, 1e-15));
    }
    SUBCASE("all-zero distances") {
        const auto b = double_center(DistanceMatrix(Eigen::MatrixXd::Zero(4, 4), Metric::Euclidean));
        CHECK(b.entries().isZero(0.0));
    }
    SUBCASE("colinear points {0, 3, 7}: rank one, top eigenvalue = sum of centered squares") {
        Eigen::MatrixXd pts(3, 1);
        pts << 0, 3, 7;
        const auto b = double_center(euclidean_of(pts));
        // brute force: centered coordinates -10/3, -1/3, 11/3
        const Eigen::Vector3d c(-10.0 / 3, -1.0 / 3, 11.0 / 3);
        CHECK(b.entries().isApprox(c * c.transpose(), 1e-12));
        const auto eig = eigendecompose_symmetric(b);
        CHECK(eig.values(0) == doctest::Approx(c.squaredNorm()).epsilon(1e-12));
        CHECK(std::abs(eig.values(1)) < 1e-12);
        CHECK(std::abs(eig.values(2)) < 1e-12);
    }
    SUBCASE("symmetric and double-centered") {
        std::mt19937_64 rng(1);
        const auto d = euclidean_of(random_points(rng, 40, 3));
        const auto b = double_center(d).entries();
        CHECK(b == b.transpose());
        const double tol = 1e-9 * 40 * b.cwiseAbs().maxCoeff();
        CHECK(b.rowwise().sum().cwiseAbs().maxCoeff() <= tol);
        CHECK(b.colwise().sum().cwiseAbs().maxCoeff() <= tol);
    }
}

TEST_CASE("eigendecompose_symmetric") {
    SUBCASE("2x2 closed form") {
        Eigen::Matrix2d b;
        b << 1, -1, -1, 1;
        const auto eig = eigendecompose_symmetric(Eigen::MatrixXd(b));
        CHECK(eig.values(0) == doctest::Approx(2.0));
        CHECK(std::abs(eig.values(1)) < 1e-15);
    }
    SUBCASE("diagonal matrix, descending order") {
        const Eigen::Vector4d diag(3.0, -1.0, 7.0, 0.5);
        const auto eig = eigendecompose_symmetric(Eigen::MatrixXd(diag.asDiagonal()));
        CHECK(eig.values(0) == 7.0);
        CHECK(eig.values(1) == 3.0);
        CHECK(eig.values(2) == 0.5);
        CHECK(eig.values(3) == -1.0);
    }
    SUBCASE("random symmetric 50x50: reconstruction, residuals, orthonormality, sign rule") {
        std::mt19937_64 rng(2);
        std::normal_distribution<double> g;
        Eigen::MatrixXd a(50, 50);
        for (Eigen::Index i = 0; i < 50; ++i)
            for (Eigen::Index j = 0; j < 50; ++j) a(i, j) = g(rng);
        const Eigen::MatrixXd b = 0.5 * (a + a.transpose());
        const auto eig = eigendecompose_symmetric(b);
        const double norm = b.norm();
        const Eigen::MatrixXd rebuilt = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
        CHECK((rebuilt - b).norm() <= 1e-8 * norm);
        CHECK((eig.vectors.transpose() * eig.vectors - Eigen::MatrixXd::Identity(50, 50)).cwiseAbs().maxCoeff() <= 1e-8);
        for (Eigen::Index p = 0; p < 50; ++p) {
            CHECK((b * eig.vectors.col(p) - eig.values(p) * eig.vectors.col(p)).norm() <= 1e-8 * norm);
            if (p > 0) CHECK(eig.values(p - 1) >= eig.values(p));
            Eigen::Index big = 0;
            eig.vectors.col(p).cwiseAbs().maxCoeff(&big);
            CHECK(eig.vectors(big, p) > 0.0);
        }
        CHECK(eig.values.sum() == doctest::Approx(b.trace()).epsilon(1e-8));
    }
}

TEST_CASE("embed") {
    SUBCASE("colinear points {0, 3, 7}") {
        Eigen::MatrixXd pts(3, 1);
        pts << 0, 3, 7;
        const auto d = euclidean_of(pts);
        const auto e = embed(d, 1);
        const Eigen::Vector3d expected(-10.0 / 3, -1.0 / 3, 11.0 / 3);
        const double sign = e.coordinates(2, 0) > 0 ? 1.0 : -1.0;
        CHECK((sign * e.coordinates.col(0) - expected).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(max_rel_distance_error(d, e) < 1e-9);
    }
    SUBCASE("two points at distance 2") {
        Eigen::Matrix2d d;
        d << 0, 2, 2, 0;
        const auto e = embed(DistanceMatrix(d, Metric::Euclidean), 1);
        CHECK(std::abs(std::abs(e.coordinates(0, 0)) - 1.0) < 1e-12);
        CHECK(e.coordinates(0, 0) == doctest::Approx(-e.coordinates(1, 0)));
    }
    SUBCASE("dimension beyond the positive spectrum is reported with the count") {
        Eigen::MatrixXd pts(3, 1);
        pts << 0, 3, 7;
        try {
            embed(euclidean_of(pts), 2);
            FAIL("expected DimensionUnavailableError");
        } catch (const DimensionUnavailableError& e) {
            CHECK(e.available() == 1);
            CHECK(std::string(e.what()).find("only 1 positive") != std::string::npos);
        }
        CHECK_THROWS_AS(embed(euclidean_of(pts), 0), PreconditionError);
    }
    SUBCASE("round trip for random Euclidean configurations") {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<int> kd(1, 5), nd(8, 50);
        for (int trial = 0; trial < 25; ++trial) {
            const int k = kd(rng);
            const int n = nd(rng);
            const auto d = euclidean_of(random_points(rng, n, k));
            const auto e = embed(d, static_cast<std::size_t>(k));
            CAPTURE(k);
            CAPTURE(n);
            CHECK(max_rel_distance_error(d, e) <= 1e-8);
            CHECK(kruskal_stress(d, e) <= 1e-8);
            // centered coordinates
            CHECK(e.coordinates.colwise().mean().cwiseAbs().maxCoeff() <= 1e-9);
            // column p has squared norm lambda_p
            for (int p = 0; p < k; ++p)
                CHECK(e.coordinates.col(p).squaredNorm() == doctest::Approx(e.eigenvalues(p)).epsilon(1e-9));
            // eigenvalue sum equals trace(B)
            const auto b = double_center(d).entries();
            CHECK(e.eigenvalues.sum() == doctest::Approx(b.trace()).epsilon(1e-8));
        }
    }
    SUBCASE("repeated runs are bit-identical") {
        std::mt19937_64 rng(4);
        const auto d = euclidean_of(random_points(rng, 30, 4));
        const auto a = embed(d, 3);
        const auto b = embed(d, 3);
        CHECK(a.coordinates == b.coordinates);
        CHECK(a.eigenvalues == b.eigenvalues);
    }
    SUBCASE("non-Euclidean dissimilarities surface negative eigenvalues") {
        // Objects 0 and 2 are both midpoints of 1 and 3 yet sit 1 apart.
        Eigen::Matrix4d d;
        d << 0, 1, 1, 1, 1, 0, 1, 2, 1, 1, 0, 1, 1, 2, 1, 0;
        const auto e = embed(DistanceMatrix(d, Metric::Lorentzian), 1);
        CHECK(e.negative_count() > 0);
        CHECK(e.negative_mass() > 0.0);
        CHECK(e.eigenvalues.size() == 4);
    }
}

TEST_CASE("stress and Shepard diagnostics") {
    SUBCASE("n = 1 embedding of a 3-4-5 triangle has positive stress") {
        Eigen::MatrixXd pts(3, 2);
        pts << 0, 0, 3, 0, 0, 4;
        const auto d = euclidean_of(pts);
        const auto e = embed(d, 1);
        // brute force evaluation of stress-1 from the embedded coordinates
        double num = 0.0, den = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const double de = std::abs(e.coordinates(i, 0) - e.coordinates(j, 0));
                num += (d(i, j) - de) * (d(i, j) - de);
                den += d(i, j) * d(i, j);
            }
        const double s = kruskal_stress(d, e);
        CHECK(s > 0.0);
        CHECK(s == doctest::Approx(std::sqrt(num / den)).epsilon(1e-12));
    }
    SUBCASE("shepard pairs") {
        Eigen::MatrixXd pts(3, 2);
        pts << 0, 0, 3, 0, 0, 4;
        const auto d = euclidean_of(pts);
        const auto e = embed(d, 2);
        const auto sp = shepard_points(d, e);
        REQUIRE(sp.size() == 3);
        CHECK(sp[0].first == d(0, 1));
        CHECK(sp[1].first == d(0, 2));
        CHECK(sp[2].first == d(1, 2));
        for (const auto& [a, b] : sp) CHECK(b == doctest::Approx(a).epsilon(1e-9));
    }
    SUBCASE("stress curve is non-increasing and reaches zero at full rank") {
        std::mt19937_64 rng(5);
        const auto d = euclidean_of(random_points(rng, 40, 5));
        const auto curve = stress_curve(d, 5);
        REQUIRE(curve.size() == 5);
        for (std::size_t k = 1; k < curve.size(); ++k) CHECK(curve[k].second <= curve[k - 1].second);
        CHECK(curve.back().second <= 1e-9);
        CHECK(curve.front().first == 1);
        const auto rep = stress_report(d, embed(d, 5));
        CHECK(rep.stress_curve == curve);
        CHECK(rep.shepard_pairs.size() == 40 * 39 / 2);
    }
    SUBCASE("all-zero distances make stress undefined") {
        const DistanceMatrix d(Eigen::MatrixXd::Zero(3, 3), Metric::Euclidean);
        Embedding e;
        e.coordinates = Eigen::MatrixXd::Zero(3, 1);
        e.n = 1;
        CHECK_THROWS_AS(kruskal_stress(d, e), DegenerateInputError);
    }
}
