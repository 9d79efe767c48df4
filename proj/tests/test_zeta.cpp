#include "zmds/errors.hpp"
#include "zmds/zeros.hpp"
#include "zmds/zeta.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace zmds;

namespace {

// Independent oracle: plain partial sums of the alternating eta series,
// smoothed by repeated averaging of consecutive partial sums.
std::complex<double> zeta_by_averaged_partial_sums(double t, std::size_t terms, int rounds) {
    const std::complex<double> s(0.5, t);
    std::vector<std::complex<double>> partial;
    partial.reserve(terms);
    std::complex<double> acc = 0.0;
    for (std::size_t n = 1; n <= terms; ++n) {
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        acc += sign * std::exp(-s * std::log(static_cast<double>(n)));
        partial.push_back(acc);
    }
    std::vector<std::complex<double>> tail(partial.end() - rounds - 1, partial.end());
    for (int r = 0; r < rounds; ++r)
        for (std::size_t k = 0; k + 1 < tail.size() - r; ++k) tail[k] = 0.5 * (tail[k] + tail[k + 1]);
    const std::complex<double> eta = tail[0];
    return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

}  // namespace

TEST_CASE("default term rule") {
    CHECK(zeta::default_terms(0.0) == 64);
    CHECK(zeta::default_terms(14.1) == 64);
    CHECK(zeta::default_terms(100.2) == 201);
    CHECK(zeta::default_terms(-1e4) == 20000);
}

TEST_CASE("zeta(1/2) against the averaged partial-sum oracle") {
    const auto z = zeta::zeta_critical(0.0);
    const auto oracle = zeta_by_averaged_partial_sums(0.0, 4000, 40);
    CHECK(std::abs(z - oracle) < 1e-9);
    CHECK(z.real() == doctest::Approx(-1.4603545).epsilon(1e-7));
    CHECK(std::abs(z.imag()) < 1e-12);
}

TEST_CASE("small ordinates agree with the averaged partial-sum oracle") {
    for (double t : {3.0, 10.0, 14.134725142, 15.0, 27.5, 40.0}) {
        CAPTURE(t);
        const auto oracle = zeta_by_averaged_partial_sums(t, 20000, 60);
        CHECK(std::abs(zeta::zeta_critical(t) - oracle) < 1e-8);
    }
}

TEST_CASE("first zero, a non-zero and a value near the range limit") {
    CHECK(std::abs(zeta::zeta_critical(14.134725142)) < 1e-6);
    CHECK(std::abs(zeta::zeta_critical(10.0)) > 0.1);
    // Reference values computed with an arbitrary-precision library (30 digits).
    CHECK(std::abs(zeta::zeta_critical(10.0) -
                   std::complex<double>(1.5448952202967528, -0.11533646527127338)) < 1e-8);
    CHECK(std::abs(zeta::zeta_critical(15.0) -
                   std::complex<double>(0.14710990704334914, 0.70475224164321188)) < 1e-8);
    CHECK(std::abs(zeta::zeta_critical(100.5) -
                   std::complex<double>(1.7377740212065348, -1.4637577703056987)) < 1e-8);
    CHECK(std::abs(zeta::zeta_critical(1000.25) -
                   std::complex<double>(1.7162948782926264, 1.1046029153847498)) < 1e-8);
    CHECK(std::abs(zeta::zeta_critical(9999.5) -
                   std::complex<double>(1.3969480586180371, -3.4856084940897479)) < 1e-8);
}

TEST_CASE("default term count matches a doubled-term reference") {
    for (double t : {0.0, 14.134725142, 50.0, 333.3, 2500.0, 9000.0}) {
        CAPTURE(t);
        const auto base = zeta::evaluate_critical(t);
        const auto ref = zeta::evaluate_critical(t, 2 * base.terms);
        CHECK(std::abs(base.value - ref.value) < 1e-8);
        CHECK(base.error_bound < 1e-8);
    }
}

TEST_CASE("conjugate symmetry") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> pick(0.0, 500.0);
    for (int k = 0; k < 50; ++k) {
        const double t = pick(rng);
        const auto a = zeta::zeta_critical(t);
        const auto b = zeta::zeta_critical(-t);
        CHECK(std::abs(b - std::conj(a)) < 1e-10);
    }
}

TEST_CASE("error bound never increases with more terms") {
    for (double t : {0.0, 20.0, 700.0, 9999.0}) {
        double prev = zeta::error_bound(t, zeta::kMinTerms);
        for (std::size_t n = zeta::kMinTerms + 1; n < 30000; n += 97) {
            const double b = zeta::error_bound(t, n);
            CHECK(b <= prev);
            prev = b;
        }
    }
}

TEST_CASE("range and precondition errors") {
    CHECK_THROWS_AS(zeta::zeta_critical(10001.0), RangeError);
    CHECK_NOTHROW(zeta::zeta_critical(10001.0, std::nullopt, true));
    CHECK_THROWS_AS(zeta::zeta_critical(10.0, 15), PreconditionError);
    CHECK_THROWS_AS(zeta::verify_zero(14.134725142, 0.0), PreconditionError);
    CHECK_THROWS_AS(zeta::verify_zero(2e4, 1e-5), RangeError);
}

TEST_CASE("verify_zero") {
    CHECK(zeta::verify_zero(14.134725142, 1e-5));
    CHECK_FALSE(zeta::verify_zero(15.0, 1e-5));
}

TEST_CASE("every ordinate of the bundled fixture verifies") {
    const auto zeros = load_zeros(ZMDS_TEST_DATA "/zeros_first_100.txt");
    REQUIRE(zeros.size() == 100);
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        CAPTURE(k);
        CHECK(zeta::verify_zero(zeros[k], 1e-5));
    }
}
