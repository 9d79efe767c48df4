#include "zmds/zeta.hpp"

#include "zmds/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace zmds::zeta {

namespace {

// 1 - 2^(1-s) at s = 1/2 + i t.
std::complex<double> eta_to_zeta_factor(double t) {
    return 1.0 - std::sqrt(2.0) * std::polar(1.0, -t * std::numbers::ln2);
}

// Weights w_k = 1 - d_k / d_n of the accelerated alternating sum, with
// d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!). Summands are formed in
// log space and each weight is taken as a normalized tail sum, so neither
// overflow nor cancellation occurs for large n.
std::vector<double> acceleration_weights(std::size_t n) {
    std::vector<double> log_a(n + 1);
    log_a[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double num = 4.0 * static_cast<double>(n + i) * static_cast<double>(n - i);
        const double den = static_cast<double>(2 * i + 1) * static_cast<double>(2 * i + 2);
        log_a[i + 1] = log_a[i] + std::log(num / den);
    }
    double peak = log_a[0];
    for (double v : log_a) peak = std::max(peak, v);

    std::vector<double> tail(n + 1);
    double acc = 0.0;
    for (std::size_t i = n + 1; i-- > 0;) {
        tail[i] = acc;  // sum over indices strictly above i
        acc += std::exp(log_a[i] - peak);
    }
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = tail[k] / acc;
    return w;
}

}  // namespace

std::size_t default_terms(double t) {
    return std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(2.0 * std::abs(t))));
}

double error_bound(double t, std::size_t terms) {
    const double at = std::abs(t);
    const double log_trunc = std::log(3.0) + std::log1p(2.0 * at) + std::numbers::pi * at / 2.0 -
                             static_cast<double>(terms) * std::log(3.0 + std::sqrt(8.0)) -
                             std::log(std::abs(eta_to_zeta_factor(t)));
    const double rounding = 32.0 * std::numeric_limits<double>::epsilon() * (1.0 + at);
    return std::exp(log_trunc) + rounding;
}

Evaluation evaluate_critical(double t, std::optional<std::size_t> terms, bool allow_out_of_range) {
    if (!std::isfinite(t)) throw PreconditionError("ordinate must be finite");
    if (std::abs(t) > kGuaranteedRange && !allow_out_of_range)
        throw RangeError("|t| = " + std::to_string(std::abs(t)) +
                         " exceeds the guaranteed range of 1e4");
    const std::size_t n = terms.value_or(default_terms(t));
    if (n < kMinTerms)
        throw PreconditionError("at least " + std::to_string(kMinTerms) + " terms are required");

    const auto w = acceleration_weights(n);
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lk = std::log(static_cast<double>(k + 1));
        const double mag = w[k] * std::exp(-0.5 * lk);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double phase = t * lk;
        re += sign * mag * std::cos(phase);
        im -= sign * mag * std::sin(phase);
    }
    const std::complex<double> eta(re, im);
    return {eta / eta_to_zeta_factor(t), n, error_bound(t, n)};
}

bool verify_zero(double t, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("verification tolerance must be positive");
    return std::abs(zeta_critical(t)) < tol;
}

}  // namespace zmds::zeta
