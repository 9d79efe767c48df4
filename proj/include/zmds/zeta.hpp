#pragma once

#include <complex>
#include <cstddef>
#include <optional>

namespace zmds::zeta {

/// Largest |t| for which the evaluation accuracy is guaranteed.
inline constexpr double kGuaranteedRange = 1.0e4;
inline constexpr std::size_t kMinTerms = 16;

/// Term count used when the caller does not choose one: max(64, ceil(2|t|)).
std::size_t default_terms(double t);

/// Self-reported absolute error bound of an evaluation at `t` with `terms`
/// terms: the accelerated-series truncation bound plus a fixed rounding
/// floor that depends on t only. Non-increasing in `terms`.
double error_bound(double t, std::size_t terms);

struct Evaluation {
    std::complex<double> value;
    std::size_t terms;
    double error_bound;
};

/// zeta(1/2 + i t) via the alternating eta series with binomial-weighted
/// acceleration, zeta(s) = eta(s) / (1 - 2^(1-s)).
///
/// Throws RangeError when |t| exceeds kGuaranteedRange unless
/// `allow_out_of_range` is set, in which case the result carries no accuracy
/// guarantee. Throws PreconditionError when terms < kMinTerms.
Evaluation evaluate_critical(double t, std::optional<std::size_t> terms = std::nullopt,
                             bool allow_out_of_range = false);

inline std::complex<double> zeta_critical(double t,
                                          std::optional<std::size_t> terms = std::nullopt,
                                          bool allow_out_of_range = false) {
    return evaluate_critical(t, terms, allow_out_of_range).value;
}

/// True iff |zeta(1/2 + i t)| < tol. Requires tol > 0.
bool verify_zero(double t, double tol);

}  // namespace zmds::zeta
