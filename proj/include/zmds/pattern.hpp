#pragma once

#include "zmds/mds.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace zmds {

/// series_i ~ offset + A sin(omega i + phi), i = 1..N.
struct SinusoidFit {
    double A = 0.0;
    double omega = 0.0;  // radians per index, in (0, pi)
    double phi = 0.0;    // (-pi, pi]
    double r2 = 0.0;
    double offset = 0.0;
    std::size_t p = 0;   // component index, 0 when fitted standalone
};

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double r2 = 0.0;  // in log-log space
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// r2 at or above which a component is annotated as periodic in reports.
inline constexpr double kPeriodicR2 = 0.8;
inline constexpr std::size_t kMinSeriesLength = 8;

/// Sum of squared residuals of the best c + A sin(omega i + phi) at a fixed
/// omega, with offset, amplitude and phase solved by linear least squares.
double sinusoid_residual(std::span<const double> series, double omega);

/// Least-squares sinusoid with a free offset: coarse omega from the
/// dominant DFT bin of the centered series, linear least squares for
/// (offset, A cos phi, A sin phi) at each candidate omega, then a bounded
/// Brent refinement of omega within one bin of the coarse value. The
/// result is never worse than the best single-bin fit. The offset absorbs
/// any mean, so centering the input first does not change the fit.
///
/// Throws InsufficientDataError for N < 8 and DegenerateSeriesError when the
/// centered series is identically zero.
SinusoidFit fit_sinusoid(std::span<const double> series);

/// One independent fit per embedding column p = 1..p_max. Failures are
/// rethrown as ComponentFitError naming p.
std::vector<SinusoidFit> fit_components(const Embedding& e, std::size_t p_max);

/// OLS on (ln p, ln A). Needs >= 3 points, all coordinates strictly positive.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

/// OLS slope/intercept. Needs >= 2 points with distinct abscissae.
LinearFit fit_linear(std::span<const std::pair<double, double>> points);

}  // namespace zmds
