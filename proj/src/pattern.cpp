#include "zmds/pattern.hpp"

#include "zmds/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/minima.hpp>

namespace zmds {

namespace {

struct LinearSolution {
    double sin_coef;
    double cos_coef;
    double offset;
    double sse;
};

// Least squares of y on [sin(omega i), cos(omega i), 1], i = 1..N. Column
// pivoting keeps the solve stable as omega -> 0, where cos and the offset
// become collinear.
LinearSolution solve_at(std::span<const double> y, double omega) {
    const auto n = static_cast<Eigen::Index>(y.size());
    Eigen::MatrixXd design(n, 3);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double arg = omega * static_cast<double>(k + 1);
        design(k, 0) = std::sin(arg);
        design(k, 1) = std::cos(arg);
        design(k, 2) = 1.0;
    }
    const Eigen::Map<const Eigen::VectorXd> rhs(y.data(), n);
    const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
    const double sse = (rhs - design * coef).squaredNorm();
    return {coef(0), coef(1), coef(2), sse};
}

// Index of the dominant DFT bin among k = 1..K with 2 pi k / N < pi.
std::size_t dominant_bin(std::span<const double> y) {
    const std::size_t n = y.size();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::size_t best = 1;
    double best_power = -1.0;
    for (std::size_t k = 1; 2 * k < n; ++k) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double arg = step * static_cast<double>(k) * static_cast<double>(i);
            re += y[i] * std::cos(arg);
            im -= y[i] * std::sin(arg);
        }
        const double power = re * re + im * im;
        if (power > best_power) {
            best_power = power;
            best = k;
        }
    }
    return best;
}

double wrap_phase(double phi) {
    if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
    if (phi > std::numbers::pi) phi -= 2.0 * std::numbers::pi;
    return phi;
}

LinearFit ols(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double dx = x[k] - mx;
        const double dy = y[k] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw DegenerateInputError("all abscissae are equal; slope is undefined");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double sse = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double r = y[k] - (fit.intercept + fit.slope * x[k]);
        sse += r * r;
    }
    // A response that is flat up to rounding is fitted exactly by slope 0.
    const double flat = 16.0 * n * std::pow(std::numeric_limits<double>::epsilon() * std::abs(my), 2);
    fit.r2 = syy <= flat ? 1.0 : std::clamp(1.0 - sse / syy, 0.0, 1.0);
    return fit;
}

}  // namespace

double sinusoid_residual(std::span<const double> series, double omega) {
    return solve_at(series, omega).sse;
}

SinusoidFit fit_sinusoid(std::span<const double> series) {
    const std::size_t n = series.size();
    if (n < kMinSeriesLength)
        throw InsufficientDataError("sinusoid fit needs at least " +
                                    std::to_string(kMinSeriesLength) + " samples, got " +
                                    std::to_string(n));
    double mean = 0.0;
    for (double v : series) {
        if (!std::isfinite(v)) throw DegenerateSeriesError("series contains non-finite values");
        mean += v;
    }
    mean /= static_cast<double>(n);
    // Centered copy for the coarse DFT search; the fits solve for the offset.
    std::vector<double> centered(series.begin(), series.end());
    double sst = 0.0;
    for (double& v : centered) {
        v -= mean;
        sst += v * v;
    }
    if (sst == 0.0) throw DegenerateSeriesError("series is constant (identically zero after centering)");
    const std::span<const double> y = series;

    const double bin = 2.0 * std::numbers::pi / static_cast<double>(n);
    const std::size_t k = dominant_bin(centered);
    const double edge = 1e-9 * bin;
    const double lo = std::max(static_cast<double>(k - 1) * bin, edge);
    const double hi = std::min(static_cast<double>(k + 1) * bin, std::numbers::pi - edge);

    double best_omega = static_cast<double>(k) * bin;
    double best_sse = solve_at(y, best_omega).sse;

    constexpr int kGrid = 64;
    const double h = (hi - lo) / kGrid;
    for (int g = 0; g <= kGrid; ++g) {
        const double w = lo + h * g;
        const double s = solve_at(y, w).sse;
        if (s < best_sse) {
            best_sse = s;
            best_omega = w;
        }
    }

    const double a = std::max(lo, best_omega - h);
    const double b = std::min(hi, best_omega + h);
    const auto [w_ref, s_ref] = boost::math::tools::brent_find_minima(
        [&](double w) { return solve_at(y, w).sse; }, a, b, std::numeric_limits<double>::digits);
    if (s_ref < best_sse) {
        best_sse = s_ref;
        best_omega = w_ref;
    }

    const auto sol = solve_at(y, best_omega);
    SinusoidFit fit;
    fit.omega = best_omega;
    fit.A = std::hypot(sol.sin_coef, sol.cos_coef);
    fit.phi = wrap_phase(std::atan2(sol.cos_coef, sol.sin_coef));
    fit.r2 = std::clamp(1.0 - sol.sse / sst, 0.0, 1.0);
    fit.offset = sol.offset;
    return fit;
}

std::vector<SinusoidFit> fit_components(const Embedding& e, std::size_t p_max) {
    if (p_max > e.n)
        throw PreconditionError("requested " + std::to_string(p_max) +
                                " components but the embedding has n = " + std::to_string(e.n));
    std::vector<SinusoidFit> fits;
    fits.reserve(p_max);
    std::vector<double> column(e.n_objects());
    for (std::size_t p = 1; p <= p_max; ++p) {
        const auto col = e.coordinates.col(static_cast<Eigen::Index>(p - 1));
        std::copy(col.begin(), col.end(), column.begin());
        try {
            auto fit = fit_sinusoid(column);
            fit.p = p;
            fits.push_back(fit);
        } catch (const DegenerateSeriesError& err) {
            throw ComponentFitError(p, std::string("DegenerateSeriesError: ") + err.what());
        } catch (const InsufficientDataError& err) {
            throw ComponentFitError(p, std::string("InsufficientDataError: ") + err.what());
        }
    }
    return fits;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3)
        throw InsufficientDataError("power-law fit needs at least 3 points, got " +
                                    std::to_string(points.size()));
    std::vector<double> lx, ly;
    lx.reserve(points.size());
    ly.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0))
            throw DomainError("power-law fit requires strictly positive coordinates");
        lx.push_back(std::log(x));
        ly.push_back(std::log(y));
    }
    const auto lin = ols(lx, ly);
    return {lin.slope, std::exp(lin.intercept), lin.r2};
}

LinearFit fit_linear(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2)
        throw InsufficientDataError("linear fit needs at least 2 points, got " +
                                    std::to_string(points.size()));
    std::vector<double> x, y;
    for (const auto& [px, py] : points) {
        x.push_back(px);
        y.push_back(py);
    }
    return ols(x, y);
}

}  // namespace zmds
