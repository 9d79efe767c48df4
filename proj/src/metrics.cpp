#include "zmds/metrics.hpp"

#include "zmds/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <string>

namespace zmds {

std::string_view to_string(Metric metric) {
    switch (metric) {
        case Metric::Arccosine: return "arccosine";
        case Metric::Jaccard: return "jaccard";
        case Metric::Chebyshev: return "chebyshev";
        case Metric::Euclidean: return "euclidean";
        case Metric::Canberra: return "canberra";
        case Metric::Lorentzian: return "lorentzian";
    }
    return "unknown";
}

Metric parse_metric(std::string_view name) {
    for (Metric m : kAllMetrics)
        if (to_string(m) == name) return m;
    throw PreconditionError("unknown metric '" + std::string(name) + "'");
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

bool is_zero(std::span<const double> a) {
    return std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0; });
}

double arccosine(std::span<const double> a, std::span<const double> b) {
    if (is_zero(a) || is_zero(b))
        throw DegenerateInputError("arccosine distance is undefined for a zero vector");
    const double c = dot(a, b) / std::sqrt(dot(a, a) * dot(b, b));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double tanimoto(std::span<const double> a, std::span<const double> b) {
    if (is_zero(a) && is_zero(b))
        throw DegenerateInputError("jaccard distance is undefined for two zero vectors");
    const double ab = dot(a, b);
    return ab / (dot(a, a) + dot(b, b) - ab);
}

double chebyshev(std::span<const double> a, std::span<const double> b, bool literal) {
    double best = literal ? -std::numeric_limits<double>::infinity() : 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double term = literal ? std::abs(a[k]) - b[k] : std::abs(a[k] - b[k]);
        best = std::max(best, term);
    }
    return best;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

double canberra(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double den = std::abs(a[k]) + std::abs(b[k]);
        if (den == 0.0) continue;  // 0/0 term counts as 0
        s += std::abs(a[k] - b[k]) / den;
    }
    return s;
}

double lorentzian(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::log1p(std::abs(a[k] - b[k]));
    return s;
}

}  // namespace

double distance(Metric metric, std::span<const double> a, std::span<const double> b,
                const DistanceOptions& options) {
    if (a.size() != b.size())
        throw DimensionError("vector lengths differ (" + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()) + ")");
    if (a.empty()) throw DimensionError("vectors must have at least one component");
    switch (metric) {
        case Metric::Arccosine: return arccosine(a, b);
        case Metric::Jaccard: {
            const double t = tanimoto(a, b);
            return options.jaccard_literal ? t : 1.0 - t;
        }
        case Metric::Chebyshev: return chebyshev(a, b, options.chebyshev_literal);
        case Metric::Euclidean: return euclidean(a, b);
        case Metric::Canberra: return canberra(a, b);
        case Metric::Lorentzian: return lorentzian(a, b);
    }
    throw PreconditionError("unhandled metric");
}

DistanceMatrix::DistanceMatrix(Eigen::MatrixXd entries, Metric metric)
    : entries_(std::move(entries)), metric_(metric) {
    if (entries_.rows() != entries_.cols()) throw DimensionError("distance matrix must be square");
}

DistanceMatrix distance_matrix(const ObjectSet& objects, Metric metric,
                               const DistanceOptions& options) {
    const std::size_t n = objects.rows();
    if (n < 2) throw PreconditionError("a distance matrix needs at least 2 objects");
    if (n > kMaxObjects) {
        const double gib = static_cast<double>(n) * static_cast<double>(n) * 3.0 * sizeof(double) /
                           (1024.0 * 1024.0 * 1024.0);
        throw MemoryLimitError(std::to_string(n) + " objects exceed the dense limit of " +
                               std::to_string(kMaxObjects) + " (about " + std::to_string(gib) +
                               " GiB for the distance, Gram and eigenvector matrices)");
    }
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.0;
            try {
                v = distance(metric, objects.row(i), objects.row(j), options);
            } catch (const DegenerateInputError& e) {
                throw DegenerateInputError(e.what(), i, j);
            }
            if (!std::isfinite(v))
                throw DegenerateInputError("non-finite " + std::string(to_string(metric)) +
                                               " distance",
                                           i, j);
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            d(ii, jj) = v;
            d(jj, ii) = v;
        }
    }
    return DistanceMatrix(std::move(d), metric);
}

void write_distance_csv(const DistanceMatrix& d, std::ostream& out) {
    out << "i,j,d\n" << std::setprecision(17);
    const std::size_t n = d.n_objects();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out << i + 1 << ',' << j + 1 << ',' << d(i, j) << '\n';
}

namespace {

bool within(double lhs, double rhs) {
    return lhs <= rhs + kAxiomTolerance * std::max(1.0, std::abs(rhs));
}

void record(AxiomReport& report, Axiom axiom, std::size_t i, std::size_t j, std::size_t k) {
    if (report.counterexamples.size() < AxiomReport::kMaxCounterexamples)
        report.counterexamples.push_back({axiom, i, j, k});
}

}  // namespace

AxiomReport check_axioms(Metric metric, const ObjectSet& objects, std::size_t samples,
                         std::uint64_t seed, const DistanceOptions& options) {
    if (samples < 1) throw PreconditionError("at least one sample is required");
    const std::size_t n = objects.rows();
    if (n < 3) throw PreconditionError("axiom checks need at least 3 objects");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    // NaN marks a failed evaluation; every comparison against it is false.
    auto dist = [&](std::size_t a, std::size_t b) {
        try {
            return distance(metric, objects.row(a), objects.row(b), options);
        } catch (const Error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    AxiomReport report;
    std::size_t ok = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t i = pick(rng);
        const double d = dist(i, i);
        if (std::abs(d) <= kAxiomTolerance) {
            ++ok;
        } else {
            record(report, Axiom::Identity, i, i, i);
        }
    }
    report.identity_trials = samples;
    report.identity_pass = static_cast<double>(ok) / static_cast<double>(samples);

    ok = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        const double dij = dist(i, j);
        const double dji = dist(j, i);
        if (std::abs(dij - dji) <= kAxiomTolerance * std::max(1.0, std::abs(dij))) {
            ++ok;
        } else {
            record(report, Axiom::Symmetry, i, j, j);
        }
    }
    report.symmetry_trials = samples;
    report.symmetry_pass = static_cast<double>(ok) / static_cast<double>(samples);

    ok = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        const std::size_t k = pick(rng);
        if (within(dist(i, j), dist(i, k) + dist(j, k))) {
            ++ok;
        } else {
            record(report, Axiom::Triangle, i, j, k);
        }
    }
    report.triangle_trials = samples;
    report.triangle_pass = static_cast<double>(ok) / static_cast<double>(samples);
    return report;
}

}  // namespace zmds
