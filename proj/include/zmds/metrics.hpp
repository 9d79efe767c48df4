#pragma once

#include "zmds/zeros.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace zmds {

enum class Metric { Arccosine, Jaccard, Chebyshev, Euclidean, Canberra, Lorentzian };

inline constexpr std::array<Metric, 6> kAllMetrics{Metric::Arccosine, Metric::Jaccard,
                                                   Metric::Chebyshev, Metric::Euclidean,
                                                   Metric::Canberra,  Metric::Lorentzian};

std::string_view to_string(Metric metric);
/// Lower-case metric name as used on the command line.
Metric parse_metric(std::string_view name);

/// Switches that reproduce formulas exactly as sometimes printed in the
/// literature, for comparison runs. Neither is a metric:
///  - jaccard_literal: the Tanimoto similarity T itself instead of 1 - T;
///  - chebyshev_literal: max_k(|a_k| - b_k), asymmetric and possibly negative.
struct DistanceOptions {
    bool jaccard_literal = false;
    bool chebyshev_literal = false;
};

/// Dissimilarity between two equal-length vectors.
///
/// Throws DimensionError on length mismatch or empty input and
/// DegenerateInputError for a zero vector under Arccosine or Jaccard.
double distance(Metric metric, std::span<const double> a, std::span<const double> b,
                const DistanceOptions& options = {});

/// Dense symmetric N x N dissimilarity matrix with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix(Eigen::MatrixXd entries, Metric metric);

    const Eigen::MatrixXd& entries() const noexcept { return entries_; }
    double operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    std::size_t n_objects() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    Metric metric() const noexcept { return metric_; }

private:
    Eigen::MatrixXd entries_;
    Metric metric_;
};

/// Upper bound on N accepted by distance_matrix (dense storage).
inline constexpr std::size_t kMaxObjects = 12000;

/// Fills the upper triangle once per unordered pair and mirrors it; the
/// diagonal is exactly zero. Throws DegenerateInputError naming the pair on a
/// failing distance, MemoryLimitError when N exceeds kMaxObjects.
DistanceMatrix distance_matrix(const ObjectSet& objects, Metric metric,
                               const DistanceOptions& options = {});

/// Writes `i,j,d` rows for the upper triangle, 1-based indices.
void write_distance_csv(const DistanceMatrix& d, std::ostream& out);

enum class Axiom { Identity, Symmetry, Triangle };

struct AxiomViolation {
    Axiom axiom;
    std::size_t i;
    std::size_t j;
    std::size_t k;
};

struct AxiomReport {
    double identity_pass = 1.0;
    double symmetry_pass = 1.0;
    double triangle_pass = 1.0;
    std::size_t identity_trials = 0;
    std::size_t symmetry_trials = 0;
    std::size_t triangle_trials = 0;
    /// At most kMaxCounterexamples entries are kept.
    std::vector<AxiomViolation> counterexamples;

    static constexpr std::size_t kMaxCounterexamples = 64;
    bool all_pass() const noexcept { return counterexamples.empty(); }
};

/// Comparison tolerance for the axiom checks, scaled by max(1, |rhs|).
inline constexpr double kAxiomTolerance = 1e-12;

/// Samples `samples` objects, pairs and triples (with a seeded generator) and
/// checks identity, symmetry and the triangle inequality on each. Distance
/// failures count as axiom failures. Requires samples >= 1 and N >= 3.
AxiomReport check_axioms(Metric metric, const ObjectSet& objects, std::size_t samples,
                         std::uint64_t seed, const DistanceOptions& options = {});

}  // namespace zmds
