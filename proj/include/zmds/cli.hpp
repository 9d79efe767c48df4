#pragma once

#include "zmds/metrics.hpp"
#include "zmds/svg.hpp"
#include "zmds/zeros.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zmds::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kVerificationFailed = 3,
    kEmbeddingFailed = 4,
    kAnalysisFailed = 5,
};

struct RunConfig {
    std::string zeros_path;
    Metric metric = Metric::Lorentzian;
    std::size_t m = 10;
    Approach approach = Approach::A1;
    std::size_t dims = 3;
    std::optional<std::size_t> limit = 1000;
    std::size_t components = 10;
    /// Empty: fall back to $ZETA_MDS_OUT, then "zeta_mds_out".
    std::string out_dir;
    bool jaccard_literal = false;
    bool chebyshev_literal = false;
    std::uint64_t seed = 1;
    svg::View view;

    /// Number of leading zeros taken from the input file.
    std::size_t first = 10000;
    /// validate: how many leading ordinates to check, and the |zeta| tolerance.
    std::size_t validate_count = 25;
    double validate_tol = 1e-5;
    /// analyze: fit this embedding CSV instead of computing one.
    std::string embedding_path;
    bool write_distances = false;
    std::size_t axiom_samples = 1000;
    double periodic_r2 = 0.8;

    DistanceOptions distance_options() const { return {jaccard_literal, chebyshev_literal}; }
};

/// Output directory after applying the environment fallback.
std::string resolve_out_dir(const RunConfig& config);

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_embed(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Runs embed per metric into <out>/<metric>/ and writes a combined panel
/// figure. Succeeds when at least one metric succeeds.
int cmd_sweep(const RunConfig& config, const std::vector<Metric>& metrics, std::ostream& out,
              std::ostream& err);

}  // namespace zmds::cli
