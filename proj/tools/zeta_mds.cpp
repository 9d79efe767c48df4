// zeta_mds: classical MDS of windowed zeta-zero ordinates under six metrics,
// with sinusoid analysis of the resulting components.

#include "zmds/cli.hpp"
#include "zmds/errors.hpp"
#include "zmds/version.hpp"

#include <cctype>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

const std::map<std::string, zmds::Metric> kMetricNames{
    {"arccosine", zmds::Metric::Arccosine}, {"jaccard", zmds::Metric::Jaccard},
    {"chebyshev", zmds::Metric::Chebyshev}, {"euclidean", zmds::Metric::Euclidean},
    {"canberra", zmds::Metric::Canberra},   {"lorentzian", zmds::Metric::Lorentzian}};

std::string lower(std::string s) {
    for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

struct Flags {
    zmds::cli::RunConfig config;
    std::string metric = "lorentzian";
    std::string approach = "a1";
    std::size_t limit = 1000;
};

void add_common(CLI::App& sub, Flags& f) {
    auto& c = f.config;
    sub.add_option("--zeros", c.zeros_path, "Zero-ordinate text file")->required();
    sub.add_option("--first", c.first, "Number of leading zeros to use")->capture_default_str();
    sub.add_option("--out", c.out_dir, "Output directory (fallback: $ZETA_MDS_OUT)");
}

void add_pipeline(CLI::App& sub, Flags& f) {
    auto& c = f.config;
    sub.add_option("--metric", f.metric, "Distance metric")
        ->check(CLI::IsMember(kMetricNames, CLI::ignore_case))
        ->capture_default_str();
    sub.add_option("--m", c.m, "Window length")->capture_default_str()->check(CLI::PositiveNumber);
    sub.add_option("--approach", f.approach, "Windowing: a1 (disjoint) or a2 (sliding)")
        ->check(CLI::IsMember({"a1", "a2"}, CLI::ignore_case))
        ->capture_default_str();
    sub.add_option("--dims", c.dims, "Embedding dimension")->capture_default_str()->check(CLI::PositiveNumber);
    sub.add_option("--limit", f.limit, "Maximum number of objects N (0: no limit)")->capture_default_str();
    sub.add_option("--components", c.components, "Components to fit")->capture_default_str();
    sub.add_flag("--jaccard-literal", c.jaccard_literal, "Use the Tanimoto similarity itself as Jaccard");
    sub.add_flag("--chebyshev-literal", c.chebyshev_literal, "Use max_k(|a_k| - b_k) as Chebyshev");
    sub.add_option("--seed", c.seed, "Seed for the axiom sampling")->capture_default_str();
    sub.add_option("--azimuth", c.view.azimuth, "Locus view azimuth (degrees)")->capture_default_str();
    sub.add_option("--elevation", c.view.elevation, "Locus view elevation (degrees)")->capture_default_str();
    sub.add_flag("--write-distances", c.write_distances, "Also write the distance matrix CSV");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multidimensional scaling of Riemann zeta zeros"};
    app.set_version_flag("--version", zmds::kVersion);
    app.require_subcommand(1);

    Flags f;
    std::vector<std::string> sweep_metrics{"arccosine", "jaccard",  "chebyshev",
                                           "euclidean", "canberra", "lorentzian"};

    auto* validate = app.add_subcommand("validate", "Check leading ordinates against zeta(1/2 + it)");
    add_common(*validate, f);
    validate->add_option("--count", f.config.validate_count, "Ordinates to check")->capture_default_str();
    validate->add_option("--tol", f.config.validate_tol, "Tolerance on |zeta|")->capture_default_str();

    auto* embed = app.add_subcommand("embed", "Embed windowed zeros with classical MDS");
    add_common(*embed, f);
    add_pipeline(*embed, f);

    auto* analyze = app.add_subcommand("analyze", "Fit sinusoids to embedding components");
    add_common(*analyze, f);
    add_pipeline(*analyze, f);
    analyze->add_option("--embedding", f.config.embedding_path, "Analyze this embedding CSV instead");
    analyze->add_option("--periodic-r2", f.config.periodic_r2, "r2 annotated as periodic")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Embed under several metrics");
    add_common(*sweep, f);
    add_pipeline(*sweep, f);
    sweep->add_option("--metrics", sweep_metrics, "Metrics to run")
        ->delimiter(',')
        ->check(CLI::IsMember(kMetricNames, CLI::ignore_case))
        ->capture_default_str();

    // The embedding file replaces the zero list for analyze.
    analyze->get_option("--zeros")->required(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : zmds::cli::kInputError;
    }

    auto& config = f.config;
    config.metric = zmds::parse_metric(lower(f.metric));
    config.approach = zmds::parse_approach(lower(f.approach));
    config.limit = f.limit == 0 ? std::nullopt : std::optional<std::size_t>(f.limit);

    if (*analyze && config.zeros_path.empty() && config.embedding_path.empty()) {
        std::cerr << "analyze needs --zeros or --embedding\n";
        return zmds::cli::kInputError;
    }

    if (*validate) return zmds::cli::cmd_validate(config, std::cout, std::cerr);
    if (*embed) return zmds::cli::cmd_embed(config, std::cout, std::cerr);
    if (*analyze) return zmds::cli::cmd_analyze(config, std::cout, std::cerr);

    std::vector<zmds::Metric> metrics;
    for (const auto& name : sweep_metrics) metrics.push_back(zmds::parse_metric(lower(name)));
    return zmds::cli::cmd_sweep(config, metrics, std::cout, std::cerr);
}
