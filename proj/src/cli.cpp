#include "zmds/cli.hpp"

#include "zmds/errors.hpp"
#include "zmds/io.hpp"
#include "zmds/mds.hpp"
#include "zmds/pattern.hpp"
#include "zmds/version.hpp"
#include "zmds/zeta.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace zmds::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

/// Failure of one pipeline stage, mapped to an exit code by the caller.
struct StageError {
    int code;
    std::string stage;
    std::string message;
};

ordered_json config_json(const RunConfig& c) {
    ordered_json j;
    j["zeros"] = c.zeros_path;
    j["first"] = c.first;
    j["metric"] = std::string(to_string(c.metric));
    j["m"] = c.m;
    j["approach"] = std::string(to_string(c.approach));
    j["dims"] = c.dims;
    j["limit"] = c.limit ? ordered_json(*c.limit) : ordered_json(nullptr);
    j["components"] = c.components;
    j["jaccard_literal"] = c.jaccard_literal;
    j["chebyshev_literal"] = c.chebyshev_literal;
    j["seed"] = c.seed;
    j["azimuth"] = c.view.azimuth;
    j["elevation"] = c.view.elevation;
    return j;
}

// Everything that determines the embedding; used to decide whether an
// existing embedding in the output directory can be reused.
ordered_json embed_key(const RunConfig& c, const std::string& digest) {
    ordered_json j;
    j["sha256"] = digest;
    j["first"] = c.first;
    j["metric"] = std::string(to_string(c.metric));
    j["m"] = c.m;
    j["approach"] = std::string(to_string(c.approach));
    j["dims"] = c.dims;
    j["limit"] = c.limit ? ordered_json(*c.limit) : ordered_json(nullptr);
    j["jaccard_literal"] = c.jaccard_literal;
    j["chebyshev_literal"] = c.chebyshev_literal;
    return j;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path.string() + "'");
    f << text;
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path.string() + "'");
    writer(f);
}

void write_manifest(const fs::path& dir, const std::string& command, const RunConfig& config,
                    const ordered_json& input, const std::vector<std::string>& outputs,
                    const ordered_json& extra = ordered_json::object()) {
    ordered_json j;
    j["tool"] = "zeta_mds";
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = config_json(config);
    j["input"] = input;
    j["outputs"] = outputs;
    for (const auto& [k, v] : extra.items()) j[k] = v;
    write_text(dir / ("manifest-" + command + ".json"), j.dump(2) + "\n");
}

fs::path prepare_out_dir(const RunConfig& config) {
    fs::path dir(resolve_out_dir(config));
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw StageError{kInputError, "output", "cannot create '" + dir.string() + "': " + ec.message()};
    return dir;
}

struct LoadedZeros {
    ZeroList zeros;
    std::string digest;
};

LoadedZeros load_input(const RunConfig& config) {
    try {
        LoadedZeros in{load_zeros(config.zeros_path).prefix(config.first), {}};
        in.digest = io::sha256_file(config.zeros_path);
        return in;
    } catch (const Error& e) {
        throw StageError{kInputError, "input", e.what()};
    }
}

ordered_json input_json(const RunConfig& config, const LoadedZeros& in, std::size_t objects) {
    ordered_json j;
    j["path"] = config.zeros_path;
    j["sha256"] = in.digest;
    j["zeros_used"] = in.zeros.size();
    if (objects > 0) j["objects"] = objects;
    return j;
}

struct EmbedOutcome {
    Embedding embedding;
    double stress = 0.0;
    std::optional<SinusoidFit> first_component;
};

std::string fixed(double v, int digits = 6) {
    std::ostringstream s;
    s << std::setprecision(digits) << v;
    return s.str();
}

EmbedOutcome run_embed(const RunConfig& config, std::ostream& out) {
    const fs::path dir = prepare_out_dir(config);
    const auto in = load_input(config);

    const auto stage = [](const char* name, auto&& fn) {
        try {
            return fn();
        } catch (const Error& e) {
            throw StageError{kEmbeddingFailed, name, e.what()};
        }
    };

    const ObjectSet objects =
        stage("windowing", [&] { return make_windows(in.zeros, config.m, config.approach, config.limit); });
    const DistanceMatrix dist = stage(
        "distances", [&] { return distance_matrix(objects, config.metric, config.distance_options()); });
    const Embedding emb = stage("embedding", [&] { return embed(dist, config.dims); });
    const StressReport stress = stage("stress", [&] { return stress_report(dist, emb); });
    const AxiomReport axioms = stage("axioms", [&] {
        return check_axioms(config.metric, objects, config.axiom_samples, config.seed,
                            config.distance_options());
    });

    EmbedOutcome result{emb, stress.stress_1, std::nullopt};
    if (emb.n_objects() >= kMinSeriesLength) {
        try {
            auto f = fit_sinusoid(std::vector<double>(emb.coordinates.col(0).begin(),
                                                      emb.coordinates.col(0).end()));
            f.p = 1;
            result.first_component = f;
        } catch (const Error&) {
        }
    }

    std::vector<std::string> outputs{"embedding.csv", "eigenvalues.csv", "stress.csv",
                                     "shepard.csv",   "locus.svg",       "report.txt"};
    write_file(dir / "embedding.csv", [&](std::ostream& f) { io::write_embedding_csv(emb, f); });
    write_file(dir / "eigenvalues.csv", [&](std::ostream& f) { io::write_eigenvalues_csv(emb.eigenvalues, f); });
    write_file(dir / "stress.csv", [&](std::ostream& f) { io::write_stress_csv(stress.stress_curve, f); });
    write_file(dir / "shepard.csv", [&](std::ostream& f) { io::write_shepard_csv(stress.shepard_pairs, f); });
    if (config.write_distances) {
        write_file(dir / "distances.csv", [&](std::ostream& f) { write_distance_csv(dist, f); });
        outputs.emplace_back("distances.csv");
    }
    const std::string title = std::string(to_string(config.metric)) + ", m = " +
                              std::to_string(config.m) + ", " + std::string(to_string(config.approach)) +
                              ", N = " + std::to_string(objects.rows());
    write_text(dir / "locus.svg", svg::render_locus(emb, config.view, title));

    std::ostringstream rep;
    rep << "metric: " << to_string(config.metric)
        << (config.jaccard_literal && config.metric == Metric::Jaccard ? " (literal Tanimoto form)" : "")
        << (config.chebyshev_literal && config.metric == Metric::Chebyshev ? " (literal printed form)" : "")
        << "\n"
        << "objects: " << objects.rows() << " (m = " << config.m << ", approach "
        << to_string(config.approach) << ")\n"
        << "dimensions: " << emb.n << "\n"
        << "stress_1: " << io::format_double(stress.stress_1) << "\n"
        << "positive eigenvalues: " << emb.positive_count() << "\n"
        << "negative eigenvalues: " << emb.negative_count()
        << " (total magnitude " << io::format_double(emb.negative_mass()) << ")\n"
        << "axioms (" << config.axiom_samples << " samples, seed " << config.seed
        << "): identity " << axioms.identity_pass << ", symmetry " << axioms.symmetry_pass
        << ", triangle " << axioms.triangle_pass << "\n";
    if (result.first_component) {
        const auto& f = *result.first_component;
        rep << "component 1 sinusoid: A = " << fixed(f.A) << ", omega = " << fixed(f.omega)
            << ", r2 = " << fixed(f.r2) << "\n"
            << (f.r2 >= config.periodic_r2
                    ? "note: component 1 follows a sinusoid (r2 above threshold)\n"
                    : "note: no discernible periodic structure in component 1 (r2 below threshold)\n");
    }
    write_text(dir / "report.txt", rep.str());

    ordered_json extra;
    extra["embed_key"] = embed_key(config, in.digest);
    write_manifest(dir, "embed", config, input_json(config, in, objects.rows()), outputs, extra);

    out << "embed [" << to_string(config.metric) << "]: N = " << objects.rows() << ", n = " << emb.n
        << ", stress_1 = " << fixed(stress.stress_1) << ", negative eigenvalues = "
        << emb.negative_count() << " -> " << dir.string() << "\n";
    return result;
}

int report(const StageError& e, std::ostream& err) {
    err << "error [" << e.stage << "]: " << e.message << "\n";
    return e.code;
}

Embedding read_embedding_file(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open embedding '" + path.string() + "'", 0);
    return io::read_embedding_csv(f);
}

}  // namespace

std::string resolve_out_dir(const RunConfig& config) {
    if (!config.out_dir.empty()) return config.out_dir;
    if (const char* env = std::getenv("ZETA_MDS_OUT"); env != nullptr && *env != '\0') return env;
    return "zeta_mds_out";
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const fs::path dir = prepare_out_dir(config);
        const auto in = load_input(config);
        const std::size_t count = std::min(config.validate_count, in.zeros.size());
        std::size_t failed = 0;
        std::size_t skipped = 0;
        for (std::size_t k = 0; k < count; ++k) {
            const double t = in.zeros[k];
            out << "line " << in.zeros.line_of(k) << "  t = " << std::setprecision(15) << t;
            if (std::abs(t) > zeta::kGuaranteedRange) {
                out << "  SKIP (outside the guaranteed range)\n";
                ++skipped;
                continue;
            }
            const auto ev = zeta::evaluate_critical(t);
            const double mag = std::abs(ev.value);
            const bool pass = zeta::verify_zero(t, config.validate_tol);
            out << "  |zeta| = " << std::setprecision(3) << std::scientific << mag
                << std::defaultfloat << (pass ? "  PASS" : "  FAIL") << "\n";
            if (!pass) {
                ++failed;
                err << "verification failed at line " << in.zeros.line_of(k) << " (t = "
                    << std::setprecision(15) << t << ")\n";
            }
        }
        out << count - failed - skipped << " passed, " << failed << " failed, " << skipped
            << " skipped\n";
        ordered_json extra;
        extra["checked"] = count;
        extra["failed"] = failed;
        extra["skipped"] = skipped;
        write_manifest(dir, "validate", config, input_json(config, in, 0), {}, extra);
        return failed > 0 ? kVerificationFailed : kOk;
    } catch (const StageError& e) {
        return report(e, err);
    } catch (const Error& e) {
        return report({kVerificationFailed, "verification", e.what()}, err);
    }
}

int cmd_embed(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        run_embed(config, out);
        return kOk;
    } catch (const StageError& e) {
        return report(e, err);
    } catch (const Error& e) {
        return report({kEmbeddingFailed, "output", e.what()}, err);
    }
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const fs::path dir = prepare_out_dir(config);
        Embedding emb;
        ordered_json input;
        if (!config.embedding_path.empty()) {
            try {
                emb = read_embedding_file(config.embedding_path);
            } catch (const Error& e) {
                throw StageError{kInputError, "input", e.what()};
            }
            input["embedding"] = config.embedding_path;
            input["sha256"] = io::sha256_file(config.embedding_path);
        } else {
            RunConfig ec = config;
            ec.dims = std::max(config.dims, config.components);
            const auto in = load_input(ec);
            bool reuse = false;
            std::ifstream mf(dir / "manifest-embed.json");
            if (mf && fs::exists(dir / "embedding.csv")) {
                try {
                    const auto j = ordered_json::parse(mf);
                    reuse = j.contains("embed_key") && j["embed_key"] == embed_key(ec, in.digest);
                } catch (const nlohmann::json::exception&) {
                    reuse = false;
                }
            }
            if (!reuse) run_embed(ec, out);
            try {
                emb = read_embedding_file(dir / "embedding.csv");
            } catch (const Error& e) {
                throw StageError{kEmbeddingFailed, "embedding", e.what()};
            }
            input = input_json(ec, in, emb.n_objects());
        }

        std::vector<SinusoidFit> fits;
        try {
            fits = fit_components(emb, config.components);
        } catch (const Error& e) {
            throw StageError{kAnalysisFailed, "analysis", e.what()};
        }

        std::vector<std::pair<double, double>> amp, freq;
        for (const auto& f : fits) {
            amp.emplace_back(static_cast<double>(f.p), f.A);
            freq.emplace_back(static_cast<double>(f.p), f.omega);
        }
        std::optional<PowerLawFit> power;
        std::optional<LinearFit> linear;
        std::string power_note = "insufficient (needs at least 3 components)";
        std::string linear_note = "insufficient (needs at least 2 components)";
        if (amp.size() >= 3) {
            try {
                power = fit_power_law(amp);
            } catch (const Error& e) {
                power_note = std::string("failed: ") + e.what();
            }
        }
        if (freq.size() >= 2) {
            try {
                linear = fit_linear(freq);
            } catch (const Error& e) {
                linear_note = std::string("failed: ") + e.what();
            }
        }

        write_file(dir / "fits.csv", [&](std::ostream& f) { io::write_fits_csv(fits, f); });
        write_file(dir / "laws.csv", [&](std::ostream& f) { io::write_laws_csv(power, linear, f); });
        write_text(dir / "traces.svg", svg::render_traces(emb, config.components, fits));
        write_text(dir / "parameters.svg", svg::render_parameters(fits, power, linear));

        std::ostringstream rep;
        for (const auto& f : fits)
            rep << "p = " << f.p << ": A = " << fixed(f.A) << ", omega = " << fixed(f.omega)
                << ", phi = " << fixed(f.phi) << ", r2 = " << fixed(f.r2)
                << (f.r2 >= config.periodic_r2 ? "  periodic" : "") << "\n";
        if (power)
            rep << "power law A_p ~ p^k: k = " << fixed(power->exponent)
                << ", prefactor = " << fixed(power->prefactor) << ", r2 = " << fixed(power->r2) << "\n";
        else
            rep << "power law: " << power_note << "\n";
        if (linear)
            rep << "linear law omega_p ~ p: slope = " << fixed(linear->slope)
                << ", intercept = " << fixed(linear->intercept) << ", r2 = " << fixed(linear->r2)
                << "\n";
        else
            rep << "linear law: " << linear_note << "\n";
        write_text(dir / "analysis.txt", rep.str());
        out << rep.str();

        write_manifest(dir, "analyze", config, input,
                       {"fits.csv", "laws.csv", "traces.svg", "parameters.svg", "analysis.txt"});
        return kOk;
    } catch (const StageError& e) {
        return report(e, err);
    } catch (const Error& e) {
        return report({kAnalysisFailed, "output", e.what()}, err);
    }
}

int cmd_sweep(const RunConfig& config, const std::vector<Metric>& metrics, std::ostream& out,
              std::ostream& err) {
    if (metrics.empty()) return report({kEmbeddingFailed, "sweep", "no metrics requested"}, err);
    try {
        const fs::path dir = prepare_out_dir(config);
        std::vector<svg::Panel> panels;
        std::ostringstream table;
        table << "metric,exit_code,stress,negative_eigenvalues,component1_r2\n";
        std::size_t succeeded = 0;
        for (Metric metric : metrics) {
            RunConfig sub = config;
            sub.metric = metric;
            sub.out_dir = (dir / std::string(to_string(metric))).string();
            const std::string name(to_string(metric));
            try {
                const auto res = run_embed(sub, out);
                ++succeeded;
                table << name << ",0," << io::format_double(res.stress) << ','
                      << res.embedding.negative_count() << ','
                      << (res.first_component ? io::format_double(res.first_component->r2) : "NA")
                      << '\n';
                panels.push_back({name, res.embedding, {}});
            } catch (const StageError& e) {
                report(e, err);
                table << name << ',' << e.code << ",NA,NA,NA\n";
                panels.push_back({name, std::nullopt, e.stage + ": " + e.message});
            }
        }
        write_text(dir / "sweep.csv", table.str());
        write_text(dir / "sweep.svg", svg::render_locus_grid(panels, config.view));
        ordered_json extra;
        ordered_json names = ordered_json::array();
        for (Metric m : metrics) names.push_back(std::string(to_string(m)));
        extra["metrics"] = names;
        extra["succeeded"] = succeeded;
        write_manifest(dir, "sweep", config, {{"path", config.zeros_path}}, {"sweep.csv", "sweep.svg"},
                       extra);
        return succeeded > 0 ? kOk : kEmbeddingFailed;
    } catch (const StageError& e) {
        return report(e, err);
    } catch (const Error& e) {
        return report({kEmbeddingFailed, "output", e.what()}, err);
    }
}

}  // namespace zmds::cli
