// Command-line front end: generate / sample / analyze / diagnose /
// sweep / cstar / formulas over the irrigation-subgraph model.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "btgraph/experiment.hpp"
#include "btgraph/io.hpp"
#include "btgraph/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 1;
constexpr int kExitIoError = 2;

struct Options {
    std::vector<std::uint64_t> n_list;
    int d = 2;
    std::vector<double> gamma_list;
    std::vector<double> r_list;
    std::optional<int> c;
    int c_min = 0;
    int c_max = 0;
    double eps = 0.1;
    std::uint64_t seed = 1;
    std::uint64_t trials = 10;
    int workers = 1;
    std::uint64_t trial_index = 0;
    std::string out;
    std::string format = "json";
    std::string config_path;
    int round_size = 4;
    double mu = 2.0;
    int exact_cutoff = 3000;
    int spanning_sources = 16;
    int spanning_exact_cutoff = 1500;
    int moon_samples = 1000;
    bool staged = false;
    bool with_cstar = false;
    bool dump_graph = false;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The config file overrides command-line flags. Schema version 1; keys
// are listed in the README. Unknown keys are rejected.
void apply_config(Options& opts) {
    if (opts.config_path.empty()) return;
    std::ifstream in(opts.config_path);
    if (!in) throw IoError("cannot open config file: " + opts.config_path);
    nlohmann::json config;
    in >> config;
    if (!config.is_object()) throw std::invalid_argument("config must be a JSON object");

    auto as_u64_list = [](const nlohmann::json& v) {
        std::vector<std::uint64_t> list;
        if (v.is_array())
            for (const auto& x : v) list.push_back(x.get<std::uint64_t>());
        else
            list.push_back(v.get<std::uint64_t>());
        return list;
    };
    auto as_double_list = [](const nlohmann::json& v) {
        std::vector<double> list;
        if (v.is_array())
            for (const auto& x : v) list.push_back(x.get<double>());
        else
            list.push_back(v.get<double>());
        return list;
    };

    for (const auto& [key, value] : config.items()) {
        if (key == "schema_version") {
            if (value.get<int>() != 1) throw std::invalid_argument("unsupported config schema_version");
        } else if (key == "n") {
            opts.n_list = as_u64_list(value);
        } else if (key == "d") {
            opts.d = value.get<int>();
        } else if (key == "gamma") {
            opts.gamma_list = as_double_list(value);
        } else if (key == "r") {
            opts.r_list = as_double_list(value);
        } else if (key == "c") {
            opts.c = value.get<int>();
        } else if (key == "c_min") {
            opts.c_min = value.get<int>();
        } else if (key == "c_max") {
            opts.c_max = value.get<int>();
        } else if (key == "eps") {
            opts.eps = value.get<double>();
        } else if (key == "seed") {
            opts.seed = value.get<std::uint64_t>();
        } else if (key == "trials") {
            opts.trials = value.get<std::uint64_t>();
        } else if (key == "workers") {
            opts.workers = value.get<int>();
        } else if (key == "trial") {
            opts.trial_index = value.get<std::uint64_t>();
        } else if (key == "out") {
            opts.out = value.get<std::string>();
        } else if (key == "format") {
            opts.format = value.get<std::string>();
        } else if (key == "L") {
            opts.round_size = value.get<int>();
        } else if (key == "mu") {
            opts.mu = value.get<double>();
        } else if (key == "exact_cutoff") {
            opts.exact_cutoff = value.get<int>();
        } else if (key == "spanning_sources") {
            opts.spanning_sources = value.get<int>();
        } else if (key == "spanning_exact_cutoff") {
            opts.spanning_exact_cutoff = value.get<int>();
        } else if (key == "moon_samples") {
            opts.moon_samples = value.get<int>();
        } else if (key == "sampler") {
            const auto s = value.get<std::string>();
            if (s != "prefix" && s != "staged")
                throw std::invalid_argument("sampler must be \"prefix\" or \"staged\"");
            opts.staged = s == "staged";
        } else if (key == "cstar") {
            opts.with_cstar = value.get<bool>();
        } else if (key == "graph") {
            opts.dump_graph = value.get<bool>();
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
}

btg::ModelParams single_params(const Options& opts, bool need_c) {
    btg::ModelParams params;
    if (opts.n_list.size() != 1)
        throw std::invalid_argument("this command needs exactly one --n value");
    params.n = opts.n_list.front();
    params.d = opts.d;
    if (opts.gamma_list.size() + opts.r_list.size() != 1)
        throw std::invalid_argument("supply exactly one of --gamma / --r");
    if (!opts.gamma_list.empty()) params.gamma = opts.gamma_list.front();
    if (!opts.r_list.empty()) params.r = opts.r_list.front();
    if (need_c) {
        if (!opts.c) throw std::invalid_argument("this command needs --c");
        params.c = *opts.c;
    }
    params.seed = opts.seed;
    params.eps = opts.eps;
    return params;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    return out;
}

void emit(const btg::ojson& j, const Options& opts) {
    if (opts.format == "csv") {
        // flattened key,value rows
        std::cout << "key,value\n";
        for (const auto& [path, value] : j.flatten().items()) {
            std::string key = path.substr(1);
            for (char& ch : key)
                if (ch == '/') ch = '.';
            std::cout << btg::csv_escape(key) << ','
                      << btg::csv_escape(value.is_string() ? value.get<std::string>() : value.dump())
                      << '\n';
        }
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

int cmd_formulas(const Options& opts) {
    const btg::ModelParams params = single_params(opts, false);
    const btg::Geometry geo = btg::derive_geometry(params);
    btg::ojson j;
    j["params"] = btg::model_params_json(params);
    j["geometry"] = btg::geometry_json(geo);
    j["gamma_star"] = btg::critical_gamma(params.d);
    j["gamma_star_star"] = btg::gamma_star_star(params.d);
    j["thresholds"] = btg::thresholds_json(
        btg::theoretical_thresholds(params.n, params.d, geo.r, params.eps));
    j["c_star_scale"] = btg::c_star_scale(params.n);
    j["diameter_choice_count"] = btg::diameter_choice_count(params.n, opts.mu);
    j["generator_version"] = btg::kGeneratorVersion;
    emit(j, opts);
    return kExitOk;
}

int cmd_generate(const Options& opts) {
    if (opts.n_list.size() != 1) throw std::invalid_argument("generate needs exactly one --n value");
    const std::uint64_t n = opts.n_list.front();
    const std::filesystem::path dir = opts.out.empty() ? "." : opts.out;
    auto points_out = open_output(dir / "points.csv");

    const btg::PointSet points = btg::sample_points(n, opts.d, opts.seed);
    btg::write_points_csv(points_out, points);
    if (!points_out) throw IoError("write failed: points.csv");

    if (!opts.gamma_list.empty() || !opts.r_list.empty() || opts.dump_graph) {
        const btg::ModelParams params = single_params(opts, false);
        const btg::Geometry geo = btg::derive_geometry(params);
        auto edges_out = open_output(dir / "visibility_edges.csv");
        const btg::VisibilityGraph g = btg::build_visibility(points, geo.r);
        btg::ojson meta{{"schema", "btg-edges/1"},    {"graph", "visibility"},
                        {"n", n},                     {"d", opts.d},
                        {"gamma", geo.gamma},         {"r", geo.r},
                        {"seed", opts.seed},          {"generator_version", btg::kGeneratorVersion}};
        edges_out << "# " << meta.dump() << '\n' << "u,v\n";
        for (std::uint32_t u = 0; u < g.n; ++u)
            for (std::uint32_t v : g.adj(u))
                if (v > u) edges_out << u << ',' << v << '\n';
        if (!edges_out) throw IoError("write failed: visibility_edges.csv");
    }
    return kExitOk;
}

int cmd_sample(const Options& opts) {
    const btg::ModelParams params = single_params(opts, true);
    const btg::Geometry geo = btg::derive_geometry(params);
    const std::filesystem::path dir = opts.out.empty() ? "." : opts.out;
    auto edges_out = open_output(dir / "edges.csv");

    const std::uint64_t trial_seed = btg::derive_key(params.seed, btg::Stream::trial, opts.trial_index);
    const std::uint64_t points_seed = btg::derive_key(trial_seed, btg::Stream::points);
    const std::uint64_t prefs_seed = btg::derive_key(trial_seed, btg::Stream::prefs);
    const btg::PointSet points = btg::sample_points(params.n, params.d, points_seed);
    const btg::VisibilityGraph g = btg::build_visibility(points, geo.r);
    btg::IrrigationGraph s;
    if (opts.staged) {
        s = btg::realize_staged(g, params.c, params.eps, opts.round_size, prefs_seed);
    } else {
        const btg::PreferenceTable prefs = btg::assign_preferences(g, prefs_seed);
        s = btg::realize(g, prefs, params.c);
    }
    btg::ojson meta{{"schema", "btg-edges/1"},
                    {"graph", "irrigation"},
                    {"n", params.n},
                    {"d", params.d},
                    {"gamma", geo.gamma},
                    {"r", geo.r},
                    {"c", params.c},
                    {"master_seed", params.seed},
                    {"trial", opts.trial_index},
                    {"points_seed", points_seed},
                    {"prefs_seed", prefs_seed},
                    {"sampler", opts.staged ? "staged" : "prefix"},
                    {"generator_version", btg::kGeneratorVersion}};
    btg::write_edges_csv(edges_out, s, meta);
    if (!edges_out) throw IoError("write failed: edges.csv");
    return kExitOk;
}

btg::TrialConfig trial_config(const Options& opts, bool diagnostics) {
    btg::TrialConfig config;
    config.params = single_params(opts, true);
    config.with_cstar = opts.with_cstar;
    config.with_diameter = !diagnostics;
    config.with_spanning = !diagnostics;
    config.with_cliques = !diagnostics;
    config.with_diagnostics = diagnostics;
    config.exact_cutoff = std::uint32_t(opts.exact_cutoff);
    config.spanning_exact_cutoff = std::uint32_t(opts.spanning_exact_cutoff);
    config.spanning_sources = opts.spanning_sources;
    config.moon_samples = opts.moon_samples;
    config.round_size = opts.round_size;
    config.mu = opts.mu;
    config.sampler =
        opts.staged ? btg::TrialConfig::Sampler::staged : btg::TrialConfig::Sampler::prefix;
    return config;
}

int cmd_analyze(const Options& opts) {
    const btg::TrialResult result = run_trial(trial_config(opts, false), opts.trial_index);
    emit(btg::trial_result_json(result), opts);
    return result.error.empty() ? kExitOk : kExitInvalidConfig;
}

int cmd_diagnose(const Options& opts) {
    const btg::TrialResult result = run_trial(trial_config(opts, true), opts.trial_index);
    if (!result.error.empty()) {
        std::cerr << "error: " << result.error << '\n';
        return kExitInvalidConfig;
    }
    btg::ojson j;
    j["params"] = btg::model_params_json(trial_config(opts, true).params);
    j["trial"] = result.trial_index;
    j["r"] = result.r;
    j["gamma"] = result.gamma;
    j["generator_version"] = btg::kGeneratorVersion;
    j["density"] = btg::density_json(*result.density);
    j["coloring"] = btg::coloring_summary_json(*result.coloring);
    j["properties"] = btg::property_json(*result.properties);
    j["moons"] = btg::moons_json(*result.moons);
    emit(j, opts);
    return kExitOk;
}

int cmd_sweep(const Options& opts) {
    btg::SweepConfig config;
    config.n_grid = opts.n_list;
    config.d = opts.d;
    config.gamma_grid = opts.gamma_list;
    config.r_grid = opts.r_list;
    config.c_min = opts.c_min > 0 ? opts.c_min : (opts.c ? *opts.c : 1);
    config.c_max = opts.c_max > 0 ? opts.c_max : config.c_min;
    config.eps = opts.eps;
    config.seed = opts.seed;
    config.trials = opts.trials;
    config.workers = opts.workers;

    const std::filesystem::path dir = opts.out.empty() ? "." : opts.out;
    auto rows_out = open_output(dir / "sweep_rows.csv");
    auto summary_out = open_output(dir / "sweep_summary.json");

    const btg::SweepTable table = btg::sweep(config);
    btg::write_sweep_rows_csv(rows_out, table);
    summary_out << btg::sweep_summary_json(table, config, "sweep_rows.csv").dump(2) << '\n';
    if (!rows_out || !summary_out) throw IoError("write failed: sweep outputs");
    return kExitOk;
}

int cmd_cstar(const Options& opts) {
    btg::CStarConfig config;
    config.params = single_params(opts, false);
    config.trials = opts.trials;
    config.workers = opts.workers;

    const std::filesystem::path dir = opts.out.empty() ? "." : opts.out;
    auto rows_out = open_output(dir / "cstar_rows.csv");
    auto summary_out = open_output(dir / "cstar_summary.json");

    const btg::CStarResult result = btg::estimate_c_star(config);
    btg::write_cstar_rows_csv(rows_out, result);
    const btg::ojson summary =
        btg::cstar_summary_json(result, config.params, config.trials, "cstar_rows.csv");
    summary_out << summary.dump(2) << '\n';
    if (!rows_out || !summary_out) throw IoError("write failed: cstar outputs");
    emit(summary, opts);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random irrigation subgraphs of random geometric graphs"};
    app.require_subcommand(1);
    Options opts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", opts.n_list, "vertex count (comma list for sweep)")->delimiter(',');
        cmd->add_option("--d", opts.d, "dimension");
        cmd->add_option("--gamma", opts.gamma_list, "radius multiplier (comma list for sweep)")
            ->delimiter(',');
        cmd->add_option("--r", opts.r_list, "explicit radius (comma list for sweep)")->delimiter(',');
        cmd->add_option("--c", opts.c, "choice count");
        cmd->add_option("--c-min", opts.c_min, "sweep: smallest c");
        cmd->add_option("--c-max", opts.c_max, "sweep: largest c");
        cmd->add_option("--eps", opts.eps, "threshold slack in (0,2)");
        cmd->add_option("--seed", opts.seed, "master seed");
        cmd->add_option("--trials", opts.trials, "trial count");
        cmd->add_option("--workers", opts.workers, "worker threads");
        cmd->add_option("--trial", opts.trial_index, "trial index for single-instance commands");
        cmd->add_option("--out", opts.out, "output directory");
        cmd->add_option("--format", opts.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--config", opts.config_path, "JSON config file (overrides flags)");
        cmd->add_option("--L", opts.round_size, "staged sampler round size");
        cmd->add_option("--mu", opts.mu, "diameter-regime multiplier");
        cmd->add_option("--exact-cutoff", opts.exact_cutoff, "all-sources diameter limit");
        cmd->add_option("--spanning-sources", opts.spanning_sources, "sampled spanning sources");
        cmd->add_option("--spanning-exact-cutoff", opts.spanning_exact_cutoff,
                        "exact spanning-ratio limit");
        cmd->add_option("--moon-samples", opts.moon_samples, "sampled moon pairs");
        cmd->add_flag("--staged", opts.staged, "use the staged sampler");
        cmd->add_flag("--cstar", opts.with_cstar, "include per-trial c*");
        cmd->add_flag("--graph", opts.dump_graph, "generate: also dump visibility edges");
    };

    CLI::App* generate = app.add_subcommand("generate", "emit point/graph dumps");
    CLI::App* sample = app.add_subcommand("sample", "emit an irrigation-subgraph edge list");
    CLI::App* analyze = app.add_subcommand("analyze", "single-instance metrics");
    CLI::App* diagnose = app.add_subcommand("diagnose", "density/coloring/property/moon reports");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over (n, gamma, c)");
    CLI::App* cstar = app.add_subcommand("cstar", "per-trial minimal connecting c");
    CLI::App* formulas = app.add_subcommand("formulas", "threshold formulas");
    for (CLI::App* cmd : {generate, sample, analyze, diagnose, sweep_cmd, cstar, formulas})
        add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/error text
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        apply_config(opts);
        if (generate->parsed()) return cmd_generate(opts);
        if (sample->parsed()) return cmd_sample(opts);
        if (analyze->parsed()) return cmd_analyze(opts);
        if (diagnose->parsed()) return cmd_diagnose(opts);
        if (sweep_cmd->parsed()) return cmd_sweep(opts);
        if (cstar->parsed()) return cmd_cstar(opts);
        if (formulas->parsed()) return cmd_formulas(opts);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
    return kExitInvalidConfig;
}
