#include "btgraph/io.hpp"

#include <charconv>
#include <ostream>

#include "btgraph/rng.hpp"

namespace btg {

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

ojson model_params_json(const ModelParams& params) {
    ojson j;
    j["n"] = params.n;
    j["d"] = params.d;
    if (params.gamma) j["gamma"] = *params.gamma;
    if (params.r) j["r"] = *params.r;
    j["c"] = params.c;
    j["eps"] = params.eps;
    j["seed"] = params.seed;
    return j;
}

ojson geometry_json(const Geometry& geo) {
    return ojson{{"r", geo.r},
                 {"gamma", geo.gamma},
                 {"ell", geo.ell},
                 {"ell_cells_per_side", geo.ell_cells_per_side},
                 {"coarse_cells_per_side", geo.coarse_cells_per_side}};
}

ojson thresholds_json(const ThresholdFormulas& formulas) {
    return ojson{{"c_upper", formulas.c_upper},
                 {"c_lower", formulas.c_lower},
                 {"lambda", formulas.lambda},
                 {"c_lower_general", formulas.c_lower_general}};
}

ojson density_json(const DensityReport& report, std::size_t max_violations) {
    ojson j;
    j["alpha"] = report.alpha;
    j["beta"] = report.beta;
    j["lower"] = report.lower;
    j["upper"] = report.upper;
    j["all_ok"] = report.all_ok;
    j["violation_count"] = report.violations.size();
    ojson v = ojson::array();
    for (std::size_t i = 0; i < report.violations.size() && i < max_violations; ++i)
        v.push_back(ojson{{"cell", report.violations[i].first},
                          {"count", report.violations[i].second}});
    j["violations"] = std::move(v);
    return j;
}

ojson coloring_summary_json(const ColoringSummary& summary) {
    return ojson{{"black_cells", summary.black_cells},
                 {"white_cells", summary.white_cells},
                 {"empty_cells", summary.empty_cells},
                 {"max_white_star_component", summary.max_white_star_component},
                 {"missing_face_links", summary.missing_face_links}};
}

ojson property_json(const PropertyReport& report) {
    ojson j;
    j["prop_i"] = report.prop_i;
    j["prop_ii"] = report.prop_ii;
    j["prop_iii"] = report.prop_iii;
    j["prop_iv"] = report.prop_iv;
    j["q"] = report.q;
    j["s"] = report.s;
    j["lambda_occ"] = report.lambda_occ;
    j["max_white_star_component"] = report.max_white_star_component;
    j["smallest_component"] = report.smallest_component;
    j["max_cell_occupancy"] = report.max_cell_occupancy;
    j["side_q_ok"] = report.side_q_ok ? ojson(*report.side_q_ok) : ojson(nullptr);
    j["side_s_ok"] = report.side_s_ok ? ojson(*report.side_s_ok) : ojson(nullptr);
    return j;
}

ojson moons_json(const MoonReport& report) {
    return ojson{{"min_count", report.min_count}, {"max_count", report.max_count},
                 {"lower_bound", report.lower_bound}, {"upper_bound", report.upper_bound},
                 {"min_ok", report.min_ok},           {"max_ok", report.max_ok},
                 {"samples", report.samples}};
}

ojson trial_result_json(const TrialResult& result) {
    ojson j;
    j["trial_index"] = result.trial_index;
    j["seeds"] = ojson{{"trial", result.trial_seed},
                       {"points", result.points_seed},
                       {"prefs", result.prefs_seed}};
    j["n"] = result.n;
    j["d"] = result.d;
    j["gamma"] = result.gamma;
    j["r"] = result.r;
    j["c"] = result.c;
    j["generator_version"] = kGeneratorVersion;
    if (!result.error.empty()) {
        j["error"] = result.error;
        return j;
    }
    j["is_connected"] = result.is_connected;
    j["n_components"] = result.n_components;
    j["smallest_component"] = result.smallest_component;
    if (result.c_star)
        j["c_star"] = *result.c_star < 0 ? ojson("infinity") : ojson(*result.c_star);
    if (result.diameter) {
        if (!result.diameter->connected) {
            j["diameter"] = "disconnected";
        } else {
            j["diameter"] = ojson{{"mode", result.diameter->exact ? "exact" : "bounds"},
                                  {"lower", result.diameter->lower},
                                  {"upper", result.diameter->upper}};
        }
    }
    if (result.spanning) {
        j["spanning_ratio"] = *result.spanning;
        j["spanning_mode"] = result.spanning_mode;
    }
    if (result.isolated_cliques_found)
        j["isolated_cliques_found"] = *result.isolated_cliques_found;
    if (result.density) j["density"] = density_json(*result.density);
    if (result.coloring) j["coloring"] = coloring_summary_json(*result.coloring);
    if (result.properties) j["properties"] = property_json(*result.properties);
    if (result.moons) j["moons"] = moons_json(*result.moons);
    return j;
}

ojson sweep_config_json(const SweepConfig& config) {
    ojson j;
    j["schema_version"] = 1;
    j["n_grid"] = config.n_grid;
    j["d"] = config.d;
    if (!config.gamma_grid.empty()) j["gamma_grid"] = config.gamma_grid;
    if (!config.r_grid.empty()) j["r_grid"] = config.r_grid;
    j["c_min"] = config.c_min;
    j["c_max"] = config.c_max;
    j["eps"] = config.eps;
    j["seed"] = config.seed;
    j["trials"] = config.trials;
    return j;
}

void write_sweep_rows_csv(std::ostream& out, const SweepTable& table) {
    out << "n,d,gamma,r,c,trial,connected,n_components,smallest_component,error\n";
    for (const SweepRow& row : table.rows) {
        out << row.n << ',' << row.d << ',' << fmt_double(row.gamma) << ',' << fmt_double(row.r)
            << ',' << row.c << ',' << row.trial << ',' << (row.is_connected ? 1 : 0) << ','
            << row.n_components << ',' << row.smallest_component << ',' << csv_escape(row.error)
            << '\n';
    }
}

ojson sweep_summary_json(const SweepTable& table, const SweepConfig& config,
                         const std::string& rows_file) {
    ojson j;
    j["config"] = sweep_config_json(config);
    j["generator_version"] = kGeneratorVersion;
    j["rows_file"] = rows_file;
    ojson aggs = ojson::array();
    for (const SweepAggregate& a : table.aggregates) {
        aggs.push_back(ojson{{"n", a.n},
                             {"gamma", a.gamma},
                             {"r", a.r},
                             {"c", a.c},
                             {"trials", a.trials},
                             {"connected", a.connected},
                             {"p_connected", a.p_connected},
                             {"wilson_lo", a.wilson_lo},
                             {"wilson_hi", a.wilson_hi}});
    }
    j["aggregates"] = std::move(aggs);
    return j;
}

void write_cstar_rows_csv(std::ostream& out, const CStarResult& result) {
    out << "trial,c_star\n";
    for (std::size_t t = 0; t < result.per_trial.size(); ++t) {
        out << t << ',';
        if (result.per_trial[t] < 0)
            out << "infinity";
        else
            out << result.per_trial[t];
        out << '\n';
    }
}

ojson cstar_summary_json(const CStarResult& result, const ModelParams& params,
                         std::uint64_t trials, const std::string& rows_file) {
    ojson j;
    j["config"] = model_params_json(params);
    j["config"]["trials"] = trials;
    j["generator_version"] = kGeneratorVersion;
    j["rows_file"] = rows_file;
    ojson s;
    s["trials"] = trials;
    s["infinite_trials"] = result.infinite_trials;
    s["median"] = result.median_infinite ? ojson("infinity") : ojson(result.median);
    s["q1"] = result.q1;
    s["q3"] = result.q3;
    s["scale"] = result.scale;
    s["ratio_median_to_scale"] =
        result.median_infinite ? ojson("infinity") : ojson(result.ratio_median_to_scale);
    j["summary"] = std::move(s);
    return j;
}

void write_points_csv(std::ostream& out, const PointSet& points) {
    ojson meta{{"schema", "btg-points/1"},
               {"n", points.size()},
               {"d", points.dim},
               {"seed", points.seed},
               {"generator_version", kGeneratorVersion}};
    out << "# " << meta.dump() << '\n';
    out << "id";
    for (int k = 0; k < points.dim; ++k) out << ",x" << k;
    out << '\n';
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << i;
        const double* p = points.point(i);
        for (int k = 0; k < points.dim; ++k) out << ',' << fmt_double(p[k]);
        out << '\n';
    }
}

void write_edges_csv(std::ostream& out, const IrrigationGraph& s, const ojson& metadata) {
    out << "# " << metadata.dump() << '\n';
    out << "u,v\n";
    for (const auto& [u, v] : s.edges) out << u << ',' << v << '\n';
}

}  // namespace btg
