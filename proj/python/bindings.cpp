#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "btgraph/experiment.hpp"
#include "btgraph/io.hpp"
#include "btgraph/rng.hpp"

namespace py = pybind11;
using namespace btg;

PYBIND11_MODULE(_core, m) {
    m.doc() = "random irrigation subgraphs of random geometric graphs";
    m.attr("generator_version") = kGeneratorVersion;

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](std::uint64_t n, int d, std::optional<double> gamma,
                         std::optional<double> r, int c, std::uint64_t seed, double eps) {
                 ModelParams p;
                 p.n = n;
                 p.d = d;
                 p.gamma = gamma;
                 p.r = r;
                 p.c = c;
                 p.seed = seed;
                 p.eps = eps;
                 return p;
             }),
             py::arg("n"), py::arg("d") = 2, py::arg("gamma") = std::nullopt,
             py::arg("r") = std::nullopt, py::arg("c") = 1, py::arg("seed") = 1,
             py::arg("eps") = 0.1)
        .def_readwrite("n", &ModelParams::n)
        .def_readwrite("d", &ModelParams::d)
        .def_readwrite("gamma", &ModelParams::gamma)
        .def_readwrite("r", &ModelParams::r)
        .def_readwrite("c", &ModelParams::c)
        .def_readwrite("seed", &ModelParams::seed)
        .def_readwrite("eps", &ModelParams::eps);

    py::class_<Geometry>(m, "Geometry")
        .def_readonly("r", &Geometry::r)
        .def_readonly("gamma", &Geometry::gamma)
        .def_readonly("ell", &Geometry::ell)
        .def_readonly("ell_cells_per_side", &Geometry::ell_cells_per_side)
        .def_readonly("coarse_cells_per_side", &Geometry::coarse_cells_per_side);

    py::class_<PointSet>(m, "PointSet")
        .def_readonly("dim", &PointSet::dim)
        .def_readonly("seed", &PointSet::seed)
        .def_readonly("coords", &PointSet::coords)
        .def("__len__", &PointSet::size);

    py::class_<CellGrid>(m, "CellGrid")
        .def_readonly("dim", &CellGrid::dim)
        .def_readonly("per_side", &CellGrid::per_side)
        .def_readonly("side", &CellGrid::side)
        .def_readonly("cell_of_vertex", &CellGrid::cell_of_vertex)
        .def("cell_count", &CellGrid::cell_count);

    py::class_<VisibilityGraph>(m, "VisibilityGraph")
        .def_readonly("n", &VisibilityGraph::n)
        .def_readonly("radius", &VisibilityGraph::radius)
        .def_readonly("max_degree", &VisibilityGraph::max_degree)
        .def("degree", &VisibilityGraph::degree)
        .def("adj", [](const VisibilityGraph& g, std::uint32_t i) {
            auto a = g.adj(i);
            return std::vector<std::uint32_t>(a.begin(), a.end());
        });

    py::class_<PreferenceTable>(m, "PreferenceTable")
        .def_readonly("seed", &PreferenceTable::seed)
        .def("prefs", [](const PreferenceTable& t, std::uint32_t i) {
            auto p = t.prefs(i);
            return std::vector<std::uint32_t>(p.begin(), p.end());
        });

    py::class_<IrrigationGraph>(m, "IrrigationGraph")
        .def_readonly("n", &IrrigationGraph::n)
        .def_readonly("c", &IrrigationGraph::c)
        .def_readonly("edges", &IrrigationGraph::edges)
        .def("arcs", [](const IrrigationGraph& s, std::uint32_t i) {
            auto a = s.arcs(i);
            return std::vector<std::uint32_t>(a.begin(), a.end());
        });

    py::class_<ComponentSummary>(m, "ComponentSummary")
        .def_readonly("component_id", &ComponentSummary::component_id)
        .def_readonly("sizes", &ComponentSummary::sizes)
        .def_readonly("count", &ComponentSummary::count)
        .def_readonly("smallest", &ComponentSummary::smallest)
        .def_readonly("is_connected", &ComponentSummary::is_connected);

    py::class_<CliqueWitness>(m, "CliqueWitness")
        .def_readonly("vertices", &CliqueWitness::vertices);

    py::class_<HopDiameter>(m, "HopDiameter")
        .def_readonly("connected", &HopDiameter::connected)
        .def_readonly("exact", &HopDiameter::exact)
        .def_readonly("lower", &HopDiameter::lower)
        .def_readonly("upper", &HopDiameter::upper);

    py::class_<DensityReport>(m, "DensityReport")
        .def_readonly("alpha", &DensityReport::alpha)
        .def_readonly("beta", &DensityReport::beta)
        .def_readonly("lower", &DensityReport::lower)
        .def_readonly("upper", &DensityReport::upper)
        .def_readonly("all_ok", &DensityReport::all_ok)
        .def_readonly("violations", &DensityReport::violations);

    py::enum_<CellColor>(m, "CellColor")
        .value("empty", CellColor::empty)
        .value("white", CellColor::white)
        .value("black", CellColor::black);

    py::class_<CellColoring>(m, "CellColoring")
        .def_readonly("dim", &CellColoring::dim)
        .def_readonly("per_side", &CellColoring::per_side)
        .def_readonly("cell_side", &CellColoring::cell_side)
        .def_readonly("color", &CellColoring::color)
        .def_readonly("occupancy", &CellColoring::occupancy)
        .def_readonly("star_white_components", &CellColoring::star_white_components)
        .def_readonly("max_white_star_component", &CellColoring::max_white_star_component)
        .def_readonly("empty_cells", &CellColoring::empty_cells)
        .def_readonly("white_cells", &CellColoring::white_cells)
        .def_readonly("black_cells", &CellColoring::black_cells)
        .def_readonly("missing_face_links", &CellColoring::missing_face_links)
        .def_readonly("all_face_linked", &CellColoring::all_face_linked);

    py::class_<PropertyReport>(m, "PropertyReport")
        .def_readonly("prop_i", &PropertyReport::prop_i)
        .def_readonly("prop_ii", &PropertyReport::prop_ii)
        .def_readonly("prop_iii", &PropertyReport::prop_iii)
        .def_readonly("prop_iv", &PropertyReport::prop_iv)
        .def_readonly("q", &PropertyReport::q)
        .def_readonly("s", &PropertyReport::s)
        .def_readonly("lambda_occ", &PropertyReport::lambda_occ)
        .def_readonly("max_white_star_component", &PropertyReport::max_white_star_component)
        .def_readonly("smallest_component", &PropertyReport::smallest_component)
        .def_readonly("max_cell_occupancy", &PropertyReport::max_cell_occupancy)
        .def_readonly("side_q_ok", &PropertyReport::side_q_ok)
        .def_readonly("side_s_ok", &PropertyReport::side_s_ok);

    py::class_<MoonReport>(m, "MoonReport")
        .def_readonly("min_count", &MoonReport::min_count)
        .def_readonly("max_count", &MoonReport::max_count)
        .def_readonly("lower_bound", &MoonReport::lower_bound)
        .def_readonly("upper_bound", &MoonReport::upper_bound)
        .def_readonly("min_ok", &MoonReport::min_ok)
        .def_readonly("max_ok", &MoonReport::max_ok)
        .def_readonly("samples", &MoonReport::samples);

    py::class_<ThresholdFormulas>(m, "ThresholdFormulas")
        .def_readonly("c_upper", &ThresholdFormulas::c_upper)
        .def_readonly("c_lower", &ThresholdFormulas::c_lower)
        .def_readonly("lambda_", &ThresholdFormulas::lambda)
        .def_readonly("c_lower_general", &ThresholdFormulas::c_lower_general);

    py::class_<TrialConfig> trial_config(m, "TrialConfig");
    py::enum_<TrialConfig::Sampler>(trial_config, "Sampler")
        .value("prefix", TrialConfig::Sampler::prefix)
        .value("staged", TrialConfig::Sampler::staged);
    trial_config.def(py::init<>())
        .def_readwrite("params", &TrialConfig::params)
        .def_readwrite("with_cstar", &TrialConfig::with_cstar)
        .def_readwrite("with_diameter", &TrialConfig::with_diameter)
        .def_readwrite("with_spanning", &TrialConfig::with_spanning)
        .def_readwrite("with_cliques", &TrialConfig::with_cliques)
        .def_readwrite("with_diagnostics", &TrialConfig::with_diagnostics)
        .def_readwrite("exact_cutoff", &TrialConfig::exact_cutoff)
        .def_readwrite("spanning_exact_cutoff", &TrialConfig::spanning_exact_cutoff)
        .def_readwrite("spanning_sources", &TrialConfig::spanning_sources)
        .def_readwrite("moon_samples", &TrialConfig::moon_samples)
        .def_readwrite("round_size", &TrialConfig::round_size)
        .def_readwrite("mu", &TrialConfig::mu)
        .def_readwrite("sampler", &TrialConfig::sampler);

    py::class_<ColoringSummary>(m, "ColoringSummary")
        .def_readonly("black_cells", &ColoringSummary::black_cells)
        .def_readonly("white_cells", &ColoringSummary::white_cells)
        .def_readonly("empty_cells", &ColoringSummary::empty_cells)
        .def_readonly("max_white_star_component", &ColoringSummary::max_white_star_component)
        .def_readonly("missing_face_links", &ColoringSummary::missing_face_links);

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("trial_index", &TrialResult::trial_index)
        .def_readonly("n", &TrialResult::n)
        .def_readonly("d", &TrialResult::d)
        .def_readonly("gamma", &TrialResult::gamma)
        .def_readonly("r", &TrialResult::r)
        .def_readonly("c", &TrialResult::c)
        .def_readonly("is_connected", &TrialResult::is_connected)
        .def_readonly("n_components", &TrialResult::n_components)
        .def_readonly("smallest_component", &TrialResult::smallest_component)
        .def_readonly("c_star", &TrialResult::c_star)
        .def_readonly("diameter", &TrialResult::diameter)
        .def_readonly("spanning", &TrialResult::spanning)
        .def_readonly("spanning_mode", &TrialResult::spanning_mode)
        .def_readonly("isolated_cliques_found", &TrialResult::isolated_cliques_found)
        .def_readonly("density", &TrialResult::density)
        .def_readonly("coloring", &TrialResult::coloring)
        .def_readonly("properties", &TrialResult::properties)
        .def_readonly("moons", &TrialResult::moons)
        .def_readonly("wall_time_s", &TrialResult::wall_time_s)
        .def_readonly("error", &TrialResult::error)
        .def("to_json", [](const TrialResult& r) { return trial_result_json(r).dump(2); });

    py::class_<CStarConfig>(m, "CStarConfig")
        .def(py::init<>())
        .def_readwrite("params", &CStarConfig::params)
        .def_readwrite("trials", &CStarConfig::trials)
        .def_readwrite("workers", &CStarConfig::workers);

    py::class_<CStarResult>(m, "CStarResult")
        .def_readonly("per_trial", &CStarResult::per_trial)
        .def_readonly("infinite_trials", &CStarResult::infinite_trials)
        .def_readonly("median_infinite", &CStarResult::median_infinite)
        .def_readonly("median", &CStarResult::median)
        .def_readonly("q1", &CStarResult::q1)
        .def_readonly("q3", &CStarResult::q3)
        .def_readonly("scale", &CStarResult::scale)
        .def_readonly("ratio_median_to_scale", &CStarResult::ratio_median_to_scale);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("n_grid", &SweepConfig::n_grid)
        .def_readwrite("d", &SweepConfig::d)
        .def_readwrite("gamma_grid", &SweepConfig::gamma_grid)
        .def_readwrite("r_grid", &SweepConfig::r_grid)
        .def_readwrite("c_min", &SweepConfig::c_min)
        .def_readwrite("c_max", &SweepConfig::c_max)
        .def_readwrite("eps", &SweepConfig::eps)
        .def_readwrite("seed", &SweepConfig::seed)
        .def_readwrite("trials", &SweepConfig::trials)
        .def_readwrite("workers", &SweepConfig::workers);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n", &SweepRow::n)
        .def_readonly("d", &SweepRow::d)
        .def_readonly("gamma", &SweepRow::gamma)
        .def_readonly("r", &SweepRow::r)
        .def_readonly("c", &SweepRow::c)
        .def_readonly("trial", &SweepRow::trial)
        .def_readonly("is_connected", &SweepRow::is_connected)
        .def_readonly("n_components", &SweepRow::n_components)
        .def_readonly("smallest_component", &SweepRow::smallest_component)
        .def_readonly("error", &SweepRow::error);

    py::class_<SweepAggregate>(m, "SweepAggregate")
        .def_readonly("n", &SweepAggregate::n)
        .def_readonly("gamma", &SweepAggregate::gamma)
        .def_readonly("r", &SweepAggregate::r)
        .def_readonly("c", &SweepAggregate::c)
        .def_readonly("trials", &SweepAggregate::trials)
        .def_readonly("connected", &SweepAggregate::connected)
        .def_readonly("p_connected", &SweepAggregate::p_connected)
        .def_readonly("wilson_lo", &SweepAggregate::wilson_lo)
        .def_readonly("wilson_hi", &SweepAggregate::wilson_hi);

    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("rows", &SweepTable::rows)
        .def_readonly("aggregates", &SweepTable::aggregates);

    m.def("sample_points", &sample_points, py::arg("n"), py::arg("d"), py::arg("seed"));
    m.def("derive_geometry", &derive_geometry, py::arg("params"));
    m.def("unit_ball_volume", &unit_ball_volume, py::arg("d"));
    m.def("critical_gamma", &critical_gamma, py::arg("d"));
    m.def("gamma_star_star", &gamma_star_star, py::arg("d"));
    m.def("build_visibility", &build_visibility, py::arg("points"), py::arg("r"));
    m.def("build_ell_grid", &build_ell_grid, py::arg("points"), py::arg("r"));
    m.def("build_coarse_grid", &build_coarse_grid, py::arg("points"), py::arg("r"));
    m.def("assign_preferences", &assign_preferences, py::arg("g"), py::arg("seed"));
    m.def("realize", &realize, py::arg("g"), py::arg("prefs"), py::arg("c"));
    m.def("realize_staged", &realize_staged, py::arg("g"), py::arg("c"), py::arg("eps"),
          py::arg("round_size"), py::arg("seed"));
    m.def("staged_first_round_picks", &staged_first_round_picks, py::arg("n"), py::arg("eps"));
    m.def("components", &components, py::arg("s"));
    m.def("find_isolated_cliques", &find_isolated_cliques, py::arg("s"), py::arg("k"));
    m.def("hop_diameter", &hop_diameter, py::arg("s"), py::arg("exact_cutoff") = 3000);
    m.def(
        "spanning_ratio",
        [](const IrrigationGraph& s, const PointSet& points, double r, bool exact, int k_sources,
           std::uint64_t seed) {
            SpanningMode mode;
            mode.kind = exact ? SpanningMode::Kind::exact : SpanningMode::Kind::sampled;
            mode.k_sources = k_sources;
            mode.seed = seed;
            return spanning_ratio(s, points, r, mode);
        },
        py::arg("s"), py::arg("points"), py::arg("r"), py::arg("exact") = true,
        py::arg("k_sources") = 16, py::arg("seed") = 0);
    m.def("solve_alpha_beta", &solve_alpha_beta);
    m.def("density_report", &density_report, py::arg("points"), py::arg("grid"), py::arg("n"));
    m.def("color_cells", &color_cells, py::arg("s"), py::arg("points"), py::arg("grid3"));
    m.def("property_report", &property_report, py::arg("s"), py::arg("coloring"),
          py::arg("density"), py::arg("geometry"), py::arg("n"), py::arg("d"));
    m.def("moon_report", &moon_report, py::arg("points"), py::arg("r"), py::arg("pair_samples"),
          py::arg("seed"), py::arg("sigma") = std::nullopt, py::arg("rho") = std::nullopt);
    m.def("theoretical_thresholds", &theoretical_thresholds, py::arg("n"), py::arg("d"),
          py::arg("r"), py::arg("eps"));
    m.def("c_upper_bound", &c_upper_bound, py::arg("n"), py::arg("eps"));
    m.def("c_lower_bound", &c_lower_bound, py::arg("n"), py::arg("eps"));
    m.def("c_star_scale", &c_star_scale, py::arg("n"));
    m.def("diameter_choice_count", &diameter_choice_count, py::arg("n"), py::arg("mu") = 2.0);
    m.def("run_trial", &run_trial, py::arg("config"), py::arg("trial_index") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("estimate_c_star", &estimate_c_star, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep", &sweep, py::arg("config"), py::call_guard<py::gil_scoped_release>());
}
