#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "btgraph/experiment.hpp"

namespace btg {

using ojson = nlohmann::ordered_json;

// Shortest round-trip decimal formatting (deterministic across runs).
std::string fmt_double(double v);
std::string csv_escape(const std::string& field);

ojson model_params_json(const ModelParams& params);
ojson geometry_json(const Geometry& geo);
ojson thresholds_json(const ThresholdFormulas& formulas);
ojson density_json(const DensityReport& report, std::size_t max_violations = 16);
ojson coloring_summary_json(const ColoringSummary& summary);
ojson property_json(const PropertyReport& report);
ojson moons_json(const MoonReport& report);

// wall_time_s is intentionally omitted so identical trials serialize
// byte-identically.
ojson trial_result_json(const TrialResult& result);

ojson sweep_config_json(const SweepConfig& config);
void write_sweep_rows_csv(std::ostream& out, const SweepTable& table);
ojson sweep_summary_json(const SweepTable& table, const SweepConfig& config,
                         const std::string& rows_file);

void write_cstar_rows_csv(std::ostream& out, const CStarResult& result);
ojson cstar_summary_json(const CStarResult& result, const ModelParams& params,
                         std::uint64_t trials, const std::string& rows_file);

// "# <json>" metadata line, then "id,x0,..." rows.
void write_points_csv(std::ostream& out, const PointSet& points);
// "# <json>" metadata line, then "u,v" rows with u < v.
void write_edges_csv(std::ostream& out, const IrrigationGraph& s, const ojson& metadata);

}  // namespace btg
