#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "btgraph/analysis.hpp"
#include "btgraph/params.hpp"
#include "btgraph/percolation.hpp"
#include "btgraph/thresholds.hpp"

namespace btg {

struct TrialConfig {
    ModelParams params;
    bool with_cstar = false;
    bool with_diameter = false;
    bool with_spanning = false;
    bool with_cliques = false;
    bool with_diagnostics = false;
    std::uint32_t exact_cutoff = 3000;          // all-sources diameter limit
    std::uint32_t spanning_exact_cutoff = 1500; // exact spanning-ratio limit
    int spanning_sources = 16;                  // sampled mode source count
    int moon_samples = 1000;
    int round_size = 4;  // staged sampler L
    double mu = 2.0;     // diameter-regime multiplier
    enum class Sampler { prefix, staged } sampler = Sampler::prefix;
};

struct ColoringSummary {
    std::uint64_t black_cells = 0;
    std::uint64_t white_cells = 0;
    std::uint64_t empty_cells = 0;
    std::uint64_t max_white_star_component = 0;
    std::uint64_t missing_face_links = 0;
};

// Pure function of (config, master seed, trial index); wall_time_s is
// informational only and never serialized.
struct TrialResult {
    std::uint64_t trial_index = 0;
    std::uint64_t trial_seed = 0;
    std::uint64_t points_seed = 0;
    std::uint64_t prefs_seed = 0;
    std::uint64_t n = 0;
    int d = 0;
    double gamma = 0.0;
    double r = 0.0;
    int c = 0;
    bool is_connected = false;
    std::uint64_t n_components = 0;
    std::uint64_t smallest_component = 0;
    std::optional<std::int64_t> c_star;  // -1 encodes "infinity"
    std::optional<HopDiameter> diameter;
    std::optional<double> spanning;
    std::string spanning_mode;
    std::optional<std::uint64_t> isolated_cliques_found;  // at k = c+1
    std::optional<DensityReport> density;
    std::optional<ColoringSummary> coloring;
    std::optional<PropertyReport> properties;
    std::optional<MoonReport> moons;
    double wall_time_s = 0.0;
    std::string error;
};

// Seed rule: trial_seed = derive_key(master, Stream::trial, index);
// points/prefs/moons/sources streams hang off trial_seed.
TrialResult run_trial(const TrialConfig& config, std::uint64_t trial_index);

// Minimal c with S(c) connected under one preference table, by
// bisection on [1, max_degree]; -1 when even S(max_degree) = G is
// disconnected.
std::int64_t c_star_single(const VisibilityGraph& g, const PreferenceTable& prefs);

struct CStarConfig {
    ModelParams params;
    std::uint64_t trials = 10;
    int workers = 1;
};

struct CStarResult {
    std::vector<std::int64_t> per_trial;  // -1 = infinity
    std::uint64_t infinite_trials = 0;
    bool median_infinite = false;
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double scale = 0.0;           // sqrt(2 ln n / ln ln n)
    double ratio_median_to_scale = 0.0;
};

CStarResult estimate_c_star(const CStarConfig& config);

struct SweepConfig {
    std::vector<std::uint64_t> n_grid;
    int d = 2;
    std::vector<double> gamma_grid;  // exactly one of gamma_grid / r_grid nonempty
    std::vector<double> r_grid;
    int c_min = 1;
    int c_max = 1;
    double eps = 0.1;
    std::uint64_t seed = 1;
    std::uint64_t trials = 10;
    int workers = 1;
};

struct SweepRow {
    std::uint64_t n = 0;
    int d = 0;
    double gamma = 0.0;
    double r = 0.0;
    int c = 0;
    std::uint64_t trial = 0;
    bool is_connected = false;
    std::uint64_t n_components = 0;
    std::uint64_t smallest_component = 0;
    std::string error;
};

struct SweepAggregate {
    std::uint64_t n = 0;
    double gamma = 0.0;
    double r = 0.0;
    int c = 0;
    std::uint64_t trials = 0;
    std::uint64_t connected = 0;
    double p_connected = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
};

struct SweepTable {
    std::vector<SweepRow> rows;            // ordered by (n, geometry, c, trial)
    std::vector<SweepAggregate> aggregates;
};

// Trials share one preference table across the whole c grid, so
// per-slice Pr[connected] is nondecreasing in c by construction.
SweepTable sweep(const SweepConfig& config);

// 95% Wilson score interval.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

// Deterministic worker pool; results must be written to preallocated
// slots keyed by task index.
void parallel_tasks(std::size_t count, int workers, const std::function<void(std::size_t)>& task);

}  // namespace btg
