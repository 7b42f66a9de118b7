#include "btgraph/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "btgraph/rng.hpp"
#include "btgraph/union_find.hpp"

namespace btg {

void parallel_tasks(std::size_t count, int workers, const std::function<void(std::size_t)>& task) {
    const std::size_t pool = std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
    if (pool == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (std::size_t w = 0; w < pool; ++w) {
        threads.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::int64_t c_star_single(const VisibilityGraph& g, const PreferenceTable& prefs) {
    if (g.n <= 1) return 1;
    if (g.max_degree == 0) return -1;
    if (!connected_with_prefix(prefs, g.n, int(g.max_degree))) return -1;
    std::uint32_t lo = 1, hi = g.max_degree;
    while (lo < hi) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        if (connected_with_prefix(prefs, g.n, int(mid)))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::int64_t(lo);
}

TrialResult run_trial(const TrialConfig& config, std::uint64_t trial_index) {
    const auto start = std::chrono::steady_clock::now();
    TrialResult res;
    res.trial_index = trial_index;
    try {
        const ModelParams& mp = config.params;
        const Geometry geo = derive_geometry(mp);
        res.n = mp.n;
        res.d = mp.d;
        res.gamma = geo.gamma;
        res.r = geo.r;
        res.c = mp.c;
        res.trial_seed = derive_key(mp.seed, Stream::trial, trial_index);
        res.points_seed = derive_key(res.trial_seed, Stream::points);
        res.prefs_seed = derive_key(res.trial_seed, Stream::prefs);

        const PointSet points = sample_points(mp.n, mp.d, res.points_seed);
        const VisibilityGraph g = build_visibility(points, geo.r);
        const PreferenceTable prefs = assign_preferences(g, res.prefs_seed);
        const IrrigationGraph s =
            config.sampler == TrialConfig::Sampler::staged
                ? realize_staged(g, mp.c, mp.eps, config.round_size, res.prefs_seed)
                : realize(g, prefs, mp.c);

        const ComponentSummary comp = components(s);
        res.is_connected = comp.is_connected;
        res.n_components = comp.count;
        res.smallest_component = comp.smallest;

        if (config.with_cliques)
            res.isolated_cliques_found = find_isolated_cliques(s, mp.c + 1).size();
        if (config.with_diameter) res.diameter = hop_diameter(s, config.exact_cutoff);
        if (config.with_spanning && res.is_connected && mp.n >= 2) {
            SpanningMode mode;
            if (mp.n <= config.spanning_exact_cutoff) {
                mode.kind = SpanningMode::Kind::exact;
                res.spanning_mode = "exact";
            } else {
                mode.kind = SpanningMode::Kind::sampled;
                mode.k_sources = config.spanning_sources;
                mode.seed = derive_key(res.trial_seed, Stream::sources);
                res.spanning_mode = "sampled:" + std::to_string(config.spanning_sources);
            }
            res.spanning = spanning_ratio(s, points, geo.r, mode);
        }
        if (config.with_cstar) res.c_star = c_star_single(g, prefs);
        if (config.with_diagnostics) {
            const CellGrid ell_grid = build_ell_grid(points, geo.r);
            res.density = density_report(points, ell_grid, mp.n);
            const CellGrid grid3 = build_coarse_grid(points, geo.r);
            const CellColoring coloring = color_cells(s, points, grid3);
            res.coloring = ColoringSummary{
                coloring.black_cells, coloring.white_cells, coloring.empty_cells,
                coloring.max_white_star_component, coloring.missing_face_links.size()};
            res.properties = property_report(s, coloring, *res.density, geo, mp.n, mp.d);
            res.moons = moon_report(points, geo.r, config.moon_samples,
                                    derive_key(res.trial_seed, Stream::moons));
        }
    } catch (const std::exception& e) {
        res.error = e.what();
    }
    res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

CStarResult estimate_c_star(const CStarConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    CStarResult result;
    result.per_trial.assign(config.trials, 0);
    result.scale = c_star_scale(config.params.n);

    const Geometry geo = derive_geometry(config.params);
    parallel_tasks(config.trials, config.workers, [&](std::size_t t) {
        const std::uint64_t trial_seed = derive_key(config.params.seed, Stream::trial, t);
        const PointSet points =
            sample_points(config.params.n, config.params.d, derive_key(trial_seed, Stream::points));
        const VisibilityGraph g = build_visibility(points, geo.r);
        const PreferenceTable prefs = assign_preferences(g, derive_key(trial_seed, Stream::prefs));
        result.per_trial[t] = c_star_single(g, prefs);
    });

    // sort with infinity (-1) last
    std::vector<std::int64_t> sorted = result.per_trial;
    std::sort(sorted.begin(), sorted.end(), [](std::int64_t a, std::int64_t b) {
        const bool ia = a < 0, ib = b < 0;
        if (ia != ib) return ib;
        return a < b;
    });
    result.infinite_trials =
        std::count_if(sorted.begin(), sorted.end(), [](std::int64_t v) { return v < 0; });

    auto value_at = [&](std::size_t idx, bool& infinite) -> double {
        if (sorted[idx] < 0) {
            infinite = true;
            return 0.0;
        }
        return double(sorted[idx]);
    };
    const std::size_t t = sorted.size();
    bool inf_flag = false;
    if (t % 2 == 1) {
        result.median = value_at(t / 2, inf_flag);
    } else {
        bool inf_a = false, inf_b = false;
        const double a = value_at(t / 2 - 1, inf_a);
        const double b = value_at(t / 2, inf_b);
        inf_flag = inf_a || inf_b;
        result.median = 0.5 * (a + b);
    }
    result.median_infinite = inf_flag;
    bool ignored = false;
    result.q1 = value_at((t - 1) / 4, ignored);
    result.q3 = value_at(3 * (t - 1) / 4, ignored);
    result.ratio_median_to_scale = inf_flag ? 0.0 : result.median / result.scale;
    return result;
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;  // 95%
    const double t = double(trials);
    const double p = double(successes) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = (p + z2 / (2.0 * t)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SweepTable sweep(const SweepConfig& config) {
    if (config.n_grid.empty()) throw std::invalid_argument("n grid must be nonempty");
    if (config.gamma_grid.empty() == config.r_grid.empty())
        throw std::invalid_argument("exactly one of {gamma grid, r grid} must be supplied");
    if (config.c_min < 1 || config.c_max < config.c_min)
        throw std::invalid_argument("need 1 <= c_min <= c_max");
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");

    const bool gamma_mode = !config.gamma_grid.empty();
    const std::vector<double>& geom_grid = gamma_mode ? config.gamma_grid : config.r_grid;
    const std::size_t n_count = config.n_grid.size();
    const std::size_t geom_count = geom_grid.size();
    const std::size_t c_count = std::size_t(config.c_max - config.c_min + 1);
    const std::size_t trials = config.trials;

    SweepTable table;
    table.rows.resize(n_count * geom_count * c_count * trials);

    // task = one (n, geometry, trial); rows land at fixed offsets so the
    // output is identical for any worker count
    const std::size_t task_count = n_count * geom_count * trials;
    parallel_tasks(task_count, config.workers, [&](std::size_t task) {
        const std::size_t trial = task % trials;
        const std::size_t geom_idx = (task / trials) % geom_count;
        const std::size_t n_idx = task / (trials * geom_count);

        ModelParams mp;
        mp.n = config.n_grid[n_idx];
        mp.d = config.d;
        if (gamma_mode)
            mp.gamma = geom_grid[geom_idx];
        else
            mp.r = geom_grid[geom_idx];
        mp.seed = config.seed;
        mp.eps = config.eps;

        auto row_at = [&](std::size_t c_idx) -> SweepRow& {
            const std::size_t base =
                ((n_idx * geom_count + geom_idx) * c_count + c_idx) * trials + trial;
            return table.rows[base];
        };

        SweepRow proto;
        proto.n = mp.n;
        proto.d = mp.d;
        proto.trial = trial;
        try {
            const Geometry geo = derive_geometry(mp);
            proto.gamma = geo.gamma;
            proto.r = geo.r;

            const std::uint64_t trial_seed = derive_key(mp.seed, Stream::trial, trial);
            const PointSet points =
                sample_points(mp.n, mp.d, derive_key(trial_seed, Stream::points));
            const VisibilityGraph g = build_visibility(points, geo.r);
            const PreferenceTable prefs = assign_preferences(g, derive_key(trial_seed, Stream::prefs));

            // grow S(c) incrementally; arcs at level k are the k-th picks
            UnionFind uf(g.n);
            for (int c = 1; c <= config.c_max; ++c) {
                for (std::uint32_t i = 0; i < g.n; ++i) {
                    const auto p = prefs.prefs(i);
                    if (p.size() >= std::size_t(c)) uf.unite(i, p[c - 1]);
                }
                if (c < config.c_min) continue;
                SweepRow row = proto;
                row.c = c;
                if (g.n == 0) {
                    row.is_connected = true;
                } else {
                    row.n_components = uf.components();
                    row.is_connected = row.n_components == 1;
                    std::uint64_t smallest = std::uint64_t(-1);
                    for (std::uint32_t v = 0; v < g.n; ++v)
                        if (uf.find(v) == v) smallest = std::min(smallest, uf.component_size(v));
                    row.smallest_component = smallest;
                }
                row_at(std::size_t(c - config.c_min)) = row;
            }
        } catch (const std::exception& e) {
            for (std::size_t c_idx = 0; c_idx < c_count; ++c_idx) {
                SweepRow row = proto;
                row.c = config.c_min + int(c_idx);
                row.error = e.what();
                row_at(c_idx) = row;
            }
        }
    });

    for (std::size_t n_idx = 0; n_idx < n_count; ++n_idx)
        for (std::size_t geom_idx = 0; geom_idx < geom_count; ++geom_idx)
            for (std::size_t c_idx = 0; c_idx < c_count; ++c_idx) {
                const std::size_t base =
                    ((n_idx * geom_count + geom_idx) * c_count + c_idx) * trials;
                SweepAggregate agg;
                agg.n = config.n_grid[n_idx];
                agg.c = config.c_min + int(c_idx);
                agg.trials = trials;
                for (std::size_t t = 0; t < trials; ++t) {
                    const SweepRow& row = table.rows[base + t];
                    agg.gamma = row.gamma;
                    agg.r = row.r;
                    if (row.error.empty() && row.is_connected) ++agg.connected;
                }
                agg.p_connected = double(agg.connected) / double(trials);
                std::tie(agg.wilson_lo, agg.wilson_hi) = wilson_interval(agg.connected, trials);
                table.aggregates.push_back(agg);
            }
    return table;
}

}  // namespace btg
