#include <doctest.h>

#include <cmath>

#include "btgraph/percolation.hpp"
#include "../common/oracles.hpp"

using namespace btg;

namespace {

// test-local root finder, independent of the library's bisection
double second_opinion_root(double lo, double hi) {
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double val = mid * std::log(mid) - mid + 1.0 - 0.5;
        const double at_lo = lo * std::log(lo) - lo + 1.0 - 0.5;
        if ((val < 0.0) == (at_lo < 0.0))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

IrrigationGraph realized_instance(const oracle::RandomInstance& inst) {
    const VisibilityGraph g = build_visibility(inst.points, inst.r);
    const PreferenceTable prefs = assign_preferences(g, inst.prefs_seed);
    return realize(g, prefs, inst.c);
}

}  // namespace

TEST_CASE("density roots") {
    CHECK(density_f(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    const auto [alpha, beta] = solve_alpha_beta();
    CHECK(alpha > 0.0);
    CHECK(alpha < 1.0);
    CHECK(beta > 1.0);
    CHECK(beta < 8.0);
    CHECK(std::abs(density_f(alpha) - 0.5) < 1e-12);
    CHECK(std::abs(density_f(beta) - 0.5) < 1e-12);
    CHECK(alpha == doctest::Approx(0.1867).epsilon(1e-3));
    CHECK(beta == doctest::Approx(second_opinion_root(1.0, 8.0)).epsilon(1e-12));
    CHECK(alpha == doctest::Approx(second_opinion_root(1e-9, 1.0)).epsilon(1e-10));
}

TEST_CASE("density report with no points") {
    const PointSet points = sample_points(0, 2, 1);
    PointSet probe = points;
    probe.dim = 2;
    const CellGrid grid = build_cell_grid(probe, 4);
    const DensityReport report = density_report(probe, grid, 0);
    CHECK(report.lower == 0.0);
    CHECK(report.upper == 0.0);
    CHECK(report.all_ok);  // bounds are zero, every empty cell sits inside [0,0]
}

TEST_CASE("density report flags a synthetic pile-up") {
    PointSet points;
    points.dim = 2;
    const std::size_t n = 100;
    for (std::size_t i = 0; i < n; ++i) {
        points.coords.push_back(0.5);
        points.coords.push_back(0.5);
    }
    const CellGrid grid = build_ell_grid(points, 0.25);  // 12x12 cells
    const DensityReport report = density_report(points, grid, n);
    CHECK_FALSE(report.all_ok);
    // the occupied cell breaks the upper bound, every other cell the lower
    CHECK(report.violations.size() == std::size_t(grid.cell_count()));
}

TEST_CASE("density report accepts a healthy uniform sample") {
    const PointSet points = sample_points(20000, 2, 33);
    ModelParams params;
    params.n = 20000;
    params.d = 2;
    params.gamma = 6.0;
    const Geometry geo = derive_geometry(params);
    const CellGrid grid = build_ell_grid(points, geo.r);
    CHECK(density_report(points, grid, 20000).all_ok);
}

TEST_CASE("cell coloring on tiny fixtures") {
    PointSet points;
    points.dim = 2;
    // r = 0.3 -> coarse grid 3x3 with cell side 1/3
    points.coords = {0.05, 0.05, 0.08, 0.05,   // cell (0,0): visible pair -> black
                     0.9,  0.9,                // cell (2,2): single vertex -> black
                     0.70, 0.05, 0.99, 0.30};  // cell (2,0): pair at 0.38 > r -> white
    const double r = 0.3;
    const VisibilityGraph g = build_visibility(points, r);
    const PreferenceTable prefs = assign_preferences(g, 8);
    const IrrigationGraph s = realize(g, prefs, 5);
    const CellGrid grid3 = build_coarse_grid(points, r);
    const CellColoring coloring = color_cells(s, points, grid3);

    REQUIRE(grid3.per_side == 3);
    const auto at = [&](int x, int y) { return coloring.color[y * 3 + x]; };
    CHECK(at(0, 0) == CellColor::black);
    CHECK(at(2, 2) == CellColor::black);
    CHECK(at(2, 0) == CellColor::white);
    CHECK(at(0, 1) == CellColor::empty);
    CHECK(coloring.empty_cells == 6);
    CHECK(coloring.max_white_star_component == 1);
}

TEST_CASE("coloring matches the per-cell BFS oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto inst = oracle::random_instance(seed + 4000, 50);
        const IrrigationGraph s = realized_instance(inst);
        const CellGrid grid3 = build_coarse_grid(inst.points, inst.r);
        const CellColoring coloring = color_cells(s, inst.points, grid3);
        CHECK(coloring.color == oracle::brute_coloring(s, inst.points, grid3));

        std::uint64_t whites = 0;
        for (auto size : coloring.star_white_components) whites += size;
        CHECK(whites == coloring.white_cells);
    }
}

TEST_CASE("property report reacts to empty cells") {
    PointSet points;
    points.dim = 2;
    points.coords = {0.05, 0.05, 0.08, 0.05};
    const double r = 0.3;
    const VisibilityGraph g = build_visibility(points, r);
    const PreferenceTable prefs = assign_preferences(g, 5);
    const IrrigationGraph s = realize(g, prefs, 2);
    const CellGrid grid3 = build_coarse_grid(points, r);
    const CellColoring coloring = color_cells(s, points, grid3);
    const CellGrid ell = build_ell_grid(points, r);
    const DensityReport density = density_report(points, ell, points.size());

    ModelParams params;
    params.n = points.size();
    params.d = 2;
    params.r = r;
    const Geometry geo = derive_geometry(params);
    const PropertyReport report = property_report(s, coloring, density, geo, points.size(), 2);
    CHECK_FALSE(report.prop_i);
    CHECK(report.smallest_component == 2);
}

TEST_CASE("moon count equals the small ball when centers are close") {
    const PointSet points = sample_points(4000, 2, 71);
    const double r = 0.2;
    const CellGrid grid = build_ell_grid(points, r);
    const double x[2] = {0.5, 0.5};
    const double y[2] = {0.55, 0.5};  // separation r/4 < r/2: moon == B(y, r/2)
    std::uint64_t ball = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (sq_dist(points.point(i), y, 2) < 0.25 * r * r) ++ball;
    CHECK(moon_count(points, grid, x, y, r) == ball);
}

TEST_CASE("moon report with an empty cube") {
    const PointSet points = sample_points(0, 2, 1);
    const MoonReport report = moon_report(points, 0.2, 50, 9);
    CHECK(report.min_count == 0);
    CHECK(report.max_count == 0);
}

TEST_CASE("moon report rejects nonpositive sample counts") {
    const PointSet points = sample_points(10, 2, 1);
    CHECK_THROWS_AS(moon_report(points, 0.2, 0, 9), std::invalid_argument);
}

TEST_CASE("coupled coloring is monotone in c") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = oracle::random_instance(seed + 5000, 60);
        const VisibilityGraph g = build_visibility(inst.points, inst.r);
        const PreferenceTable prefs = assign_preferences(g, inst.prefs_seed);
        const CellGrid grid3 = build_coarse_grid(inst.points, inst.r);
        const CellColoring lo = color_cells(realize(g, prefs, 2), inst.points, grid3);
        const CellColoring hi = color_cells(realize(g, prefs, 3), inst.points, grid3);
        for (std::int64_t cell = 0; cell < grid3.cell_count(); ++cell)
            if (lo.color[cell] == CellColor::black) CHECK(hi.color[cell] == CellColor::black);
        CHECK(hi.max_white_star_component <= lo.max_white_star_component);
    }
}
