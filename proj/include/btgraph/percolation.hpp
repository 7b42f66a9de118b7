#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "btgraph/cell_grid.hpp"
#include "btgraph/irrigation.hpp"
#include "btgraph/params.hpp"
#include "btgraph/point_set.hpp"

namespace btg {

// f(x) = x ln x - x + 1; strictly convex, f(1) = 0, f(0+) = 1.
double density_f(double x);

// Roots of f(x) = 1/2 below and above 1, by bisection to |f - 1/2| < 1e-12.
std::pair<double, double> solve_alpha_beta();

struct DensityReport {
    double alpha = 0.0;
    double beta = 0.0;
    double lower = 0.0;  // alpha * n * ell^d
    double upper = 0.0;  // beta * n * ell^d
    bool all_ok = true;
    std::vector<std::pair<std::int64_t, std::uint64_t>> violations;  // (cell, count)
};

// Per-cell occupancy of the ell-tiling against [alpha n ell^d, beta n ell^d].
DensityReport density_report(const PointSet& points, const CellGrid& grid, std::uint64_t n);

enum class CellColor : std::uint8_t { empty, white, black };

// Black/white coloring of the coarse (3*ell) tiling. A cell is black iff
// its vertices are connected using only intra-cell edges of S; occupied
// but not internally connected is white; unoccupied is empty.
struct CellColoring {
    int dim = 0;
    int per_side = 0;
    double cell_side = 0.0;
    std::vector<CellColor> color;
    std::vector<std::uint64_t> occupancy;
    std::vector<std::uint64_t> star_white_components;  // sizes, descending
    std::uint64_t max_white_star_component = 0;
    std::uint64_t empty_cells = 0;
    std::uint64_t white_cells = 0;
    std::uint64_t black_cells = 0;
    // face-adjacent cell pairs with no S-edge between them
    std::vector<std::pair<std::int64_t, std::int64_t>> missing_face_links;
    bool all_face_linked = false;
};

CellColoring color_cells(const IrrigationGraph& s, const PointSet& points, const CellGrid& grid3);

struct PropertyReport {
    bool prop_i = false;    // every cell occupied and linked to each face neighbor
    bool prop_ii = false;   // max white *-component <= q
    bool prop_iii = false;  // smallest S-component >= s
    bool prop_iv = false;   // max cell occupancy <= lambda_occ * ln n
    double q = 0.0;         // 2 (ln n)^(2/3)
    double s = 0.0;         // exp((ln n)^(1/3))
    double lambda_occ = 0.0;  // 3^d * beta * gamma^d
    std::uint64_t max_white_star_component = 0;
    std::uint64_t smallest_component = 0;
    std::uint64_t max_cell_occupancy = 0;
    // informational side conditions; the second is undefined for d = 1
    std::optional<bool> side_q_ok;
    std::optional<bool> side_s_ok;
};

PropertyReport property_report(const IrrigationGraph& s, const CellColoring& coloring,
                               const DensityReport& density, const Geometry& geo,
                               std::uint64_t n, int d);

struct MoonReport {
    std::uint64_t min_count = 0;
    std::uint64_t max_count = 0;
    double lower_bound = 0.0;  // sigma * ln n
    double upper_bound = 0.0;  // rho * ln n
    bool min_ok = false;
    bool max_ok = false;
    std::uint64_t samples = 0;
};

// Number of points in the moon B(x,r) * B(y,r/2), counted through the
// ell grid (both ball tests strict).
std::uint64_t moon_count(const PointSet& points, const CellGrid& ell_grid, const double* x,
                         const double* y, double r);

// Samples center pairs (x uniform in the cube, y uniform in
// B(x, 5r/4) intersected with the cube, by rejection) and counts points
// in the moon B(x,r) * B(y,r/2). Default bounds instantiate sigma =
// (1/2) theta_d 2^-d gamma^d and rho = 2 * 2^-d gamma^d; both are
// overridable.
MoonReport moon_report(const PointSet& points, double r, int pair_samples, std::uint64_t seed,
                       std::optional<double> sigma = {}, std::optional<double> rho = {});

}  // namespace btg
