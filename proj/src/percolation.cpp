#include "btgraph/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "btgraph/analysis.hpp"
#include "btgraph/rng.hpp"
#include "btgraph/union_find.hpp"

namespace btg {

double density_f(double x) { return x * std::log(x) - x + 1.0; }

namespace {

double bisect_density_half(double lo, double hi) {
    // f - 1/2 changes sign on (lo, hi)
    double flo = density_f(lo) - 0.5;
    for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = density_f(mid) - 0.5;
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::pair<double, double> solve_alpha_beta() {
    const double alpha = bisect_density_half(1e-9, 1.0);
    const double beta = bisect_density_half(1.0, 8.0);
    return {alpha, beta};
}

DensityReport density_report(const PointSet& points, const CellGrid& grid, std::uint64_t n) {
    DensityReport report;
    std::tie(report.alpha, report.beta) = solve_alpha_beta();
    const double ell_d = std::pow(grid.side, grid.dim);
    report.lower = report.alpha * double(n) * ell_d;
    report.upper = report.beta * double(n) * ell_d;

    const std::int64_t cells = grid.cell_count();
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        const std::uint64_t count = grid.members_end(cell) - grid.members_begin(cell);
        if (double(count) < report.lower || double(count) > report.upper)
            report.violations.emplace_back(cell, count);
    }
    report.all_ok = report.violations.empty();
    return report;
}

CellColoring color_cells(const IrrigationGraph& s, const PointSet& points, const CellGrid& grid3) {
    CellColoring coloring;
    coloring.dim = grid3.dim;
    coloring.per_side = grid3.per_side;
    coloring.cell_side = grid3.side;

    const std::int64_t cells = grid3.cell_count();
    coloring.occupancy.resize(cells);
    for (std::int64_t cell = 0; cell < cells; ++cell)
        coloring.occupancy[cell] = grid3.members_end(cell) - grid3.members_begin(cell);

    // intra-cell connectivity and inter-cell face links from the edges of S
    UnionFind uf(points.size());
    std::vector<std::pair<std::int64_t, std::int64_t>> linked;
    std::vector<int> cu(grid3.dim), cv(grid3.dim);
    for (const auto& [u, v] : s.edges) {
        const std::int64_t a = grid3.cell_of_vertex[u];
        const std::int64_t b = grid3.cell_of_vertex[v];
        if (a == b) {
            uf.unite(u, v);
            continue;
        }
        grid3.decode(a, cu.data());
        grid3.decode(b, cv.data());
        int manhattan = 0;
        for (int k = 0; k < grid3.dim; ++k) manhattan += std::abs(cu[k] - cv[k]);
        if (manhattan == 1) linked.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(linked.begin(), linked.end());
    linked.erase(std::unique(linked.begin(), linked.end()), linked.end());

    coloring.color.resize(cells);
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        if (coloring.occupancy[cell] == 0) {
            coloring.color[cell] = CellColor::empty;
            ++coloring.empty_cells;
            continue;
        }
        const std::uint32_t first = grid3.cell_members[grid3.members_begin(cell)];
        const std::uint32_t root = uf.find(first);
        bool interconnected = true;
        for (std::int64_t m = grid3.members_begin(cell) + 1; m < grid3.members_end(cell); ++m)
            if (uf.find(grid3.cell_members[m]) != root) {
                interconnected = false;
                break;
            }
        coloring.color[cell] = interconnected ? CellColor::black : CellColor::white;
        interconnected ? ++coloring.black_cells : ++coloring.white_cells;
    }

    // every face-adjacent pair missing an S-edge link
    std::vector<int> cc(grid3.dim);
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        grid3.decode(cell, cc.data());
        for (int k = 0; k < grid3.dim; ++k) {
            if (cc[k] + 1 >= grid3.per_side) continue;
            std::int64_t step = 1;
            for (int j = 0; j < k; ++j) step *= grid3.per_side;
            const std::pair<std::int64_t, std::int64_t> pair{cell, cell + step};
            if (!std::binary_search(linked.begin(), linked.end(), pair))
                coloring.missing_face_links.push_back(pair);
        }
    }
    coloring.all_face_linked = coloring.missing_face_links.empty();

    // *-components of white cells over Chebyshev-1 adjacency
    if (cells > 0) {
        UnionFind star{std::size_t(cells)};
        std::vector<int> nb(grid3.dim);
        for (std::int64_t cell = 0; cell < cells; ++cell) {
            if (coloring.color[cell] != CellColor::white) continue;
            grid3.decode(cell, cc.data());
            // enumerate the 3^d - 1 Chebyshev neighbors
            std::vector<int> delta(grid3.dim, -1);
            while (true) {
                bool all_zero = true, in_range = true;
                for (int k = 0; k < grid3.dim; ++k) {
                    nb[k] = cc[k] + delta[k];
                    if (delta[k] != 0) all_zero = false;
                    if (nb[k] < 0 || nb[k] >= grid3.per_side) in_range = false;
                }
                if (!all_zero && in_range) {
                    const std::int64_t other = grid3.linear_id(nb.data());
                    if (coloring.color[other] == CellColor::white)
                        star.unite(std::uint32_t(cell), std::uint32_t(other));
                }
                int axis = 0;
                while (axis < grid3.dim && ++delta[axis] > 1) {
                    delta[axis] = -1;
                    ++axis;
                }
                if (axis == grid3.dim) break;
            }
        }
        for (std::int64_t cell = 0; cell < cells; ++cell)
            if (coloring.color[cell] == CellColor::white &&
                star.find(std::uint32_t(cell)) == std::uint32_t(cell))
                coloring.star_white_components.push_back(star.component_size(std::uint32_t(cell)));
        std::sort(coloring.star_white_components.rbegin(), coloring.star_white_components.rend());
        if (!coloring.star_white_components.empty())
            coloring.max_white_star_component = coloring.star_white_components.front();
    }
    return coloring;
}

PropertyReport property_report(const IrrigationGraph& s, const CellColoring& coloring,
                               const DensityReport& density, const Geometry& geo,
                               std::uint64_t n, int d) {
    PropertyReport report;
    const double ln_n = n >= 2 ? std::log(double(n)) : 0.0;
    report.q = 2.0 * std::pow(ln_n, 2.0 / 3.0);
    report.s = std::exp(std::pow(ln_n, 1.0 / 3.0));
    report.lambda_occ = std::pow(3.0, d) * density.beta * std::pow(geo.gamma, d);

    report.max_white_star_component = coloring.max_white_star_component;
    report.max_cell_occupancy =
        coloring.occupancy.empty()
            ? 0
            : *std::max_element(coloring.occupancy.begin(), coloring.occupancy.end());
    report.smallest_component = components(s).smallest;

    report.prop_i = coloring.empty_cells == 0 && coloring.all_face_linked;
    report.prop_ii = double(report.max_white_star_component) <= report.q;
    report.prop_iii = double(report.smallest_component) >= report.s;
    report.prop_iv = double(report.max_cell_occupancy) <= report.lambda_occ * ln_n;

    report.side_q_ok = report.q < (1.0 / (d + 1)) * std::pow(geo.r, -(1.0 - 1.0 / d));
    if (d >= 2)
        report.side_s_ok = report.s / (report.lambda_occ * ln_n) >
                           std::pow((d + 1) * report.q, double(d) / (d - 1));
    return report;
}

std::uint64_t moon_count(const PointSet& points, const CellGrid& grid, const double* x,
                         const double* y, double r) {
    const int d = points.dim;
    const double r2 = r * r;
    const double half_r2 = 0.25 * r2;
    std::uint64_t count = 0;
    std::vector<int> lo(d), hi(d), cur(d);
    // points within r/2 of y lie within 2 ell-cells per axis
    for (int k = 0; k < d; ++k) {
        const int base = grid.axis_index(y[k]);
        lo[k] = std::max(0, base - 2);
        hi[k] = std::min(grid.per_side - 1, base + 2);
        cur[k] = lo[k];
    }
    while (true) {
        const std::int64_t cell = grid.linear_id(cur.data());
        for (std::int64_t m = grid.members_begin(cell); m < grid.members_end(cell); ++m) {
            const double* p = points.point(grid.cell_members[m]);
            if (sq_dist(p, y, d) < half_r2 && sq_dist(p, x, d) < r2) ++count;
        }
        int axis = 0;
        while (axis < d && ++cur[axis] > hi[axis]) {
            cur[axis] = lo[axis];
            ++axis;
        }
        if (axis == d) break;
    }
    return count;
}

MoonReport moon_report(const PointSet& points, double r, int pair_samples, std::uint64_t seed,
                       std::optional<double> sigma, std::optional<double> rho) {
    if (pair_samples < 1) throw std::invalid_argument("pair_samples must be >= 1");
    if (!(r > 0.0) || !(r < 1.0)) throw std::invalid_argument("radius-out-of-range: need 0 < r < 1");

    MoonReport report;
    report.samples = std::uint64_t(pair_samples);
    const std::uint64_t n = points.size();
    const int d = points.dim;

    if (n >= 2) {
        const double ln_n = std::log(double(n));
        const double gamma = r / std::pow(ln_n / double(n), 1.0 / d);
        const double theta_d = unit_ball_volume(d);
        const double sig = sigma.value_or(0.5 * theta_d * std::pow(2.0, -d) * std::pow(gamma, d));
        const double rh = rho.value_or(2.0 * std::pow(2.0, -d) * std::pow(gamma, d));
        report.lower_bound = sig * ln_n;
        report.upper_bound = rh * ln_n;
    }

    const CellGrid grid = n > 0 ? build_ell_grid(points, r) : CellGrid{};
    const double sep = 1.25 * r;

    Rng rng = make_stream(seed, Stream::moons);
    std::vector<double> x(d), y(d);
    std::uint64_t min_count = std::uint64_t(-1), max_count = 0;

    for (int sample = 0; sample < pair_samples; ++sample) {
        for (int k = 0; k < d; ++k) x[k] = rng.next_unit();
        // y uniform in B(x, 5r/4) intersected with the cube, by rejection
        while (true) {
            double norm2 = 0.0;
            bool inside = true;
            for (int k = 0; k < d; ++k) {
                const double offset = (2.0 * rng.next_unit() - 1.0) * sep;
                y[k] = x[k] + offset;
                norm2 += offset * offset;
                if (y[k] < 0.0 || y[k] > 1.0) inside = false;
            }
            if (inside && norm2 < sep * sep) break;
        }

        const std::uint64_t count = n > 0 ? moon_count(points, grid, x.data(), y.data(), r) : 0;
        min_count = std::min(min_count, count);
        max_count = std::max(max_count, count);
    }

    report.min_count = min_count;
    report.max_count = max_count;
    report.min_ok = double(report.min_count) >= report.lower_bound;
    report.max_ok = double(report.max_count) <= report.upper_bound;
    return report;
}

}  // namespace btg
