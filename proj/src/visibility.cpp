#include "btgraph/visibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "btgraph/cell_grid.hpp"

namespace btg {

namespace {

// Enumerates every unordered pair (i, j), i < j, at strict distance < r,
// scanning the Chebyshev-3 cell window around each vertex.
template <typename Emit>
void for_each_visible_pair(const PointSet& points, const CellGrid& grid, double r, Emit&& emit) {
    const int d = points.dim;
    const double r2 = r * r;
    const std::size_t n = points.size();
    std::vector<int> base(d), lo(d), hi(d), cur(d);

    for (std::size_t i = 0; i < n; ++i) {
        const double* pi = points.point(i);
        grid.decode(grid.cell_of_vertex[i], base.data());
        for (int k = 0; k < d; ++k) {
            lo[k] = std::max(0, base[k] - 3);
            hi[k] = std::min(grid.per_side - 1, base[k] + 3);
            cur[k] = lo[k];
        }
        while (true) {
            const std::int64_t cell = grid.linear_id(cur.data());
            const auto* mem = grid.cell_members.data();
            const auto* first = mem + grid.members_begin(cell);
            const auto* last = mem + grid.members_end(cell);
            // members ascending: only j > i
            first = std::upper_bound(first, last, static_cast<std::uint32_t>(i));
            if (d == 2) {
                const double x = pi[0], y = pi[1];
                for (const auto* it = first; it != last; ++it) {
                    const double* pj = points.point(*it);
                    const double dx = pj[0] - x, dy = pj[1] - y;
                    if (dx * dx + dy * dy < r2) emit(static_cast<std::uint32_t>(i), *it);
                }
            } else {
                for (const auto* it = first; it != last; ++it) {
                    if (sq_dist(pi, points.point(*it), d) < r2)
                        emit(static_cast<std::uint32_t>(i), *it);
                }
            }
            int axis = 0;
            while (axis < d && ++cur[axis] > hi[axis]) {
                cur[axis] = lo[axis];
                ++axis;
            }
            if (axis == d) break;
        }
    }
}

}  // namespace

VisibilityGraph build_visibility(const PointSet& points, double r) {
    if (!(r > 0.0) || !(r < 1.0)) throw std::invalid_argument("radius-out-of-range: need 0 < r < 1");

    VisibilityGraph g;
    g.n = static_cast<std::uint32_t>(points.size());
    g.radius = r;
    g.offsets.assign(g.n + 1, 0);
    if (g.n == 0) return g;

    const CellGrid grid = build_ell_grid(points, r);

    std::vector<std::uint32_t> deg(g.n, 0);
    for_each_visible_pair(points, grid, r, [&](std::uint32_t i, std::uint32_t j) {
        ++deg[i];
        ++deg[j];
    });
    for (std::uint32_t i = 0; i < g.n; ++i) g.offsets[i + 1] = g.offsets[i] + deg[i];
    g.neighbors.resize(g.offsets.back());

    std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for_each_visible_pair(points, grid, r, [&](std::uint32_t i, std::uint32_t j) {
        g.neighbors[cursor[i]++] = j;
        g.neighbors[cursor[j]++] = i;
    });

    for (std::uint32_t i = 0; i < g.n; ++i)
        std::sort(g.neighbors.begin() + g.offsets[i], g.neighbors.begin() + g.offsets[i + 1]);
    g.max_degree = g.n ? *std::max_element(deg.begin(), deg.end()) : 0;
    return g;
}

}  // namespace btg
