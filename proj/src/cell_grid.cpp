#include "btgraph/cell_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace btg {

namespace {
std::int64_t checked_cell_count(int per_side, int dim) {
    std::int64_t count = 1;
    for (int k = 0; k < dim; ++k) {
        if (count > (std::int64_t(1) << 31) / per_side)
            throw std::invalid_argument("grid too fine: cell count exceeds 2^31");
        count *= per_side;
    }
    return count;
}
}  // namespace

CellGrid build_cell_grid(const PointSet& points, int per_side) {
    if (per_side < 1) throw std::invalid_argument("per_side must be >= 1");
    CellGrid grid;
    grid.dim = points.dim;
    grid.per_side = per_side;
    grid.side = 1.0 / per_side;

    const std::int64_t cells = checked_cell_count(per_side, points.dim);
    const std::size_t n = points.size();

    grid.cell_of_vertex.resize(n);
    grid.cell_offsets.assign(cells + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = points.point(i);
        std::int64_t id = 0;
        for (int k = points.dim - 1; k >= 0; --k) id = id * per_side + grid.axis_index(p[k]);
        grid.cell_of_vertex[i] = id;
        ++grid.cell_offsets[id + 1];
    }
    for (std::int64_t c = 0; c < cells; ++c) grid.cell_offsets[c + 1] += grid.cell_offsets[c];

    grid.cell_members.resize(n);
    std::vector<std::int64_t> cursor(grid.cell_offsets.begin(), grid.cell_offsets.end() - 1);
    for (std::size_t i = 0; i < n; ++i)
        grid.cell_members[cursor[grid.cell_of_vertex[i]]++] = static_cast<std::uint32_t>(i);
    return grid;
}

CellGrid build_ell_grid(const PointSet& points, double r) {
    if (!(r > 0.0) || !(r < 1.0)) throw std::invalid_argument("radius-out-of-range: need 0 < r < 1");
    const int k = static_cast<int>(std::floor(1.0 / r));
    return build_cell_grid(points, 3 * k);
}

CellGrid build_coarse_grid(const PointSet& points, double r) {
    if (!(r > 0.0) || !(r < 1.0)) throw std::invalid_argument("radius-out-of-range: need 0 < r < 1");
    const int k = static_cast<int>(std::floor(1.0 / r));
    return build_cell_grid(points, k);
}

}  // namespace btg
