#pragma once

#include <cstdint>
#include <vector>

#include "btgraph/point_set.hpp"

namespace btg {

// Uniform tiling of [0,1]^d into per_side^d half-open cubes with a CSR
// member index. Cell assignment uses boxes prod_k [k*side, (k+1)*side),
// so every point belongs to exactly one cell.
struct CellGrid {
    int dim = 0;
    int per_side = 0;
    double side = 0.0;

    std::vector<std::int64_t> cell_of_vertex;
    std::vector<std::int64_t> cell_offsets;   // size cell_count()+1
    std::vector<std::uint32_t> cell_members;  // vertex ids, ascending per cell

    std::int64_t cell_count() const { return std::int64_t(cell_offsets.size()) - 1; }

    std::int64_t linear_id(const int* cell_coords) const {
        std::int64_t id = 0;
        for (int k = dim - 1; k >= 0; --k) id = id * per_side + cell_coords[k];
        return id;
    }
    void decode(std::int64_t id, int* cell_coords) const {
        for (int k = 0; k < dim; ++k) {
            cell_coords[k] = static_cast<int>(id % per_side);
            id /= per_side;
        }
    }
    int axis_index(double x) const {
        int k = static_cast<int>(x * per_side);
        return k >= per_side ? per_side - 1 : k;
    }

    std::int64_t members_begin(std::int64_t cell) const { return cell_offsets[cell]; }
    std::int64_t members_end(std::int64_t cell) const { return cell_offsets[cell + 1]; }
};

CellGrid build_cell_grid(const PointSet& points, int per_side);

// ell-tiling: 3*floor(1/r) cells per side, side (1/3)*floor(1/r)^-1.
CellGrid build_ell_grid(const PointSet& points, double r);

// coarse 3*ell tiling: floor(1/r) cells per side.
CellGrid build_coarse_grid(const PointSet& points, double r);

}  // namespace btg
