#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace btg {

// n points in [0,1)^d stored row-major, plus the seed that produced them.
struct PointSet {
    int dim = 0;
    std::uint64_t seed = 0;
    std::vector<double> coords;

    std::size_t size() const { return dim > 0 ? coords.size() / dim : 0; }
    const double* point(std::size_t i) const { return coords.data() + i * dim; }
};

// i.i.d. uniform points from the points stream of `seed`. Identical
// inputs give bit-identical output.
PointSet sample_points(std::uint64_t n, int d, std::uint64_t seed);

double sq_dist(const double* a, const double* b, int d);

}  // namespace btg
