#include "btgraph/point_set.hpp"

#include <limits>
#include <stdexcept>

#include "btgraph/rng.hpp"

namespace btg {

PointSet sample_points(std::uint64_t n, int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("invalid-dimension: d must be >= 1");
    if (n > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("n exceeds the supported vertex-id range");

    PointSet points;
    points.dim = d;
    points.seed = seed;
    points.coords.resize(static_cast<std::size_t>(n) * d);
    Rng rng = make_stream(seed, Stream::points);
    for (double& x : points.coords) x = rng.next_unit();
    return points;
}

double sq_dist(const double* a, const double* b, int d) {
    double s = 0.0;
    for (int k = 0; k < d; ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
    }
    return s;
}

}  // namespace btg
