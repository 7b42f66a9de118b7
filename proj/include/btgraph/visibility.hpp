#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "btgraph/point_set.hpp"

namespace btg {

// Visibility graph: i ~ j iff |X_i - X_j| < r (strict, Euclidean).
// Adjacency is CSR with neighbor lists sorted ascending.
struct VisibilityGraph {
    std::uint32_t n = 0;
    double radius = 0.0;
    std::vector<std::uint64_t> offsets;    // n+1
    std::vector<std::uint32_t> neighbors;  // sorted per vertex
    std::uint32_t max_degree = 0;

    std::uint32_t degree(std::uint32_t i) const {
        return static_cast<std::uint32_t>(offsets[i + 1] - offsets[i]);
    }
    std::span<const std::uint32_t> adj(std::uint32_t i) const {
        return {neighbors.data() + offsets[i], neighbors.data() + offsets[i + 1]};
    }
};

// Cell-list build; exact equality with the all-pairs strict-distance
// predicate. The search window is Chebyshev radius 3 in ell-cell units,
// which covers the visibility ball because ell >= r/3.
VisibilityGraph build_visibility(const PointSet& points, double r);

}  // namespace btg
