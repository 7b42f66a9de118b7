#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "btgraph/irrigation.hpp"
#include "btgraph/point_set.hpp"

namespace btg {

// CSR adjacency over the deduplicated edge set of an irrigation graph.
struct SubgraphAdjacency {
    std::uint32_t n = 0;
    std::vector<std::uint64_t> offsets;
    std::vector<std::uint32_t> neighbors;  // sorted per vertex

    std::span<const std::uint32_t> adj(std::uint32_t i) const {
        return {neighbors.data() + offsets[i], neighbors.data() + offsets[i + 1]};
    }
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
};

SubgraphAdjacency build_adjacency(const IrrigationGraph& s);

struct ComponentSummary {
    std::vector<std::uint32_t> component_id;  // smallest vertex id per component
    std::vector<std::uint64_t> sizes;         // ascending
    std::uint64_t count = 0;
    std::uint64_t smallest = 0;
    bool is_connected = true;
};

ComponentSummary components(const IrrigationGraph& s);

struct CliqueWitness {
    std::vector<std::uint32_t> vertices;
};

// Connected components of size exactly k that induce a complete
// subgraph; this is the isolated-clique disconnection witness.
std::vector<CliqueWitness> find_isolated_cliques(const IrrigationGraph& s, int k);

struct HopDiameter {
    bool connected = false;
    bool exact = false;       // all-sources BFS vs double-sweep bounds
    std::uint64_t lower = 0;  // certified lower bound (== upper when exact)
    std::uint64_t upper = 0;  // certified upper bound
};

// Exact max BFS eccentricity when n <= exact_cutoff; otherwise an
// iterated double-sweep lower bound paired with a 2*ecc(center) upper
// bound. Disconnected graphs report connected = false.
HopDiameter hop_diameter(const IrrigationGraph& s, std::uint32_t exact_cutoff = 3000);

struct SpanningMode {
    enum class Kind { exact, sampled } kind = Kind::exact;
    int k_sources = 16;        // sampled mode only
    std::uint64_t seed = 0;    // sampled-mode source selection
};

// Modified spanning ratio: sup over pairs with |X_i - X_j| > r of the
// intrinsic (shortest Euclidean-weighted path) distance over the
// straight-line distance. Sampled mode maxes over k uniformly chosen
// sources and is a lower bound on the exact value. Returns 1 when no
// eligible pair exists; throws when S is disconnected.
double spanning_ratio(const IrrigationGraph& s, const PointSet& points, double r,
                      const SpanningMode& mode);

}  // namespace btg
