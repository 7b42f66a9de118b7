#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "btgraph/visibility.hpp"

namespace btg {

// Per-vertex uniform random permutation of the visible-neighbor list.
// A single table serves every choice count c at once: the c-out
// subgraph takes the length-c prefix of each permutation, which couples
// the subgraphs monotonically in c.
struct PreferenceTable {
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> offsets;  // same shape as the graph's CSR
    std::vector<std::uint32_t> perm;

    std::uint32_t length(std::uint32_t i) const {
        return static_cast<std::uint32_t>(offsets[i + 1] - offsets[i]);
    }
    std::span<const std::uint32_t> prefs(std::uint32_t i) const {
        return {perm.data() + offsets[i], perm.data() + offsets[i + 1]};
    }
};

// Realized irrigation subgraph: per-vertex chosen arcs plus the
// deduplicated undirected edge set (u < v, sorted).
struct IrrigationGraph {
    std::uint32_t n = 0;
    int c = 0;
    std::vector<std::uint64_t> arc_offsets;
    std::vector<std::uint32_t> arc_targets;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    std::span<const std::uint32_t> arcs(std::uint32_t i) const {
        return {arc_targets.data() + arc_offsets[i], arc_targets.data() + arc_offsets[i + 1]};
    }
};

// Independent uniform permutations; vertex i's stream is derived from
// (seed, i), so any subset of vertices regenerates independently.
PreferenceTable assign_preferences(const VisibilityGraph& g, std::uint64_t seed);

// Prefix picks: vertex i keeps the first min(c, deg(i)) entries of its
// permutation.
IrrigationGraph realize(const VisibilityGraph& g, const PreferenceTable& prefs, int c);

// First-round choice count of the staged sampler:
// ceil(sqrt((2 + eps/2) * ln n / ln ln n)).
int staged_first_round_picks(std::uint64_t n, double eps);

// Round-based sampler: round one draws c_hat picks without replacement
// (permutation prefix from `seed`); each of the floor((c - c_hat)/L)
// remaining rounds draws L picks independently with replacement.
// Duplicate picks stay in arc_targets and collapse in `edges`.
IrrigationGraph realize_staged(const VisibilityGraph& g, int c, double eps, int round_size,
                               std::uint64_t seed);

// Connectivity of the prefix subgraph S(c) without materializing it.
bool connected_with_prefix(const PreferenceTable& prefs, std::uint32_t n, int c);

}  // namespace btg
