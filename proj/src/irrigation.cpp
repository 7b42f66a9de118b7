#include "btgraph/irrigation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "btgraph/rng.hpp"
#include "btgraph/union_find.hpp"

namespace btg {

PreferenceTable assign_preferences(const VisibilityGraph& g, std::uint64_t seed) {
    PreferenceTable table;
    table.seed = seed;
    table.offsets = g.offsets;
    table.perm = g.neighbors;
    for (std::uint32_t i = 0; i < g.n; ++i) {
        const std::uint64_t off = table.offsets[i];
        const std::uint64_t deg = table.offsets[i + 1] - off;
        if (deg < 2) continue;
        Rng rng = make_stream(seed, Stream::prefs, i);
        for (std::uint64_t k = 0; k + 1 < deg; ++k) {
            const std::uint64_t j = k + rng.below(deg - k);
            std::swap(table.perm[off + k], table.perm[off + j]);
        }
    }
    return table;
}

namespace {

void finalize_edges(IrrigationGraph& s) {
    s.edges.reserve(s.arc_targets.size());
    for (std::uint32_t i = 0; i < s.n; ++i)
        for (std::uint32_t t : s.arcs(i))
            s.edges.emplace_back(std::min(i, t), std::max(i, t));
    std::sort(s.edges.begin(), s.edges.end());
    s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
}

}  // namespace

IrrigationGraph realize(const VisibilityGraph& g, const PreferenceTable& prefs, int c) {
    if (c < 1) throw std::invalid_argument("choice count c must be >= 1");

    IrrigationGraph s;
    s.n = g.n;
    s.c = c;
    s.arc_offsets.assign(g.n + 1, 0);
    for (std::uint32_t i = 0; i < g.n; ++i) {
        const std::uint64_t take = std::min<std::uint64_t>(std::uint64_t(c), prefs.length(i));
        s.arc_offsets[i + 1] = s.arc_offsets[i] + take;
    }
    s.arc_targets.resize(s.arc_offsets.back());
    for (std::uint32_t i = 0; i < g.n; ++i) {
        const auto p = prefs.prefs(i);
        std::copy_n(p.begin(), s.arc_offsets[i + 1] - s.arc_offsets[i],
                    s.arc_targets.begin() + s.arc_offsets[i]);
    }
    finalize_edges(s);
    return s;
}

int staged_first_round_picks(std::uint64_t n, double eps) {
    if (n < 3) throw std::invalid_argument("n-too-small: need n >= 3 so ln ln n > 0");
    const double ln_n = std::log(double(n));
    return static_cast<int>(std::ceil(std::sqrt((2.0 + eps / 2.0) * ln_n / std::log(ln_n))));
}

IrrigationGraph realize_staged(const VisibilityGraph& g, int c, double eps, int round_size,
                               std::uint64_t seed) {
    if (round_size < 1) throw std::invalid_argument("round size L must be >= 1");
    const int c_hat = staged_first_round_picks(g.n, eps);
    if (c_hat > c) throw std::invalid_argument("invalid-parameters: staged sampler needs c >= c_hat");
    const int rounds = (c - c_hat) / round_size;  // truncated, erring toward fewer edges

    const PreferenceTable prefs = assign_preferences(g, seed);

    IrrigationGraph s;
    s.n = g.n;
    s.c = c;
    s.arc_offsets.assign(g.n + 1, 0);
    for (std::uint32_t i = 0; i < g.n; ++i) {
        const std::uint32_t deg = g.degree(i);
        const std::uint64_t take = std::min<std::uint64_t>(std::uint64_t(c_hat), deg);
        const std::uint64_t extra = deg > 0 ? std::uint64_t(rounds) * round_size : 0;
        s.arc_offsets[i + 1] = s.arc_offsets[i] + take + extra;
    }
    s.arc_targets.resize(s.arc_offsets.back());
    for (std::uint32_t i = 0; i < g.n; ++i) {
        const std::uint32_t deg = g.degree(i);
        std::uint64_t pos = s.arc_offsets[i];
        const auto p = prefs.prefs(i);
        const std::uint64_t take = std::min<std::uint64_t>(std::uint64_t(c_hat), deg);
        for (std::uint64_t k = 0; k < take; ++k) s.arc_targets[pos++] = p[k];
        if (deg == 0) continue;
        const auto adj = g.adj(i);
        for (int t = 1; t <= rounds; ++t) {
            Rng rng = make_stream(seed, Stream::staged, i, std::uint64_t(t));
            for (int k = 0; k < round_size; ++k)
                s.arc_targets[pos++] = adj[rng.below(deg)];
        }
    }
    finalize_edges(s);
    return s;
}

bool connected_with_prefix(const PreferenceTable& prefs, std::uint32_t n, int c) {
    if (n <= 1) return true;
    UnionFind uf(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto p = prefs.prefs(i);
        const std::uint64_t take = std::min<std::uint64_t>(std::uint64_t(c), p.size());
        for (std::uint64_t k = 0; k < take; ++k) uf.unite(i, p[k]);
    }
    return uf.components() == 1;
}

}  // namespace btg
