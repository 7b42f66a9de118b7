#include "btgraph/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "btgraph/rng.hpp"
#include "btgraph/union_find.hpp"

namespace btg {

bool SubgraphAdjacency::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto a = adj(u);
    return std::binary_search(a.begin(), a.end(), v);
}

SubgraphAdjacency build_adjacency(const IrrigationGraph& s) {
    SubgraphAdjacency a;
    a.n = s.n;
    a.offsets.assign(s.n + 1, 0);
    for (const auto& [u, v] : s.edges) {
        ++a.offsets[u + 1];
        ++a.offsets[v + 1];
    }
    for (std::uint32_t i = 0; i < s.n; ++i) a.offsets[i + 1] += a.offsets[i];
    a.neighbors.resize(a.offsets.back());
    std::vector<std::uint64_t> cursor(a.offsets.begin(), a.offsets.end() - 1);
    for (const auto& [u, v] : s.edges) {
        a.neighbors[cursor[u]++] = v;
        a.neighbors[cursor[v]++] = u;
    }
    for (std::uint32_t i = 0; i < s.n; ++i)
        std::sort(a.neighbors.begin() + a.offsets[i], a.neighbors.begin() + a.offsets[i + 1]);
    return a;
}

ComponentSummary components(const IrrigationGraph& s) {
    ComponentSummary summary;
    const std::uint32_t n = s.n;
    summary.component_id.resize(n);
    if (n == 0) {
        summary.is_connected = true;
        return summary;
    }

    UnionFind uf(n);
    for (const auto& [u, v] : s.edges) uf.unite(u, v);

    // ascending scan: first vertex reaching a root is the smallest id
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label_of_root(n, unset);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t root = uf.find(i);
        if (label_of_root[root] == unset) label_of_root[root] = i;
        summary.component_id[i] = label_of_root[root];
    }
    for (std::uint32_t i = 0; i < n; ++i)
        if (uf.find(i) == i) summary.sizes.push_back(uf.component_size(i));
    std::sort(summary.sizes.begin(), summary.sizes.end());
    summary.count = summary.sizes.size();
    summary.smallest = summary.sizes.front();
    summary.is_connected = summary.count == 1;
    return summary;
}

std::vector<CliqueWitness> find_isolated_cliques(const IrrigationGraph& s, int k) {
    if (k < 2) throw std::invalid_argument("clique size k must be >= 2");

    const ComponentSummary summary = components(s);
    const SubgraphAdjacency adj = build_adjacency(s);

    std::vector<std::vector<std::uint32_t>> groups;
    {
        std::vector<std::uint32_t> order(s.n);
        for (std::uint32_t i = 0; i < s.n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return summary.component_id[a] != summary.component_id[b]
                       ? summary.component_id[a] < summary.component_id[b]
                       : a < b;
        });
        for (std::size_t i = 0; i < order.size();) {
            std::size_t j = i;
            while (j < order.size() &&
                   summary.component_id[order[j]] == summary.component_id[order[i]])
                ++j;
            if (j - i == std::size_t(k))
                groups.emplace_back(order.begin() + i, order.begin() + j);
            i = j;
        }
    }

    std::vector<CliqueWitness> witnesses;
    for (auto& group : groups) {
        bool complete = true;
        for (std::size_t a = 0; a < group.size() && complete; ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                if (!adj.has_edge(group[a], group[b])) {
                    complete = false;
                    break;
                }
        if (complete) witnesses.push_back(CliqueWitness{std::move(group)});
    }
    return witnesses;
}

namespace {

// BFS from src; fills dist (0xffffffff = unreached) and returns the
// farthest vertex (smallest id on ties) with its distance.
struct BfsResult {
    std::uint32_t farthest;
    std::uint32_t ecc;
    std::uint32_t reached;
};

BfsResult bfs(const SubgraphAdjacency& adj, std::uint32_t src, std::vector<std::uint32_t>& dist) {
    constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    dist.assign(adj.n, inf);
    std::vector<std::uint32_t> frontier{src}, next;
    dist[src] = 0;
    std::uint32_t reached = 1, level = 0;
    BfsResult res{src, 0, 1};
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::uint32_t u : frontier)
            for (std::uint32_t v : adj.adj(u))
                if (dist[v] == inf) {
                    dist[v] = level;
                    next.push_back(v);
                    ++reached;
                }
        if (!next.empty()) res = {*std::min_element(next.begin(), next.end()), level, 0};
        frontier.swap(next);
    }
    res.reached = reached;
    return res;
}

}  // namespace

HopDiameter hop_diameter(const IrrigationGraph& s, std::uint32_t exact_cutoff) {
    HopDiameter result;
    if (s.n == 0) {
        result.connected = true;
        result.exact = true;
        return result;
    }

    const SubgraphAdjacency adj = build_adjacency(s);
    std::vector<std::uint32_t> dist;
    const BfsResult probe = bfs(adj, 0, dist);
    if (probe.reached != s.n) return result;  // disconnected
    result.connected = true;

    if (s.n <= exact_cutoff) {
        result.exact = true;
        std::uint32_t diam = 0;
        for (std::uint32_t i = 0; i < s.n; ++i) diam = std::max(diam, bfs(adj, i, dist).ecc);
        result.lower = result.upper = diam;
        return result;
    }

    // iterated double sweep: lower bound from sweep eccentricities,
    // upper bound 2*ecc(midpoint of the best sweep path)
    std::vector<std::uint32_t> parent(s.n);
    auto bfs_with_parents = [&](std::uint32_t src) {
        constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
        dist.assign(adj.n, inf);
        parent[src] = src;
        dist[src] = 0;
        std::vector<std::uint32_t> frontier{src}, next;
        std::uint32_t level = 0;
        BfsResult res{src, 0, 0};
        while (!frontier.empty()) {
            ++level;
            next.clear();
            for (std::uint32_t u : frontier)
                for (std::uint32_t v : adj.adj(u))
                    if (dist[v] == inf) {
                        dist[v] = level;
                        parent[v] = u;
                        next.push_back(v);
                    }
            if (!next.empty()) res = {*std::min_element(next.begin(), next.end()), level, 0};
            frontier.swap(next);
        }
        return res;
    };

    std::uint32_t lower = probe.ecc;
    std::uint32_t start = probe.farthest;
    std::uint32_t best_center = 0;
    for (int sweep = 0; sweep < 2; ++sweep) {
        const BfsResult out = bfs_with_parents(start);
        lower = std::max(lower, out.ecc);
        // walk halfway back along the sweep path
        std::uint32_t mid = out.farthest;
        for (std::uint32_t step = 0; step < out.ecc / 2; ++step) mid = parent[mid];
        best_center = mid;
        start = out.farthest;
    }
    const std::uint32_t center_ecc = bfs(adj, best_center, dist).ecc;
    result.lower = std::max(lower, center_ecc);
    result.upper = std::max<std::uint64_t>(2ULL * center_ecc, result.lower);
    return result;
}

namespace {

void dijkstra(const SubgraphAdjacency& adj, const PointSet& points, std::uint32_t src,
              std::vector<double>& dist) {
    const double inf = std::numeric_limits<double>::infinity();
    dist.assign(adj.n, inf);
    using Item = std::pair<double, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[src] = 0.0;
    queue.emplace(0.0, src);
    while (!queue.empty()) {
        const auto [du, u] = queue.top();
        queue.pop();
        if (du > dist[u]) continue;
        const double* pu = points.point(u);
        for (std::uint32_t v : adj.adj(u)) {
            const double w = std::sqrt(sq_dist(pu, points.point(v), points.dim));
            if (du + w < dist[v]) {
                dist[v] = du + w;
                queue.emplace(dist[v], v);
            }
        }
    }
}

}  // namespace

double spanning_ratio(const IrrigationGraph& s, const PointSet& points, double r,
                      const SpanningMode& mode) {
    const std::uint32_t n = s.n;
    const SubgraphAdjacency adj = build_adjacency(s);
    {
        std::vector<std::uint32_t> dist;
        if (n > 0 && bfs(adj, 0, dist).reached != n)
            throw std::runtime_error("not-connected: spanning ratio requires a connected graph");
    }

    std::vector<std::uint32_t> sources;
    if (mode.kind == SpanningMode::Kind::exact) {
        sources.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) sources[i] = i;
    } else {
        if (mode.k_sources < 1) throw std::invalid_argument("k_sources must be >= 1");
        // partial Fisher-Yates over vertex ids
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
        Rng rng = make_stream(mode.seed, Stream::sources);
        const std::uint32_t k = std::min<std::uint32_t>(n, std::uint32_t(mode.k_sources));
        for (std::uint32_t i = 0; i < k; ++i)
            std::swap(pool[i], pool[i + rng.below(n - i)]);
        sources.assign(pool.begin(), pool.begin() + k);
    }

    const double r2 = r * r;
    double best = 1.0;
    bool any_eligible = false;
    std::vector<double> dist;
    for (std::uint32_t src : sources) {
        dijkstra(adj, points, src, dist);
        const double* ps = points.point(src);
        for (std::uint32_t j = 0; j < n; ++j) {
            if (j == src) continue;
            const double straight2 = sq_dist(ps, points.point(j), points.dim);
            if (straight2 <= r2) continue;
            any_eligible = true;
            const double ratio = dist[j] / std::sqrt(straight2);
            if (ratio > best) best = ratio;
        }
    }
    return any_eligible ? best : 1.0;
}

}  // namespace btg
