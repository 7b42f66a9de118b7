#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "btgraph/analysis.hpp"
#include "../common/oracles.hpp"

using namespace btg;

namespace {

IrrigationGraph graph_from_edges(std::uint32_t n,
                                 std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    IrrigationGraph s;
    s.n = n;
    s.c = 1;
    s.arc_offsets.assign(n + 1, 0);
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    s.edges = std::move(edges);
    return s;
}

IrrigationGraph realized_instance(const oracle::RandomInstance& inst) {
    const VisibilityGraph g = build_visibility(inst.points, inst.r);
    const PreferenceTable prefs = assign_preferences(g, inst.prefs_seed);
    return realize(g, prefs, inst.c);
}

}  // namespace

TEST_CASE("components on trivial graphs") {
    const auto one = components(graph_from_edges(1, {}));
    CHECK(one.count == 1);
    CHECK(one.smallest == 1);
    CHECK(one.is_connected);

    const auto five = components(graph_from_edges(5, {}));
    CHECK(five.count == 5);
    CHECK(five.smallest == 1);
    CHECK_FALSE(five.is_connected);
    CHECK(five.sizes == std::vector<std::uint64_t>{1, 1, 1, 1, 1});
}

TEST_CASE("component labels match the BFS oracle on random instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto inst = oracle::random_instance(seed + 300, 50);
        const IrrigationGraph s = realized_instance(inst);
        const auto summary = components(s);
        const auto labels = oracle::bfs_labels(oracle::edge_adjacency(s.n, s.edges));
        CHECK(summary.component_id == labels);
        std::uint64_t total = 0;
        for (auto size : summary.sizes) total += size;
        CHECK(total == s.n);
    }
}

TEST_CASE("isolated clique detection on fixed shapes") {
    // triangle component
    const auto triangle = graph_from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    const auto witnesses = find_isolated_cliques(triangle, 3);
    REQUIRE(witnesses.size() == 1);
    CHECK(witnesses[0].vertices == std::vector<std::uint32_t>{0, 1, 2});

    // path component is not complete
    const auto path = graph_from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(find_isolated_cliques(path, 3).empty());

    CHECK_THROWS_AS(find_isolated_cliques(path, 1), std::invalid_argument);
}

TEST_CASE("planted cluster is reported as an isolated clique") {
    const int c = 3;
    PointSet points;
    points.dim = 2;
    // c+1 = 4 points near the center, 6 points far away in the corners
    points.coords = {0.50, 0.50, 0.51, 0.50, 0.50, 0.51, 0.51, 0.51,
                     0.05, 0.05, 0.05, 0.95, 0.95, 0.05, 0.95, 0.95,
                     0.05, 0.50, 0.95, 0.50};
    const double r = 0.05;
    const VisibilityGraph g = build_visibility(points, r);
    for (std::uint32_t i = 0; i < 4; ++i) REQUIRE(g.degree(i) == 3);

    const PreferenceTable prefs = assign_preferences(g, 99);
    const IrrigationGraph s = realize(g, prefs, c);
    const auto witnesses = find_isolated_cliques(s, c + 1);
    REQUIRE(witnesses.size() == 1);
    CHECK(witnesses[0].vertices == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("isolated cliques match brute-force subset enumeration") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = oracle::random_instance(seed + 900, 18);
        const IrrigationGraph s = realized_instance(inst);
        for (int k = 2; k <= inst.c + 1; ++k) {
            const auto got = find_isolated_cliques(s, k);
            const auto expected = oracle::brute_isolated_cliques(s, k);
            REQUIRE(got.size() == expected.size());
            for (std::size_t w = 0; w < got.size(); ++w) CHECK(got[w].vertices == expected[w]);
        }
    }
}

TEST_CASE("a connected graph has no isolated clique below full size") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = oracle::random_instance(seed + 1200, 16);
        const IrrigationGraph s = realized_instance(inst);
        if (!components(s).is_connected || s.n < 3) continue;
        for (int k = 2; k < int(s.n); ++k) CHECK(find_isolated_cliques(s, k).empty());
    }
}

TEST_CASE("hop diameter on fixed shapes") {
    const auto edge = graph_from_edges(2, {{0, 1}});
    auto res = hop_diameter(edge);
    CHECK(res.connected);
    CHECK(res.exact);
    CHECK(res.lower == 1);
    CHECK(res.upper == 1);

    const auto path = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    res = hop_diameter(path);
    CHECK(res.lower == 4);
    CHECK(res.upper == 4);

    const auto broken = graph_from_edges(3, {{0, 1}});
    CHECK_FALSE(hop_diameter(broken).connected);
}

TEST_CASE("double-sweep bounds bracket the exact diameter") {
    int connected_seen = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto inst = oracle::random_instance(seed + 2000, 300);
        const IrrigationGraph s = realized_instance(inst);
        const std::int64_t exact = oracle::brute_diameter(s);
        if (exact < 0) {
            CHECK_FALSE(hop_diameter(s).connected);
            continue;
        }
        ++connected_seen;
        const HopDiameter viaExact = hop_diameter(s, 100000);
        CHECK(viaExact.exact);
        CHECK(std::int64_t(viaExact.lower) == exact);

        const HopDiameter bounds = hop_diameter(s, 0);  // force bounds mode
        CHECK_FALSE(bounds.exact);
        CHECK(std::int64_t(bounds.lower) <= exact);
        CHECK(std::int64_t(bounds.upper) >= exact);
    }
    CHECK(connected_seen >= 20);
}

TEST_CASE("hop diameter dominates the straight-line hop count") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 20 && seed < 200; ++seed) {
        const auto inst = oracle::random_instance(seed + 2500, 200);
        if (inst.points.size() < 2) continue;
        const IrrigationGraph s = realized_instance(inst);
        const HopDiameter res = hop_diameter(s, 100000);
        if (!res.connected) continue;
        ++checked;
        for (std::uint32_t a = 0; a < std::min<std::uint32_t>(s.n, 10); ++a)
            for (std::uint32_t b = a + 1; b < std::min<std::uint32_t>(s.n, 10); ++b) {
                const double dist = std::sqrt(
                    sq_dist(inst.points.point(a), inst.points.point(b), inst.points.dim));
                CHECK(double(res.lower) >= std::ceil(dist / inst.r) - 1e-9);
            }
    }
}

TEST_CASE("spanning ratio of a collinear relay is exactly 1") {
    PointSet points;
    points.dim = 2;
    const double r = 0.25;
    // endpoints nearly 2r apart with a midpoint relay
    points.coords = {0.26, 0.5, 0.5, 0.5, 0.74, 0.5};
    const auto s = graph_from_edges(3, {{0, 1}, {1, 2}});
    const double ratio = spanning_ratio(s, points, r, SpanningMode{});
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spanning ratio of an off-axis detour") {
    PointSet points;
    points.dim = 2;
    const double r = 0.2;
    // |uv| = 1.5r = 0.3, detour through w gives path length 0.36
    const double h = std::sqrt(0.18 * 0.18 - 0.15 * 0.15);
    points.coords = {0.30, 0.5, 0.60, 0.5, 0.45, 0.5 + h};
    const auto s = graph_from_edges(3, {{0, 2}, {2, 1}});
    const double ratio = spanning_ratio(s, points, r, SpanningMode{});
    CHECK(ratio == doctest::Approx(1.2).epsilon(1e-9));
}

TEST_CASE("spanning ratio errors and sentinels") {
    PointSet points;
    points.dim = 2;
    points.coords = {0.1, 0.1, 0.9, 0.9};
    const auto disconnected = graph_from_edges(2, {});
    CHECK_THROWS(spanning_ratio(disconnected, points, 0.2, SpanningMode{}));

    // all pairs within r: no eligible pair
    PointSet tight;
    tight.dim = 2;
    tight.coords = {0.5, 0.5, 0.51, 0.5, 0.5, 0.51};
    const auto s = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(spanning_ratio(s, tight, 0.3, SpanningMode{}) == 1.0);
}

TEST_CASE("spanning ratio is at least 1 and sampled mode is a lower bound") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 15 && seed < 300; ++seed) {
        const auto inst = oracle::random_instance(seed + 3000, 120);
        if (inst.points.size() < 3) continue;
        const IrrigationGraph s = realized_instance(inst);
        if (!components(s).is_connected) continue;
        ++checked;
        const double exact = spanning_ratio(s, inst.points, inst.r, SpanningMode{});
        SpanningMode sampled;
        sampled.kind = SpanningMode::Kind::sampled;
        sampled.k_sources = 5;
        sampled.seed = seed;
        const double lower = spanning_ratio(s, inst.points, inst.r, sampled);
        CHECK(exact >= 1.0);
        CHECK(lower >= 1.0);
        CHECK(lower <= exact + 1e-12);
    }
    CHECK(checked >= 10);
}
