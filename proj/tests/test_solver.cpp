#include <doctest.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cxh/convexity.hpp"
#include "cxh/families.hpp"
#include "cxh/graph.hpp"
#include "cxh/product.hpp"
#include "cxh/solver.hpp"

using namespace cxh;

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph random_graph(SplitMix64& rng, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(1, 2)) g.add_edge(u, v);
    return g;
}

// Reference solvers that walk every subset in (size, mask) order through the
// public closure interface, entirely independent of the search machinery.
struct BruteResult {
    int value = 0;
    std::uint64_t witness = 0;
};

BruteResult hull_brute(const Graph& g, ConvexityKind kind) {
    int n = g.order();
    for (int k = 0; k <= n; ++k)
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            if (is_hull_set(g, VertexSet::from_mask(n, mask), kind)) return {k, mask};
        }
    return {n, n ? (1ull << n) - 1 : 0};
}

BruteResult cnum_brute(const Graph& g, ConvexityKind kind) {
    int n = g.order();
    for (int k = n - 1; k >= 0; --k)
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            if (is_convex(g, VertexSet::from_mask(n, mask), kind)) return {k, mask};
        }
    return {0, 0};
}

BruteResult alpha_brute(const Graph& g) {
    int n = g.order();
    BruteResult best{-1, 0};
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
        if (ok && std::popcount(mask) > best.value)
            best = {std::popcount(mask), mask};
    }
    return best;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

}  // namespace

TEST_CASE("hull numbers of the basic families") {
    for (int n = 3; n <= 8; ++n) {
        CHECK(hull_number_exact(cycle_graph(n), ConvexityKind::Cycle).value == n - 1);
        CHECK(hull_number_exact(complete_graph(n), ConvexityKind::Cycle).value == 2);
    }
    // Trees have no cycles, so every vertex is forced.
    for (int n = 1; n <= 9; n += 2) {
        Graph t = random_tree(n, 5);
        HullResult r = hull_number_exact(t, ConvexityKind::Cycle);
        CHECK(r.value == n);
        CHECK(r.witness == VertexSet::full(n));
    }
    CHECK(hull_number_exact(path_graph(6), ConvexityKind::Cycle).value == 6);
    CHECK(hull_number_exact(star_graph(7), ConvexityKind::Cycle).value == 7);

    // P3 convexity on the same families.
    CHECK(hull_number_exact(complete_graph(4), ConvexityKind::P3).value == 2);
    CHECK(hull_number_exact(star_graph(5), ConvexityKind::P3).value == 4);  // all leaves
    CHECK(hull_number_exact(path_graph(5), ConvexityKind::P3).value == 3);  // alternate
    CHECK(hull_number_exact(cycle_graph(4), ConvexityKind::P3).value == 2);
    CHECK(hull_number_exact(Graph(1), ConvexityKind::Cycle).value == 1);
    CHECK(hull_number_exact(Graph(0), ConvexityKind::Cycle).value == 0);
}

TEST_CASE("the hull solver matches brute force on every 4-vertex graph") {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) pairs.push_back({u, v});
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        Graph g(4);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        for (ConvexityKind kind : {ConvexityKind::Cycle, ConvexityKind::P3}) {
            BruteResult want = hull_brute(g, kind);
            HullResult got = hull_number_exact(g, kind);
            CAPTURE(mask);
            CHECK(got.value == want.value);
            CHECK(got.witness.mask64() == want.witness);
            CHECK(is_hull_set(g, got.witness, kind));
        }
    }
}

TEST_CASE("the hull solver matches brute force on random graphs up to 7 vertices") {
    SplitMix64 rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + rng.below_int(3);
        Graph g = random_graph(rng, n);
        for (ConvexityKind kind : {ConvexityKind::Cycle, ConvexityKind::P3}) {
            BruteResult want = hull_brute(g, kind);
            HullResult got = hull_number_exact(g, kind);
            CAPTURE(trial);
            CHECK(got.value == want.value);
            CHECK(got.witness.mask64() == want.witness);
        }
    }
}

TEST_CASE("hull witnesses are forced onto vertices off all cycles") {
    // A triangle with a pendant: vertex 3 can never be generated.
    Graph g = from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    HullResult r = hull_number_exact(g, ConvexityKind::Cycle);
    CHECK(r.value == 3);
    CHECK(r.witness.contains(3));
    CHECK(r.witness == VertexSet::of(4, {0, 1, 3}));  // least mask optimum
}

TEST_CASE("disconnected hull numbers add up componentwise") {
    Graph g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    HullResult r = hull_number_exact(g, ConvexityKind::Cycle);
    BruteResult want = hull_brute(g, ConvexityKind::Cycle);
    CHECK(r.value == 4);
    CHECK(r.value == want.value);
    CHECK(r.witness.mask64() == want.witness);

    Graph with_isolated = from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(hull_number_exact(with_isolated, ConvexityKind::Cycle).value == 3);
}

TEST_CASE("convexity numbers of the basic families") {
    for (int n = 3; n <= 7; ++n) {
        CHECK(convexity_number_exact(cycle_graph(n), ConvexityKind::Cycle).value == n - 2);
        CHECK(convexity_number_exact(complete_graph(n), ConvexityKind::Cycle).value == 1);
    }
    for (int n = 2; n <= 7; ++n) {
        CHECK(convexity_number_exact(path_graph(n), ConvexityKind::Cycle).value == n - 1);
        CHECK(convexity_number_exact(random_tree(n, 9), ConvexityKind::Cycle).value == n - 1);
    }
    CHECK_THROWS_AS(convexity_number_exact(Graph(0), ConvexityKind::Cycle),
                    std::invalid_argument);
}

TEST_CASE("the convexity solver matches brute force on every 4-vertex graph") {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) pairs.push_back({u, v});
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        Graph g(4);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        for (ConvexityKind kind : {ConvexityKind::Cycle, ConvexityKind::P3}) {
            BruteResult want = cnum_brute(g, kind);
            ConvexityResult got = convexity_number_exact(g, kind);
            CAPTURE(mask);
            CHECK(got.value == want.value);
            CHECK(got.witness.mask64() == want.witness);
            CHECK(is_convex(g, got.witness, kind));
            CHECK(got.witness.count() == got.value);
        }
    }
}

TEST_CASE("disconnected convexity numbers keep all but one component") {
    Graph g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    ConvexityResult r = convexity_number_exact(g, ConvexityKind::Cycle);
    BruteResult want = cnum_brute(g, ConvexityKind::Cycle);
    CHECK(r.value == 4);
    CHECK(r.value == want.value);
    CHECK(r.witness.mask64() == want.witness);
}

TEST_CASE("independence numbers of the basic families") {
    CHECK(independence_number_exact(complete_graph(6)).value == 1);
    CHECK(independence_number_exact(cycle_graph(6)).value == 3);
    CHECK(independence_number_exact(cycle_graph(7)).value == 3);
    CHECK(independence_number_exact(path_graph(7)).value == 4);
    CHECK(independence_number_exact(star_graph(8)).value == 7);
    CHECK(independence_number_exact(petersen()).value == 4);
    CHECK(independence_number_exact(Graph(5)).value == 5);
}

TEST_CASE("the independence solver matches brute force on random graphs") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + rng.below_int(6);
        Graph g = random_graph(rng, n);
        BruteResult want = alpha_brute(g);
        IndependenceResult got = independence_number_exact(g);
        CAPTURE(trial);
        CHECK(got.value == want.value);
        CHECK(got.witness.mask64() == want.witness);
    }
}

TEST_CASE("search budgets stop oversize or overlong runs with bounds") {
    SearchBudget tiny_n;
    tiny_n.max_n = 4;
    CHECK_THROWS_AS(hull_number_exact(cycle_graph(7), ConvexityKind::Cycle, tiny_n),
                    budget_error);

    SearchBudget few_subsets;
    few_subsets.max_subsets = 3;
    bool threw = false;
    try {
        hull_number_exact(cycle_graph(7), ConvexityKind::Cycle, few_subsets);
    } catch (const budget_error& e) {
        threw = true;
        CHECK(e.lower_bound() >= 0);
        CHECK(e.upper_bound() == 7);
    }
    CHECK(threw);

    SearchBudget blink;
    blink.time_limit_s = 1e-6;
    CHECK_THROWS_AS(hull_number_exact(cycle_graph(18), ConvexityKind::Cycle, blink),
                    budget_error);

    // The representation cap cannot be lifted.
    SearchBudget wide;
    wide.max_n = 100;
    CHECK_THROWS_AS(independence_number_exact(Graph(70), wide), budget_error);
}

TEST_CASE("the strong and lexicographic hull fast path needs only one edge") {
    for (ProductKind kind : {ProductKind::Strong, ProductKind::Lexicographic}) {
        ProductGraph p = product(cycle_graph(5), path_graph(3), kind);
        auto r = hull_fastpath(p, cycle_graph(5), path_graph(3));
        REQUIRE(r.has_value());
        CHECK(r->value == 2);
        CHECK(r->witness.count() == 2);
        CHECK(is_hull_set(p.graph, r->witness, ConvexityKind::Cycle));
        CHECK(hull_number_exact(p.graph, ConvexityKind::Cycle).value == 2);
    }
}

TEST_CASE("the cartesian hull fast path covers exactly the tree products") {
    ProductGraph grid = product(path_graph(3), path_graph(4), ProductKind::Cartesian);
    auto r = hull_fastpath(grid, path_graph(3), path_graph(4));
    REQUIRE(r.has_value());
    CHECK(r->value == 6);
    CHECK(r->method == "fastpath-grid");
    CHECK(is_hull_set(grid.graph, r->witness, ConvexityKind::Cycle));
    CHECK(hull_number_exact(grid.graph, ConvexityKind::Cycle).value == 6);

    Graph t1 = random_tree(4, 2), t2 = star_graph(3);
    ProductGraph tp = product(t1, t2, ProductKind::Cartesian);
    auto rt = hull_fastpath(tp, t1, t2);
    REQUIRE(rt.has_value());
    CHECK(rt->value == 6);
    CHECK(rt->method == "fastpath-tree-product");
    CHECK(is_hull_set(tp.graph, rt->witness, ConvexityKind::Cycle));

    ProductGraph prism = product(cycle_graph(4), path_graph(2), ProductKind::Cartesian);
    CHECK(!hull_fastpath(prism, cycle_graph(4), path_graph(2)).has_value());

    ProductGraph trivial = product(path_graph(1), path_graph(3), ProductKind::Cartesian);
    CHECK_THROWS_AS(hull_fastpath(trivial, path_graph(1), path_graph(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hull_fastpath(grid, path_graph(4), path_graph(3)),
                    std::invalid_argument);
}

TEST_CASE("cartesian hull bounds and the L-shaped witness") {
    CHECK(cartesian_hull_bounds(2, 2) == std::pair<int, int>{3, 3});
    CHECK(cartesian_hull_bounds(5, 3) == std::pair<int, int>{5, 7});
    CHECK(cartesian_hull_bounds(2, 9) == std::pair<int, int>{9, 10});
    CHECK_THROWS_AS(cartesian_hull_bounds(1, 3), std::invalid_argument);

    // Factor hull sets glue into a product hull set along a line and column.
    Graph g = cycle_graph(4), h = cycle_graph(3);
    ProductGraph p = product(g, h, ProductKind::Cartesian);
    VertexSet sg = hull_number_exact(g, ConvexityKind::Cycle).witness;
    VertexSet sh = hull_number_exact(h, ConvexityKind::Cycle).witness;
    VertexSet w = cartesian_hull_witness(p, sg, sh);
    CHECK(w.count() == sg.count() + sh.count() - 1);
    CHECK(is_hull_set(p.graph, w, ConvexityKind::Cycle));
}

TEST_CASE("the partition condition fails on the small standards") {
    CHECK(!partition_condition(complete_graph(3)));
    CHECK(!partition_condition(cycle_graph(4)));
    CHECK(!partition_condition(cycle_graph(6)));
    CHECK(!partition_condition(path_graph(4)));

    // Two triangles sharing a vertex.
    Graph bowtie = from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK(!partition_condition(bowtie));

    // A four-cycle with a chord.
    Graph diamond = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK(!partition_condition(diamond));
}

TEST_CASE("the cartesian convexity fast path scales the better factor") {
    Graph g = cycle_graph(4), h = complete_graph(3);
    ProductGraph p = product(g, h, ProductKind::Cartesian);
    auto r = convexity_fastpath(p, g, h);
    REQUIRE(r.has_value());
    // max(|H| * C(G), |G| * C(H)) = max(3*2, 4*1) = 6.
    CHECK(r->value == 6);
    CHECK(r->method == "fastpath-cartesian");
    CHECK(is_convex(p.graph, r->witness, ConvexityKind::Cycle));
    CHECK(r->witness.count() == 6);
    CHECK(convexity_number_exact(p.graph, ConvexityKind::Cycle).value == 6);
}

TEST_CASE("the strong and lexicographic convexity fast path is the independence number") {
    for (ProductKind kind : {ProductKind::Strong, ProductKind::Lexicographic}) {
        Graph g = path_graph(3), h = cycle_graph(4);
        ProductGraph p = product(g, h, kind);
        auto r = convexity_fastpath(p, g, h, {});
        REQUIRE(r.has_value());
        int alpha = independence_number_exact(p.graph).value;
        CHECK(r->value == alpha);
        CHECK(r->method == "fastpath-alpha");
        CHECK(is_convex(p.graph, r->witness, ConvexityKind::Cycle));
        CHECK(convexity_number_exact(p.graph, ConvexityKind::Cycle).value == alpha);
    }
}
