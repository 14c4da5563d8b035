#include "cxh/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "cxh/convexity.hpp"
#include "cxh/families.hpp"
#include "cxh/gadgets.hpp"
#include "cxh/io.hpp"
#include "cxh/product.hpp"

namespace cxh {
namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Thrown by CheckContext::fail after the counterexample has been captured.
struct check_failed {};

struct CheckContext {
    SplitMix64 rng;
    int max_order = 0;
    SearchBudget budget;
    int instances = 0;
    Counterexample failure;

    explicit CheckContext(std::uint64_t seed) : rng(seed) {}

    // The check's principal size knob: its default unless overridden.
    int cap(int dflt) const { return max_order > 0 ? max_order : dflt; }
    // Checks built on exhaustive isomorphism-free enumeration only go to 6.
    int cap_exhaustive(int dflt) const { return std::min(cap(dflt), 6); }

    // Instance sizes are controlled by the catalog ranges, so by default the
    // per-call solver budget is only the 64-vertex representation cap; an
    // explicit max_n or time limit from the caller is passed through.
    SearchBudget solver_budget() const {
        SearchBudget b = budget;
        if (b.max_n == 0) b.max_n = 64;
        return b;
    }

    void count() { ++instances; }

    [[noreturn]] void fail(std::string detail, const std::vector<Graph>& graphs = {},
                           const std::vector<VertexSet>& sets = {}) {
        failure.detail = std::move(detail);
        for (const Graph& g : graphs) failure.graphs.push_back(emit_edge_list(g));
        for (const VertexSet& s : sets) failure.sets.push_back(s.to_string());
        throw check_failed{};
    }
};

std::string num(long long v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// Instance generators.

// Connected graphs on exactly n labeled vertices, one representative per
// isomorphism class: the representative is the graph whose edge bit mask
// (pairs in lexicographic order) is minimal under vertex relabeling.
std::vector<Graph> build_connected_reps(int n) {
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1);
        return out;
    }
    std::vector<std::pair<int, int>> pairs;
    int pidx[6][6] = {};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pidx[i][j] = int(pairs.size());
            pairs.emplace_back(i, j);
        }
    int np = int(pairs.size());
    std::vector<std::array<int, 6>> perms;
    std::array<int, 6> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.begin() + n));

    for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
        std::array<std::uint32_t, 6> adj{};
        for (int e = 0; e < np; ++e)
            if (mask >> e & 1) {
                adj[pairs[e].first] |= 1u << pairs[e].second;
                adj[pairs[e].second] |= 1u << pairs[e].first;
            }
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= adj[v];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != (1u << n) - 1) continue;

        bool least = true;
        for (std::size_t pi = 1; pi < perms.size() && least; ++pi) {
            const auto& s = perms[pi];
            std::uint32_t relabeled = 0;
            for (int e = 0; e < np; ++e)
                if (mask >> e & 1) {
                    int a = s[pairs[e].first], b = s[pairs[e].second];
                    if (a > b) std::swap(a, b);
                    relabeled |= 1u << pidx[a][b];
                }
            if (relabeled < mask) least = false;
        }
        if (!least) continue;

        Graph g(n);
        for (int e = 0; e < np; ++e)
            if (mask >> e & 1) g.add_edge(pairs[e].first, pairs[e].second);
        out.push_back(std::move(g));
    }
    return out;
}

const std::vector<Graph>& connected_reps(int n) {
    static const std::array<std::vector<Graph>, 7> cache = [] {
        std::array<std::vector<Graph>, 7> c;
        for (int k = 1; k <= 6; ++k) c[k] = build_connected_reps(k);
        return c;
    }();
    if (n < 1 || n > 6) throw std::invalid_argument("connected_reps: order must be 1..6");
    return cache[n];
}

// All connected representatives with orders in [lo, hi].
std::vector<Graph> factor_pool(int lo, int hi) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n)
        for (const Graph& g : connected_reps(n)) out.push_back(g);
    return out;
}

struct NamedGraph {
    std::string name;
    Graph graph;
};

std::vector<NamedGraph> named_factors() {
    std::vector<NamedGraph> out;
    out.push_back({"P2", path_graph(2)});
    out.push_back({"P3", path_graph(3)});
    out.push_back({"P4", path_graph(4)});
    out.push_back({"C3", cycle_graph(3)});
    out.push_back({"C4", cycle_graph(4)});
    out.push_back({"K3", complete_graph(3)});
    out.push_back({"K4", complete_graph(4)});
    return out;
}

// C4 plus one chord: the second of the two hull-number-2 attachment factors.
Graph diamond_graph() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 2);
    return g;
}

Graph random_graph(SplitMix64& rng, int n, std::uint64_t num, std::uint64_t den) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(num, den)) g.add_edge(i, j);
    return g;
}

VertexSet random_subset(SplitMix64& rng, int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng.chance(1, 2)) s.insert(v);
    return s;
}

VertexSet random_subset_of(SplitMix64& rng, const VertexSet& pool) {
    VertexSet s(pool.universe());
    pool.for_each([&](int v) {
        if (rng.chance(1, 2)) s.insert(v);
    });
    return s;
}

// Connected components of the subgraph induced by s, as sets of g's vertices.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.order());
    s.for_each([&](int v) {
        if (seen.contains(v)) return;
        VertexSet comp(g.order());
        std::vector<int> stack{v};
        seen.insert(v);
        comp.insert(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x))
                if (s.contains(y) && !seen.contains(y)) {
                    seen.insert(y);
                    comp.insert(y);
                    stack.push_back(y);
                }
        }
        comps.push_back(std::move(comp));
    });
    return comps;
}

void assert_cycle(CheckContext& ctx, const Graph& g, const std::vector<int>& seq,
                  const std::string& what) {
    int k = int(seq.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (seq[i] == seq[j]) ctx.fail(what + ": repeated vertex " + num(seq[i]), {g});
    for (int i = 0; i < k; ++i) {
        int a = seq[i], b = seq[(i + 1) % k];
        if (!g.adjacent(a, b))
            ctx.fail(what + ": missing edge " + num(a) + "-" + num(b), {g});
    }
}

// ---------------------------------------------------------------------------
// Hull number checks.

void run_stronglex_hull(CheckContext& ctx, ProductKind pk) {
    int cap = ctx.cap(4);
    auto factors = named_factors();
    for (const NamedGraph& a : factors)
        for (const NamedGraph& b : factors) {
            if (a.graph.order() > cap || b.graph.order() > cap) continue;
            ctx.count();
            ProductGraph p = product(a.graph, b.graph, pk);
            std::string name = a.name + " x " + b.name + " (" + product_kind_name(pk) + ")";
            auto fast = hull_fastpath(p, a.graph, b.graph);
            if (!fast || fast->value != 2)
                ctx.fail(name + ": fast path did not report hull number 2", {p.graph});
            if (!is_hull_set(p.graph, fast->witness, ConvexityKind::Cycle))
                ctx.fail(name + ": fast-path witness does not close", {p.graph}, {fast->witness});
            HullResult exact = hull_number_exact(p.graph, ConvexityKind::Cycle, ctx.solver_budget());
            if (exact.value != 2)
                ctx.fail(name + ": exact hull number is " + num(exact.value) + ", expected 2",
                         {p.graph}, {exact.witness});
        }
}

void check_strong_hull(CheckContext& ctx) { run_stronglex_hull(ctx, ProductKind::Strong); }
void check_lex_hull(CheckContext& ctx) { run_stronglex_hull(ctx, ProductKind::Lexicographic); }

void check_tree_product_hull(CheckContext& ctx) {
    int total = ctx.cap(9);  // cap on m + n
    auto verify_pair = [&](const Graph& t1, const Graph& t2, const std::string& name) {
        ctx.count();
        int m = t1.order(), n = t2.order();
        int expected = m + n - 1;
        ProductGraph p = product(t1, t2, ProductKind::Cartesian);
        auto fast = hull_fastpath(p, t1, t2);
        if (!fast || fast->value != expected)
            ctx.fail(name + ": fast path did not report " + num(expected), {t1, t2});
        if (!is_hull_set(p.graph, fast->witness, ConvexityKind::Cycle))
            ctx.fail(name + ": fast-path witness does not close", {p.graph}, {fast->witness});
        HullResult exact = hull_number_exact(p.graph, ConvexityKind::Cycle, ctx.solver_budget());
        if (exact.value != expected)
            ctx.fail(name + ": exact hull number is " + num(exact.value) + ", expected " +
                         num(expected),
                     {t1, t2, p.graph}, {exact.witness});
    };
    for (int m = 2; m + 2 <= total; ++m)
        for (int n = 2; m + n <= total; ++n)
            verify_pair(path_graph(m), path_graph(n),
                        "P" + num(m) + " x P" + num(n) + " (cartesian)");
    for (int t = 0; t < 20; ++t) {
        int m = 2 + ctx.rng.below_int(total - 3);  // 2 .. total-2
        int n = 2 + ctx.rng.below_int(total - m - 1);
        Graph t1 = random_tree(m, ctx.rng.next());
        Graph t2 = random_tree(n, ctx.rng.next());
        verify_pair(t1, t2, "random trees " + num(m) + "+" + num(n));
    }
}

void check_cartesian_bounds(CheckContext& ctx) {
    auto pool = factor_pool(2, ctx.cap_exhaustive(4));
    SearchBudget b = ctx.solver_budget();
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            ctx.count();
            HullResult hg = hull_number_exact(g, ConvexityKind::Cycle, b);
            HullResult hh = hull_number_exact(h, ConvexityKind::Cycle, b);
            auto [lo, hi] = cartesian_hull_bounds(hg.value, hh.value);
            ProductGraph p = product(g, h, ProductKind::Cartesian);
            HullResult hp = hull_number_exact(p.graph, ConvexityKind::Cycle, b);
            if (hp.value < lo || hp.value > hi)
                ctx.fail("hull number " + num(hp.value) + " outside [" + num(lo) + ", " +
                             num(hi) + "]",
                         {g, h, p.graph}, {hp.witness});
            VertexSet lshape = cartesian_hull_witness(p, hg.witness, hh.witness);
            if (!is_hull_set(p.graph, lshape, ConvexityKind::Cycle))
                ctx.fail("L-shaped union of factor hull sets does not close", {g, h, p.graph},
                         {hg.witness, hh.witness, lshape});
        }
}

void check_clique_eq3(CheckContext& ctx) {
    int cap = ctx.cap(3);
    SearchBudget b = ctx.solver_budget();
    for (int m = 2; m <= cap; ++m)
        for (int n = 2; n <= cap; ++n) {
            ctx.count();
            ProductGraph p = product(complete_graph(m), complete_graph(n), ProductKind::Cartesian);
            HullResult r = hull_number_exact(p.graph, ConvexityKind::Cycle, b);
            if (r.value != 3)
                ctx.fail("hn(K" + num(m) + " x K" + num(n) + " cartesian) = " + num(r.value) +
                             ", expected 3",
                         {p.graph}, {r.witness});
        }
}

void check_partition_biconditional(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    std::vector<NamedGraph> hs;
    hs.push_back({"K3", complete_graph(3)});
    hs.push_back({"C4+chord", diamond_graph()});
    int cap = ctx.cap_exhaustive(6);
    int taken = 0;
    for (int n = 3; n <= cap; ++n)
        for (const Graph& g : connected_reps(n)) {
            if (g.size() < n) continue;  // acyclic: covered by the tree-product formula
            if (taken == 30) return;
            ++taken;
            int hng = hull_number_exact(g, ConvexityKind::Cycle, b).value;
            bool pc = partition_condition(g, b);
            for (const NamedGraph& h : hs) {
                ctx.count();
                ProductGraph p = product(g, h.graph, ProductKind::Cartesian);
                HullResult hp = hull_number_exact(p.graph, ConvexityKind::Cycle, b);
                if (hp.value != hng && hp.value != hng + 1)
                    ctx.fail("hn(G x " + h.name + ") = " + num(hp.value) +
                                 " outside {hn(G), hn(G)+1} with hn(G) = " + num(hng),
                             {g, p.graph}, {hp.witness});
                if ((hp.value == hng) != pc)
                    ctx.fail("hn(G x " + h.name + ") = " + num(hp.value) + ", hn(G) = " +
                                 num(hng) + ", but the split condition is " +
                                 (pc ? "true" : "false"),
                             {g, p.graph}, {hp.witness});
            }
        }
}

// ---------------------------------------------------------------------------
// Convex structure checks.

std::vector<std::pair<Graph, Graph>> small_factor_pairs(int cap, int max_product_order) {
    std::vector<std::pair<Graph, Graph>> out;
    auto pool = factor_pool(2, cap);
    for (const Graph& g : pool)
        for (const Graph& h : pool)
            if (g.order() * h.order() <= max_product_order) out.emplace_back(g, h);
    return out;
}

void check_subproduct_components(CheckContext& ctx) {
    for (const auto& [g, h] : small_factor_pairs(ctx.cap_exhaustive(4), 12)) {
        ctx.count();
        ProductGraph p = product(g, h, ProductKind::Cartesian);
        int order = p.graph.order();
        for (std::uint32_t mask = 0; mask < (1u << order); ++mask) {
            VertexSet s = VertexSet::from_mask(order, mask);
            if (!is_convex(p.graph, s, ConvexityKind::Cycle)) continue;
            for (const VertexSet& comp : components_within(p.graph, s))
                if (!is_subproduct(p, comp))
                    ctx.fail("component of a convex set is not a subproduct", {g, h, p.graph},
                             {s, comp});
        }
    }
}

void check_sxt_convex(CheckContext& ctx) {
    for (const auto& [g, h] : small_factor_pairs(ctx.cap_exhaustive(4), 12)) {
        ctx.count();
        ProductGraph p = product(g, h, ProductKind::Cartesian);
        std::vector<VertexSet> cg, chs;
        for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
            VertexSet s = VertexSet::from_mask(g.order(), mask);
            if (is_convex(g, s, ConvexityKind::Cycle)) cg.push_back(s);
        }
        for (std::uint32_t mask = 0; mask < (1u << h.order()); ++mask) {
            VertexSet t = VertexSet::from_mask(h.order(), mask);
            if (is_convex(h, t, ConvexityKind::Cycle)) chs.push_back(t);
        }
        for (const VertexSet& s : cg)
            for (const VertexSet& t : chs) {
                VertexSet st(p.graph.order());
                s.for_each([&](int a) { t.for_each([&](int b) { st.insert(p.index(a, b)); }); });
                if (!is_convex(p.graph, st, ConvexityKind::Cycle))
                    ctx.fail("product of convex factor sets is not convex", {g, h, p.graph},
                             {s, t, st});
            }
    }
}

void check_projections(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    auto pool = factor_pool(2, ctx.cap_exhaustive(4));
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            ctx.count();
            ProductGraph p = product(g, h, ProductKind::Cartesian);
            HullResult hp = hull_number_exact(p.graph, ConvexityKind::Cycle, b);
            VertexSet pg = projection(p, hp.witness, FactorSide::G);
            VertexSet ph = projection(p, hp.witness, FactorSide::H);
            if (!is_hull_set(g, pg, ConvexityKind::Cycle))
                ctx.fail("G-projection of a minimum hull set is not a hull set of G",
                         {g, h, p.graph}, {hp.witness, pg});
            if (!is_hull_set(h, ph, ConvexityKind::Cycle))
                ctx.fail("H-projection of a minimum hull set is not a hull set of H",
                         {g, h, p.graph}, {hp.witness, ph});
        }
}

void check_line_column(CheckContext& ctx) {
    for (const auto& [g, h] : small_factor_pairs(ctx.cap_exhaustive(4), 12)) {
        ProductGraph p = product(g, h, ProductKind::Cartesian);
        int order = p.graph.order();
        VertexSet full = VertexSet::full(order);
        for (int gi = 0; gi < p.m; ++gi)
            for (int hi = 0; hi < p.n; ++hi) {
                ctx.count();
                VertexSet s = layer(p, FactorSide::G, gi) | layer(p, FactorSide::H, hi);
                if (!is_hull_set(p.graph, s, ConvexityKind::Cycle))
                    ctx.fail("G-copy plus H-copy through (" + num(gi) + "," + num(hi) +
                                 ") does not close",
                             {g, h, p.graph}, {s});
            }
        for (int t = 0; t < 20; ++t) {
            VertexSet s = random_subset(ctx.rng, order);
            VertexSet closed = closure(p.graph, s, ConvexityKind::Cycle).closed;
            if (closed == full) continue;
            for (int gi = 0; gi < p.m; ++gi)
                for (int hi = 0; hi < p.n; ++hi) {
                    VertexSet lc = layer(p, FactorSide::G, gi) | layer(p, FactorSide::H, hi);
                    if (lc.is_subset_of(closed))
                        ctx.fail("proper hull contains a full G-copy plus H-copy",
                                 {g, h, p.graph}, {s, closed});
                }
        }
    }
}

// ---------------------------------------------------------------------------
// Convexity number checks.

void check_cartesian_cnum(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    auto pool = factor_pool(2, ctx.cap_exhaustive(4));
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            ctx.count();
            int cg = convexity_number_exact(g, ConvexityKind::Cycle, b).value;
            int ch = convexity_number_exact(h, ConvexityKind::Cycle, b).value;
            long long expected = std::max<long long>(1LL * h.order() * cg, 1LL * g.order() * ch);
            ProductGraph p = product(g, h, ProductKind::Cartesian);
            ConvexityResult exact = convexity_number_exact(p.graph, ConvexityKind::Cycle, b);
            if (exact.value != expected)
                ctx.fail("exact convexity number " + num(exact.value) + " != max(n*C(G), m*C(H)) = " +
                             num(expected),
                         {g, h, p.graph}, {exact.witness});
            auto fast = convexity_fastpath(p, g, h, b);
            if (!fast || fast->value != expected)
                ctx.fail("cartesian convexity fast path disagrees with " + num(expected), {g, h});
            if (!is_convex(p.graph, fast->witness, ConvexityKind::Cycle) ||
                fast->witness.count() != fast->value || fast->value >= p.graph.order())
                ctx.fail("fast-path witness is not a proper convex set of the stated size",
                         {g, h, p.graph}, {fast->witness});
        }
}

void check_cartesian_cnum_forms(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    int cap = ctx.cap(5);
    struct FormCase {
        Graph g, h;
        long long expected;
        std::string name;
    };
    std::vector<FormCase> cases;
    auto tree_pair = [&](int n) {
        std::vector<Graph> ts;
        ts.push_back(path_graph(n));
        ts.push_back(random_tree(n, ctx.rng.next()));
        return ts;
    };
    for (int m = 2; m <= cap; ++m)
        for (int n = 2; n <= cap; ++n) {
            long long mm = m, nn = n;
            cases.push_back({complete_graph(m), complete_graph(n), std::max(mm, nn),
                             "K" + num(m) + " x K" + num(n)});
            if (n >= 3)
                cases.push_back({complete_graph(m), cycle_graph(n), std::max(nn, mm * (nn - 2)),
                                 "K" + num(m) + " x C" + num(n)});
            for (const Graph& t : tree_pair(n))
                cases.push_back({complete_graph(m), t, std::max(nn, mm * (nn - 1)),
                                 "K" + num(m) + " x T" + num(n)});
            if (m >= 3 && n >= 3)
                cases.push_back({cycle_graph(m), cycle_graph(n),
                                 std::max(mm * nn - 2 * nn, mm * nn - 2 * mm),
                                 "C" + num(m) + " x C" + num(n)});
            if (m >= 3)
                for (const Graph& t : tree_pair(n))
                    cases.push_back({cycle_graph(m), t,
                                     std::max(mm * nn - 2 * nn, mm * nn - mm),
                                     "C" + num(m) + " x T" + num(n)});
            for (const Graph& t1 : tree_pair(m))
                for (const Graph& t2 : tree_pair(n))
                    cases.push_back({t1, t2, std::max(mm * nn - nn, mm * nn - mm),
                                     "T" + num(m) + " x T" + num(n)});
        }
    for (const FormCase& c : cases) {
        ctx.count();
        ProductGraph p = product(c.g, c.h, ProductKind::Cartesian);
        auto fast = convexity_fastpath(p, c.g, c.h, b);
        if (!fast || fast->value != c.expected)
            ctx.fail(c.name + " (cartesian): closed form " + num(c.expected) +
                         " != factor-derived value " +
                         (fast ? num(fast->value) : std::string("none")),
                     {c.g, c.h});
        if (p.graph.order() <= 16) {
            ConvexityResult exact = convexity_number_exact(p.graph, ConvexityKind::Cycle, b);
            if (exact.value != c.expected)
                ctx.fail(c.name + " (cartesian): closed form " + num(c.expected) +
                             " != exact value " + num(exact.value),
                         {c.g, c.h, p.graph}, {exact.witness});
        }
    }
}

void check_stronglex_cnum(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    auto pool = factor_pool(2, ctx.cap_exhaustive(4));
    for (ProductKind pk : {ProductKind::Strong, ProductKind::Lexicographic})
        for (const Graph& g : pool)
            for (const Graph& h : pool) {
                ctx.count();
                ProductGraph p = product(g, h, pk);
                int alpha = independence_number_exact(p.graph, b).value;
                ConvexityResult exact = convexity_number_exact(p.graph, ConvexityKind::Cycle, b);
                if (exact.value != alpha)
                    ctx.fail(std::string(product_kind_name(pk)) + " product: convexity number " +
                                 num(exact.value) + " != independence number " + num(alpha),
                             {g, h, p.graph}, {exact.witness});
                auto fast = convexity_fastpath(p, g, h, b);
                if (!fast || fast->value != alpha)
                    ctx.fail(std::string(product_kind_name(pk)) +
                                 " product: convexity fast path disagrees with alpha",
                             {g, h});
                // The hinge of the equality: every edge's endpoints close the
                // whole product, so no proper convex set contains an edge.
                for (auto [a, c] : p.graph.edges()) {
                    VertexSet s = VertexSet::of(p.graph.order(), {a, c});
                    if (!is_hull_set(p.graph, s, ConvexityKind::Cycle))
                        ctx.fail(std::string(product_kind_name(pk)) + " product: adjacent pair " +
                                     num(a) + "," + num(c) + " is not a hull set",
                                 {g, h, p.graph}, {s});
                }
            }
}

void check_stronglex_cnum_forms(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    int cap = ctx.cap(5);
    struct FormCase {
        Graph g, h;
        ProductKind pk;
        long long expected;
        std::string name;
    };
    std::vector<FormCase> cases;
    auto both = [&](const Graph& g, const Graph& h, long long expected, const std::string& name) {
        cases.push_back({g, h, ProductKind::Strong, expected, name + " (strong)"});
        cases.push_back({g, h, ProductKind::Lexicographic, expected, name + " (lexicographic)"});
    };
    for (int m = 2; m <= cap; ++m)
        for (int n = 2; n <= cap; ++n) {
            both(complete_graph(m), complete_graph(n), 1, "K" + num(m) + " x K" + num(n));
            if (n >= 3)
                both(complete_graph(m), cycle_graph(n), n / 2, "K" + num(m) + " x C" + num(n));
            both(complete_graph(m), path_graph(n), (n + 1) / 2, "K" + num(m) + " x P" + num(n));
            if (m >= 3 && n >= 3) {
                cases.push_back({cycle_graph(m), cycle_graph(n), ProductKind::Lexicographic,
                                 1LL * (m / 2) * (n / 2),
                                 "C" + num(m) + " x C" + num(n) + " (lexicographic)"});
                if (m % 2 == 0)
                    cases.push_back({cycle_graph(m), cycle_graph(n), ProductKind::Strong,
                                     1LL * (m / 2) * (n / 2),
                                     "C" + num(m) + " x C" + num(n) + " (strong, even)"});
                if (m % 2 == 1 && n % 2 == 1 && m >= n) {
                    long long j = m / 2, k2 = n / 2;
                    cases.push_back({cycle_graph(m), cycle_graph(n), ProductKind::Strong,
                                     j * k2 + k2 / 2,
                                     "C" + num(m) + " x C" + num(n) + " (strong, odd)"});
                }
            }
            if (m >= 3)
                both(cycle_graph(m), path_graph(n), 1LL * (m / 2) * ((n + 1) / 2),
                     "C" + num(m) + " x P" + num(n));
            both(path_graph(m), path_graph(n), 1LL * ((m + 1) / 2) * ((n + 1) / 2),
                 "P" + num(m) + " x P" + num(n));
        }
    for (const FormCase& c : cases) {
        ctx.count();
        ProductGraph p = product(c.g, c.h, c.pk);
        auto fast = convexity_fastpath(p, c.g, c.h, b);
        if (!fast || fast->value != c.expected)
            ctx.fail(c.name + ": closed form " + num(c.expected) + " != independence value " +
                         (fast ? num(fast->value) : std::string("none")),
                     {c.g, c.h, p.graph});
        if (p.graph.order() <= 16) {
            ConvexityResult exact = convexity_number_exact(p.graph, ConvexityKind::Cycle, b);
            if (exact.value != c.expected)
                ctx.fail(c.name + ": closed form " + num(c.expected) + " != exact value " +
                             num(exact.value),
                         {c.g, c.h, p.graph}, {exact.witness});
        }
    }
}

void check_lex_alpha(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    auto pool = factor_pool(2, ctx.cap_exhaustive(4));
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            ctx.count();
            ProductGraph p = product(g, h, ProductKind::Lexicographic);
            int ag = independence_number_exact(g, b).value;
            int ah = independence_number_exact(h, b).value;
            IndependenceResult ap = independence_number_exact(p.graph, b);
            if (ap.value != ag * ah)
                ctx.fail("alpha(G o H) = " + num(ap.value) + " != alpha(G) * alpha(H) = " +
                             num(1LL * ag * ah),
                         {g, h, p.graph}, {ap.witness});
        }
}

// ---------------------------------------------------------------------------
// Gadget and reduction checks.

void check_gadget_hw(CheckContext& ctx) {
    ctx.count();
    GadgetHw hw = build_Hw();
    const Graph& g = hw.graph;
    if (g.order() != 14 || g.size() != 18)
        ctx.fail("block has " + num(g.order()) + " vertices and " + num(g.size()) +
                     " edges, expected 14 and 18",
                 {g});
    if (!is_connected(g)) ctx.fail("block is not connected", {g});
    if (!is_bipartite(g).bipartite) ctx.fail("block is not bipartite", {g});
    auto y = [](int j) { return GadgetHw::y(j); };
    auto x = [](int j) { return GadgetHw::x(j); };
    assert_cycle(ctx, g, {y(0), y(1), y(2), y(3), y(4), y(5)}, "six-cycle");
    assert_cycle(ctx, g, {x(1), y(1), y(2), x(2)}, "first hanging four-cycle");
    assert_cycle(ctx, g, {x(3), y(2), y(3), x(4)}, "second hanging four-cycle");
    assert_cycle(ctx, g, {x(6), y(4), y(3), x(5)}, "third hanging four-cycle");
    assert_cycle(ctx, g, {x(8), y(5), y(4), x(7)}, "fourth hanging four-cycle");
    for (int j = 0; j <= 5; ++j)
        if (g.label(y(j)) != "y" + num(j)) ctx.fail("bad label on y" + num(j), {g});
    for (int j = 1; j <= 8; ++j)
        if (g.label(x(j)) != "x" + num(j)) ctx.fail("bad label on x" + num(j), {g});

    VertexSet cert = hull_set_Hw();
    if (cert.count() != 9 || !is_hull_set(g, cert, ConvexityKind::Cycle))
        ctx.fail("9-seed certificate does not close the block", {g}, {cert});

    // Exhaustive ground truth over all 2^14 seed sets.
    int best = g.order() + 1;
    for (std::uint32_t mask = 0; mask < (1u << 14); ++mask) {
        VertexSet s = VertexSet::from_mask(14, mask);
        if (s.count() >= best) continue;
        if (is_hull_set(g, s, ConvexityKind::Cycle)) best = s.count();
    }
    if (best != 9)
        ctx.fail("exhaustive scan found minimum hull set size " + num(best) + ", expected 9", {g});
    HullResult solver = hull_number_exact(g, ConvexityKind::Cycle, ctx.solver_budget());
    if (solver.value != 9)
        ctx.fail("solver reports hull number " + num(solver.value) + ", expected 9", {g},
                 {solver.witness});
}

void check_reduction_forward(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    int cap = ctx.cap_exhaustive(6);
    for (int n = 2; n <= cap; ++n)
        for (const Graph& g : connected_reps(n)) {
            if (!is_bipartite(g).bipartite) continue;
            ctx.count();
            HullResult base = hull_number_exact(g, ConvexityKind::P3, b);
            ReductionInstance inst = reduce_p3_to_cc(g, base.value);
            int pairs = int(inst.L.size());
            if (inst.k_prime != base.value + 45 * pairs)
                ctx.fail("k' = " + num(inst.k_prime) + " != k + 45 |L| = " +
                             num(base.value + 45 * pairs),
                         {g});
            if (inst.output.order() != n + 72 * pairs)
                ctx.fail("output order " + num(inst.output.order()) + " != n + 72 |L| = " +
                             num(n + 72 * pairs),
                         {g, inst.output});
            if (!is_bipartite(inst.output).bipartite)
                ctx.fail("reduction output is not bipartite", {g, inst.output});
            if (!is_connected(inst.output))
                ctx.fail("reduction output is not connected", {g, inst.output});
            int y0 = GadgetHw::y(0);
            for (int p = 0; p < pairs; ++p) {
                auto [a, c] = inst.L[p];
                int up = fuv_uprime(inst, p), vp = fuv_vprime(inst, p);
                assert_cycle(ctx, inst.output,
                             {a, up, fuv_w(inst, p, 2) + y0, fuv_w(inst, p, 1) + y0},
                             "pair " + num(p) + " u-side four-cycle");
                assert_cycle(ctx, inst.output,
                             {c, vp, fuv_w(inst, p, 4) + y0, fuv_w(inst, p, 5) + y0},
                             "pair " + num(p) + " v-side four-cycle");
                if (!inst.output.adjacent(up, fuv_w(inst, p, 3) + y0) ||
                    !inst.output.adjacent(fuv_w(inst, p, 3) + y0, vp))
                    ctx.fail("pair " + num(p) + " bridge path is missing", {g, inst.output});
            }
            VertexSet lifted = lift_hull_set(inst, base.witness);
            if (lifted.count() != inst.k_prime)
                ctx.fail("lifted certificate has size " + num(lifted.count()) + ", expected k' = " +
                             num(inst.k_prime),
                         {g, inst.output}, {base.witness, lifted});
            if (!is_hull_set(inst.output, lifted, ConvexityKind::Cycle))
                ctx.fail("lifted certificate does not close the output", {g, inst.output},
                         {base.witness, lifted});
            VertexSet back = project_back(inst, lifted);
            if (!(back == base.witness))
                ctx.fail("projecting the lifted certificate back does not return the original",
                         {g, inst.output}, {base.witness, lifted, back});
        }
}

Graph bowtie_block() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(3, 4);
    return g;
}

Graph double_square_block() {
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 0);
    return g;
}

// base plus a block, with base vertex u wired to the block's anchor (its
// vertex 0); mirrors the shape of the equal-threshold construction at a
// size where everything is exactly solvable.
Graph attach_block(const Graph& base, int u, const Graph& block) {
    Graph g(base.order() + block.order());
    for (auto [a, b] : base.edges()) g.add_edge(a, b);
    for (auto [a, b] : block.edges()) g.add_edge(base.order() + a, base.order() + b);
    g.add_edge(u, base.order());
    return g;
}

void check_cartesian_k2(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    Graph k2 = complete_graph(2);

    // Full-size instances: transport the certificate, then replay the
    // two-layer construction that pins the product's hull number from above.
    std::vector<Graph> bases;
    bases.push_back(complete_graph(2));
    bases.push_back(path_graph(3));
    bases.push_back(cycle_graph(4));
    for (const Graph& g : bases) {
        ctx.count();
        HullResult base = hull_number_exact(g, ConvexityKind::Cycle, b);
        ReductionInstance inst = build_cartesian_hardness(g, 0, base.value);
        int n = g.order();
        const Graph& out = inst.output;
        if (inst.k_prime != base.value + 18 || out.order() != n + 27)
            ctx.fail("unexpected instance shape: k' = " + num(inst.k_prime) + ", order " +
                         num(out.order()),
                     {g, out});
        VertexSet lifted = lift_hull_set(inst, base.witness);
        if (lifted.count() != inst.k_prime || !is_hull_set(out, lifted, ConvexityKind::Cycle))
            ctx.fail("lifted certificate does not close the augmented graph", {g, out},
                     {base.witness, lifted});

        // Split the certificate: one block's 9 seeds versus everything else.
        // Both halves generate the shared block vertex v, which is what lets
        // the certificate ride on two layers of the product at no extra cost.
        VertexSet s1(out.order()), s2(out.order());
        hull_set_identified_HH().for_each([&](int off) {
            (off <= GadgetHw::order - 1 ? s1 : s2).insert(n + off);
        });
        base.witness.for_each([&](int v) { s2.insert(v); });
        if (!((s1 | s2) == lifted))
            ctx.fail("certificate split does not partition the lifted set", {out},
                     {s1, s2, lifted});
        VertexSet h1 = closure(out, s1, ConvexityKind::Cycle).closed;
        VertexSet h2 = closure(out, s2, ConvexityKind::Cycle).closed;
        if (!(h1 & h2).contains(n))
            ctx.fail("split hulls do not meet at the shared block vertex", {out}, {s1, s2});

        // The two-layer set: the component of <S2> holding v rides on the
        // second K2 layer, the rest on the first.  Equal size, closes all.
        VertexSet b1(out.order());
        for (const VertexSet& comp : components_within(out, h2))
            if (comp.contains(n)) b1 = comp;
        ProductGraph pk2 = product(out, k2, ProductKind::Cartesian);
        VertexSet two_layer(pk2.graph.order());
        lifted.for_each([&](int v) { two_layer.insert(pk2.index(v, b1.contains(v) ? 1 : 0)); });
        if (two_layer.count() != inst.k_prime)
            ctx.fail("two-layer set size " + num(two_layer.count()) + " != k'", {out},
                     {two_layer});
        if (!is_hull_set(pk2.graph, two_layer, ConvexityKind::Cycle))
            ctx.fail("two-layer set does not close the product", {out, pk2.graph}, {two_layer});
    }

    // Miniature variants, small enough to solve both sides exactly: the
    // block-plus-base shape with toy blocks, checked against the full
    // biconditional that drives the equal-threshold argument.
    std::vector<Graph> blocks;
    blocks.push_back(bowtie_block());
    blocks.push_back(double_square_block());
    std::vector<Graph> minis;
    minis.push_back(complete_graph(2));
    minis.push_back(path_graph(3));
    for (const Graph& block : blocks)
        for (const Graph& mini : minis) {
            ctx.count();
            Graph gp = attach_block(mini, 0, block);
            int hn = hull_number_exact(gp, ConvexityKind::Cycle, b).value;
            bool pc = partition_condition(gp, b);
            ProductGraph p = product(gp, k2, ProductKind::Cartesian);
            HullResult hp = hull_number_exact(p.graph, ConvexityKind::Cycle, b);
            if (hp.value != hn && hp.value != hn + 1)
                ctx.fail("hn(G' x K2) = " + num(hp.value) + " outside {hn(G'), hn(G')+1} with " +
                             "hn(G') = " + num(hn),
                         {gp, p.graph}, {hp.witness});
            if ((hp.value == hn) != pc)
                ctx.fail("hn(G' x K2) = " + num(hp.value) + ", hn(G') = " + num(hn) +
                             ", but the split condition is " + (pc ? "true" : "false"),
                         {gp, p.graph}, {hp.witness});
        }
}

// ---------------------------------------------------------------------------
// Kernel property checks: randomized (graph, set) cases.

struct KernelCase {
    Graph g;
    VertexSet s;
};

KernelCase draw_case(CheckContext& ctx, int max_n) {
    int n = 3 + ctx.rng.below_int(max_n - 2);
    static constexpr std::pair<int, int> densities[] = {{1, 5}, {7, 20}, {1, 2}, {7, 10}};
    auto [num_p, den_p] = densities[ctx.rng.below_int(4)];
    Graph g = random_graph(ctx.rng, n, num_p, den_p);
    VertexSet s = random_subset(ctx.rng, n);
    return {std::move(g), std::move(s)};
}

void check_extensivity(CheckContext& ctx) {
    for (int t = 0; t < 500; ++t) {
        ctx.count();
        KernelCase c = draw_case(ctx, ctx.cap(10));
        for (ConvexityKind kind : {ConvexityKind::Cycle, ConvexityKind::P3}) {
            VertexSet iv = interval(c.g, c.s, kind);
            VertexSet cl = closure(c.g, c.s, kind).closed;
            if (!c.s.is_subset_of(iv) || !iv.is_subset_of(cl))
                ctx.fail(std::string("extensivity broken for ") + convexity_kind_name(kind),
                         {c.g}, {c.s, iv, cl});
        }
    }
}

void check_monotonicity(CheckContext& ctx) {
    for (int t = 0; t < 500; ++t) {
        ctx.count();
        KernelCase c = draw_case(ctx, ctx.cap(10));
        VertexSet sub = random_subset_of(ctx.rng, c.s);
        for (ConvexityKind kind : {ConvexityKind::Cycle, ConvexityKind::P3}) {
            if (!interval(c.g, sub, kind).is_subset_of(interval(c.g, c.s, kind)))
                ctx.fail(std::string("interval monotonicity broken for ") +
                             convexity_kind_name(kind),
                         {c.g}, {sub, c.s});
            if (!closure(c.g, sub, kind).closed.is_subset_of(closure(c.g, c.s, kind).closed))
                ctx.fail(std::string("closure monotonicity broken for ") +
                             convexity_kind_name(kind),
                         {c.g}, {sub, c.s});
        }
    }
}

void check_idempotence(CheckContext& ctx) {
    for (int t = 0; t < 500; ++t) {
        ctx.count();
        KernelCase c = draw_case(ctx, ctx.cap(10));
        for (ConvexityKind kind : {ConvexityKind::Cycle, ConvexityKind::P3}) {
            VertexSet cl = closure(c.g, c.s, kind).closed;
            if (!(closure(c.g, cl, kind).closed == cl) || !(interval(c.g, cl, kind) == cl))
                ctx.fail(std::string("closure is not a fixpoint for ") +
                             convexity_kind_name(kind),
                         {c.g}, {c.s, cl});
        }
    }
}

void check_intersection_closed(CheckContext& ctx) {
    for (int t = 0; t < 500; ++t) {
        ctx.count();
        KernelCase c = draw_case(ctx, ctx.cap(10));
        VertexSet other = random_subset(ctx.rng, c.g.order());
        for (ConvexityKind kind : {ConvexityKind::Cycle, ConvexityKind::P3}) {
            VertexSet a = closure(c.g, c.s, kind).closed;
            VertexSet b = closure(c.g, other, kind).closed;
            if (!is_convex(c.g, a & b, kind))
                ctx.fail(std::string("intersection of convex sets is not convex for ") +
                             convexity_kind_name(kind),
                         {c.g}, {a, b, a & b});
        }
    }
}

void check_domination(CheckContext& ctx) {
    SearchBudget b = ctx.solver_budget();
    for (int t = 0; t < 500; ++t) {
        ctx.count();
        KernelCase c = draw_case(ctx, ctx.cap(10));
        VertexSet icc = interval(c.g, c.s, ConvexityKind::Cycle);
        VertexSet ip3 = interval(c.g, c.s, ConvexityKind::P3);
        if (!icc.is_subset_of(ip3))
            ctx.fail("cycle interval is not contained in the two-neighbor interval", {c.g},
                     {c.s, icc, ip3});
        if (!closure(c.g, c.s, ConvexityKind::Cycle)
                 .closed.is_subset_of(closure(c.g, c.s, ConvexityKind::P3).closed))
            ctx.fail("cycle closure is not contained in the two-neighbor closure", {c.g}, {c.s});
        // Consequence spot-check on connected cases: every cycle hull set is
        // a two-neighbor hull set, so the two-neighbor hull number is never
        // larger.
        if (t % 25 == 0 && c.g.order() <= 8 && is_connected(c.g)) {
            int hcc = hull_number_exact(c.g, ConvexityKind::Cycle, b).value;
            int hp3 = hull_number_exact(c.g, ConvexityKind::P3, b).value;
            if (hp3 > hcc)
                ctx.fail("two-neighbor hull number " + num(hp3) + " exceeds cycle hull number " +
                             num(hcc),
                         {c.g});
        }
    }
}

void check_interval_oracle(CheckContext& ctx) {
    for (int t = 0; t < 500; ++t) {
        ctx.count();
        KernelCase c = draw_case(ctx, ctx.cap(10));
        // Keep the seed small: the oracle walks simple paths.
        VertexSet s(c.g.order());
        int want = ctx.rng.below_int(8);
        c.s.for_each([&](int v) {
            if (s.count() < want) s.insert(v);
        });
        VertexSet fast = interval(c.g, s, ConvexityKind::Cycle);
        VertexSet naive = cycle_interval_naive(c.g, s);
        if (!(fast == naive))
            ctx.fail("component-based cycle interval disagrees with the path-search oracle",
                     {c.g}, {s, fast, naive});
    }
}

// Deliberately false claim; stays out of the standard suite and exists to
// prove a failing check produces a counterexample and a nonzero exit.
void check_neg_control(CheckContext& ctx) {
    ctx.count();
    Graph k3 = complete_graph(3);
    ProductGraph p = product(k3, k3, ProductKind::Strong);
    HullResult r = hull_number_exact(p.graph, ConvexityKind::Cycle, ctx.solver_budget());
    if (r.value != 3)
        ctx.fail("negative control: claimed hn(K3 x K3 strong) = 3, solver found " +
                     num(r.value),
                 {p.graph}, {r.witness});
}

// ---------------------------------------------------------------------------
// Catalog and runners.

struct CheckDef {
    const char* id;
    bool in_all;
    void (*run)(CheckContext&);
};

const std::vector<CheckDef>& catalog() {
    static const std::vector<CheckDef> defs = {
        {"A-lex-alpha-multiplicative", true, check_lex_alpha},
        {"C4.2-cartesian-cnum-forms", true, check_cartesian_cnum_forms},
        {"C4.4-stronglex-cnum-forms", true, check_stronglex_cnum_forms},
        {"K-domination", true, check_domination},
        {"K-extensivity", true, check_extensivity},
        {"K-idempotence", true, check_idempotence},
        {"K-intersection-closed", true, check_intersection_closed},
        {"K-interval-oracle", true, check_interval_oracle},
        {"K-monotonicity", true, check_monotonicity},
        {"L-line-column", true, check_line_column},
        {"L-projections-hull", true, check_projections},
        {"L3.3-subproduct-components", true, check_subproduct_components},
        {"NEG-control", false, check_neg_control},
        {"T-SxT-convex", true, check_sxt_convex},
        {"T-tree-product-hull", true, check_tree_product_hull},
        {"T3.1-strong-hull", true, check_strong_hull},
        {"T3.2-lex-hull", true, check_lex_hull},
        {"T3.4-partition-biconditional", true, check_partition_biconditional},
        {"T3.5-gadget-Hw", true, check_gadget_hw},
        {"T3.5-reduction-forward", true, check_reduction_forward},
        {"T3.6-cartesian-k2", true, check_cartesian_k2},
        {"T4.1-cartesian-cnum", true, check_cartesian_cnum},
        {"T4.3-strong-lex-cnum", true, check_stronglex_cnum},
        {"Thull1-cartesian-bounds", true, check_cartesian_bounds},
        {"Thull1-clique-eq3", true, check_clique_eq3},
    };
    return defs;
}

const CheckDef* find_check(const std::string& id) {
    for (const CheckDef& def : catalog())
        if (id == def.id) return &def;
    return nullptr;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Passed: return "passed";
        case CheckStatus::Failed: return "failed";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("unreachable check status");
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const CheckDef& def : catalog())
        if (def.in_all) ids.push_back(def.id);
    return ids;
}

bool catalog_has(const std::string& id) { return find_check(id) != nullptr; }

TheoremReport run_check(const TheoremCheck& check) {
    const CheckDef* def = find_check(check.id);
    if (!def) throw std::invalid_argument("unknown check id: " + check.id);

    CheckContext ctx(mix_seed(check.seed, fnv1a64(check.id)));
    ctx.max_order = check.max_order;
    ctx.budget = check.budget;

    TheoremReport report;
    report.id = check.id;
    auto start = std::chrono::steady_clock::now();
    try {
        def->run(ctx);
        report.status = CheckStatus::Passed;
    } catch (const check_failed&) {
        report.status = CheckStatus::Failed;
        report.counterexample = std::move(ctx.failure);
    } catch (const budget_error& e) {
        report.status = CheckStatus::Inconclusive;
        report.note = e.what();
    }
    report.wallclock = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.passed = report.status == CheckStatus::Passed;
    report.instances_run = ctx.instances;
    if (ctx.instances == 0 && report.status == CheckStatus::Passed)
        throw std::invalid_argument("check '" + check.id +
                                    "' generated no instances at this max-order");
    return report;
}

std::vector<TheoremReport> run_suite(const std::vector<std::string>& ids,
                                     const SuiteConfig& config) {
    std::vector<std::string> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const std::string& id : sorted)
        if (!catalog_has(id)) throw std::invalid_argument("unknown check id: " + id);

    std::vector<TheoremReport> reports(sorted.size());
    auto make_check = [&](const std::string& id) {
        TheoremCheck c;
        c.id = id;
        c.seed = config.seed;
        c.max_order = config.max_order;
        c.budget = config.budget;
        return c;
    };

    int workers = std::min<int>(std::max(1, config.parallelism), int(sorted.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < sorted.size(); ++i) reports[i] = run_check(make_check(sorted[i]));
        return reports;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= sorted.size()) return;
            try {
                reports[i] = run_check(make_check(sorted[i]));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return reports;
}

std::string reports_to_json(const std::vector<TheoremReport>& reports) {
    nlohmann::ordered_json out;
    out["reports"] = nlohmann::ordered_json::array();
    for (const TheoremReport& r : reports) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["status"] = check_status_name(r.status);
        j["passed"] = r.passed;
        j["instances_run"] = r.instances_run;
        j["wallclock"] = r.wallclock;
        j["note"] = r.note;
        if (r.counterexample) {
            nlohmann::ordered_json c;
            c["detail"] = r.counterexample->detail;
            c["graphs"] = r.counterexample->graphs;
            c["sets"] = r.counterexample->sets;
            j["counterexample"] = c;
        }
        out["reports"].push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

std::vector<TheoremReport> reports_from_json(const std::string& text) {
    nlohmann::json root = nlohmann::json::parse(text);
    if (!root.is_object() || !root.contains("reports") || !root["reports"].is_array())
        throw std::invalid_argument("report document must hold a \"reports\" array");
    std::vector<TheoremReport> out;
    for (const auto& j : root["reports"]) {
        TheoremReport r;
        r.id = j.at("id").get<std::string>();
        std::string status = j.at("status").get<std::string>();
        if (status == "passed")
            r.status = CheckStatus::Passed;
        else if (status == "failed")
            r.status = CheckStatus::Failed;
        else if (status == "inconclusive")
            r.status = CheckStatus::Inconclusive;
        else
            throw std::invalid_argument("unknown report status: " + status);
        r.passed = j.at("passed").get<bool>();
        r.instances_run = j.at("instances_run").get<int>();
        r.wallclock = j.at("wallclock").get<double>();
        r.note = j.at("note").get<std::string>();
        if (j.contains("counterexample")) {
            Counterexample c;
            c.detail = j["counterexample"].at("detail").get<std::string>();
            c.graphs = j["counterexample"].at("graphs").get<std::vector<std::string>>();
            c.sets = j["counterexample"].at("sets").get<std::vector<std::string>>();
            r.counterexample = std::move(c);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace cxh
