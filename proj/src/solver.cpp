#include "cxh/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>

namespace cxh {

namespace {

constexpr int kRepresentationCap = 64;
constexpr int kSubsetSearchDefaultCap = 22;

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

// Adjacency as 64-bit masks; the packed form every search below runs on.
struct MaskGraph {
    int n = 0;
    std::uint64_t full = 0;
    std::array<std::uint64_t, 64> adj{};
};

MaskGraph to_masks(const Graph& g) {
    MaskGraph m;
    m.n = g.order();
    m.full = m.n == 64 ? ~std::uint64_t(0) : bit(m.n) - 1;
    for (int v = 0; v < m.n; ++v)
        for (int u : g.neighbors(v)) m.adj[v] |= bit(u);
    return m;
}

// Budget bookkeeping shared by the phases of one solver call.  spend()
// returns false when the subset cap or the time limit is hit; the caller
// turns that into a budget_error with whatever bounds it has.
struct Gate {
    std::uint64_t cap = 0;
    std::uint64_t used = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool timed = false;
    unsigned tick = 0;

    explicit Gate(const SearchBudget& b) : cap(b.max_subsets) {
        if (b.time_limit_s > 0) {
            timed = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::microseconds(std::int64_t(b.time_limit_s * 1e6));
        }
    }
    bool spend() {
        ++used;
        if (cap && used > cap) return false;
        if (timed && (++tick & 0xFFFu) == 0 && std::chrono::steady_clock::now() > deadline)
            return false;
        return true;
    }
};

int effective_cap(const SearchBudget& b, int solver_default) {
    int cap = b.max_n > 0 ? b.max_n : solver_default;
    return std::min(cap, kRepresentationCap);
}

void check_order_cap(int n, const SearchBudget& b, int solver_default) {
    if (n > kRepresentationCap)
        throw budget_error("graph exceeds the 64-vertex representation cap");
    if (n > effective_cap(b, solver_default))
        throw budget_error("graph order " + std::to_string(n) +
                           " exceeds the search budget's vertex cap " +
                           std::to_string(effective_cap(b, solver_default)));
}

// ---- packed closure / convexity kernels ------------------------------------

struct Dsu64 {
    std::array<int, 64> parent;
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

std::uint64_t closure64(const MaskGraph& g, std::uint64_t seed, ConvexityKind kind) {
    std::uint64_t closed = seed;
    if (kind == ConvexityKind::P3) {
        for (;;) {
            std::uint64_t add = 0;
            std::uint64_t rest = g.full & ~closed;
            while (rest) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                if (std::popcount(g.adj[w] & closed) >= 2) add |= bit(w);
            }
            if (!add) return closed;
            closed |= add;
        }
    }

    Dsu64 dsu;
    std::array<int, 64> mark{};
    int stamp = 0;
    {
        std::uint64_t s = seed;
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            dsu.parent[v] = v;
        }
        s = seed;
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            std::uint64_t e = g.adj[v] & seed & (bit(v) - 1);
            while (e) {
                int u = std::countr_zero(e);
                e &= e - 1;
                dsu.unite(u, v);
            }
        }
    }
    for (;;) {
        std::uint64_t add = 0;
        std::uint64_t rest = g.full & ~closed;
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t nb = g.adj[w] & closed;
            if (std::popcount(nb) < 2) continue;
            ++stamp;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                int r = dsu.find(u);
                if (mark[r] == stamp) {
                    add |= bit(w);
                    break;
                }
                mark[r] = stamp;
            }
        }
        if (!add) return closed;
        closed |= add;
        std::uint64_t batch = add;
        while (batch) {
            int v = std::countr_zero(batch);
            batch &= batch - 1;
            dsu.parent[v] = v;
        }
        batch = add;
        while (batch) {
            int v = std::countr_zero(batch);
            batch &= batch - 1;
            std::uint64_t e = g.adj[v] & closed & ~bit(v);
            while (e) {
                int u = std::countr_zero(e);
                e &= e - 1;
                dsu.unite(u, v);
            }
        }
    }
}

// One-step convexity test: does S generate anything?
bool is_convex64(const MaskGraph& g, std::uint64_t s, ConvexityKind kind) {
    std::uint64_t rest = g.full & ~s;
    if (kind == ConvexityKind::P3) {
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(g.adj[w] & s) >= 2) return false;
        }
        return true;
    }
    Dsu64 dsu;
    std::uint64_t t = s;
    while (t) {
        int v = std::countr_zero(t);
        t &= t - 1;
        dsu.parent[v] = v;
    }
    t = s;
    while (t) {
        int v = std::countr_zero(t);
        t &= t - 1;
        std::uint64_t e = g.adj[v] & s & (bit(v) - 1);
        while (e) {
            int u = std::countr_zero(e);
            e &= e - 1;
            dsu.unite(u, v);
        }
    }
    std::array<int, 64> mark{};
    int stamp = 0;
    while (rest) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t nb = g.adj[w] & s;
        if (std::popcount(nb) < 2) continue;
        ++stamp;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            int r = dsu.find(u);
            if (mark[r] == stamp) return false;
            mark[r] = stamp;
        }
    }
    return true;
}

// ---- subset enumeration -----------------------------------------------------

// Enumerates the k-subsets of `positions` in increasing bit-mask order
// (Gosper's hack on the packed combination, embedded into the positions,
// which are ascending; embedding therefore preserves the order).
struct Combinations {
    std::vector<int> positions;
    int k = 0;
    std::uint64_t combo = 0;
    bool done = false;

    Combinations(std::uint64_t free_mask, int k_) : k(k_) {
        while (free_mask) {
            positions.push_back(std::countr_zero(free_mask));
            free_mask &= free_mask - 1;
        }
        int f = int(positions.size());
        if (k < 0 || k > f) {
            done = true;
        } else if (k == 0) {
            combo = 0;
        } else {
            combo = bit(k) - 1;
        }
    }

    bool exhausted() const { return done; }

    std::uint64_t embed() const {
        std::uint64_t s = 0, c = combo;
        while (c) {
            int i = std::countr_zero(c);
            c &= c - 1;
            s |= bit(positions[i]);
        }
        return s;
    }

    void advance() {
        int f = int(positions.size());
        if (k == 0) {
            done = true;
            return;
        }
        std::uint64_t x = combo;
        std::uint64_t c = x & (~x + 1);
        std::uint64_t r = x + c;
        std::uint64_t limit = f >= 64 ? 0 : bit(f);  // 0: no limit below 2^64
        if (r < x || (limit && r >= limit)) {
            done = true;
            return;
        }
        combo = (((r ^ x) >> 2) / c) | r;
        if (limit && combo >= limit) done = true;
    }
};

// ---- hull number ------------------------------------------------------------

struct CoreHull {
    int value = 0;
    std::uint64_t witness = 0;
};

// Exact minimum hull set of a connected (or small) graph given as masks.
// Throws budget_error when the gate runs out; `lower` then reports the level
// proved insufficient.
CoreHull hull_core(const Graph& g, const MaskGraph& m, ConvexityKind kind, Gate& gate) {
    std::uint64_t forced = 0;
    if (kind == ConvexityKind::Cycle)
        for (int v = 0; v < m.n; ++v)
            if (!lies_on_cycle(g, v)) forced |= bit(v);
    int base = std::popcount(forced);
    std::uint64_t free_mask = m.full & ~forced;

    for (int k = base; k <= m.n; ++k) {
        for (Combinations it(free_mask, k - base); !it.exhausted(); it.advance()) {
            if (!gate.spend())
                throw budget_error("hull search budget exhausted", k, m.n);
            std::uint64_t s = forced | it.embed();
            if (closure64(m, s, kind) == m.full) return {k, s};
        }
    }
    // k = n always succeeds (the closure of V is V), so this is unreachable.
    throw std::logic_error("hull_core: search space exhausted");
}

std::vector<int> sorted_members(const VertexSet& s) { return s.members(); }

}  // namespace

HullResult hull_number_exact(const Graph& g, ConvexityKind kind, const SearchBudget& budget) {
    int n = g.order();
    check_order_cap(n, budget, kSubsetSearchDefaultCap);
    HullResult res;
    res.method = "exact";
    res.witness = VertexSet(n);
    if (n == 0) return res;

    Gate gate(budget);
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        MaskGraph m = to_masks(g);
        CoreHull core = hull_core(g, m, kind, gate);
        res.value = core.value;
        res.witness = VertexSet::from_mask(n, core.witness);
        return res;
    }
    // Components are independent: closures never cross them, so minimum hull
    // sets are exactly unions of per-component minimum hull sets, and the
    // least global mask is the union of least per-component masks.
    for (const VertexSet& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        MaskGraph m = to_masks(sub);
        CoreHull core = hull_core(sub, m, kind, gate);
        res.value += core.value;
        std::vector<int> back = sorted_members(comp);
        std::uint64_t w = core.witness;
        while (w) {
            int i = std::countr_zero(w);
            w &= w - 1;
            res.witness.insert(back[i]);
        }
    }
    return res;
}

std::pair<int, int> cartesian_hull_bounds(int hn_g, int hn_h) {
    if (hn_g < 2 || hn_h < 2)
        throw std::invalid_argument("cartesian_hull_bounds: factor hull numbers must be >= 2");
    return {std::max({hn_g, hn_h, 3}), hn_g + hn_h - 1};
}

VertexSet cartesian_hull_witness(const ProductGraph& p, const VertexSet& s_g,
                                 const VertexSet& s_h) {
    if (p.kind != ProductKind::Cartesian)
        throw std::invalid_argument("cartesian_hull_witness: product is not Cartesian");
    if (s_g.universe() != p.m || s_h.universe() != p.n)
        throw std::invalid_argument("cartesian_hull_witness: factor set universe mismatch");
    if (s_g.empty() || s_h.empty())
        throw std::invalid_argument("cartesian_hull_witness: factor hull sets must be nonempty");
    int g1 = s_g.first();
    int hs = s_h.first();
    VertexSet out(p.m * p.n);
    s_h.for_each([&](int b) { out.insert(p.index(g1, b)); });
    s_g.for_each([&](int a) { out.insert(p.index(a, hs)); });
    return out;
}

namespace {

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

bool is_path(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

void check_fastpath_factors(const ProductGraph& p, const Graph& g, const Graph& h,
                            const char* op) {
    if (p.m != g.order() || p.n != h.order())
        throw std::invalid_argument(std::string(op) + ": factors do not match the product");
    if (g.order() < 2 || h.order() < 2)
        throw std::invalid_argument(std::string(op) + ": factors must be nontrivial");
    if (!is_connected(g) || !is_connected(h))
        throw std::invalid_argument(std::string(op) + ": factors must be connected");
}

}  // namespace

std::optional<HullResult> hull_fastpath(const ProductGraph& p, const Graph& g, const Graph& h) {
    check_fastpath_factors(p, g, h, "hull_fastpath");
    HullResult res;
    if (p.kind == ProductKind::Strong || p.kind == ProductKind::Lexicographic) {
        // Two adjacent vertices of one H-layer close the whole product.
        auto he = h.edges();
        auto [h1, h2] = he.front();  // least edge; connected nontrivial H has one
        res.value = 2;
        res.witness = VertexSet(p.m * p.n);
        res.witness.insert(p.index(0, h1));
        res.witness.insert(p.index(0, h2));
        res.method =
            p.kind == ProductKind::Strong ? "fastpath-strong" : "fastpath-lex";
        return res;
    }
    if (!is_tree(g) || !is_tree(h)) return std::nullopt;
    // Tree by tree: hull number m + n - 1, witnessed by a full line and
    // column (every vertex of a tree is forced, so the factor hull sets are
    // the whole vertex sets).
    res.value = g.order() + h.order() - 1;
    res.witness = cartesian_hull_witness(p, VertexSet::full(p.m), VertexSet::full(p.n));
    res.method = is_path(g) && is_path(h) ? "fastpath-grid" : "fastpath-tree-product";
    return res;
}

// ---- partition condition ----------------------------------------------------

bool partition_condition(const Graph& g, const SearchBudget& budget) {
    int n = g.order();
    check_order_cap(n, budget, kSubsetSearchDefaultCap);
    if (n == 0) return false;
    Gate gate(budget);
    MaskGraph m = to_masks(g);

    std::uint64_t forced = 0;
    for (int v = 0; v < n; ++v)
        if (!lies_on_cycle(g, v)) forced |= bit(v);
    int base = std::popcount(forced);
    std::uint64_t free_mask = m.full & ~forced;

    // Find the hull number, then keep enumerating that level: every minimum
    // hull set is inspected for a bipartition with intersecting hulls.
    int hn = -1;
    for (int k = base; k <= n && hn < 0; ++k) {
        for (Combinations it(free_mask, k - base); !it.exhausted(); it.advance()) {
            if (!gate.spend()) throw budget_error("partition search budget exhausted", k, n);
            if (closure64(m, forced | it.embed(), ConvexityKind::Cycle) == m.full) {
                hn = k;
                break;
            }
        }
    }
    if (hn < 0) throw std::logic_error("partition_condition: no hull set found");

    for (Combinations it(free_mask, hn - base); !it.exhausted(); it.advance()) {
        if (!gate.spend()) throw budget_error("partition search budget exhausted", hn, n);
        std::uint64_t s = forced | it.embed();
        if (closure64(m, s, ConvexityKind::Cycle) != m.full) continue;
        // Each bipartition once: the part containing the least member of s
        // plays s1.
        std::uint64_t low = s & (~s + 1);
        for (std::uint64_t s1 = (s - 1) & s; s1; s1 = (s1 - 1) & s) {
            if (!(s1 & low)) continue;
            if (!gate.spend()) throw budget_error("partition search budget exhausted", hn, n);
            std::uint64_t h1 = closure64(m, s1, ConvexityKind::Cycle);
            std::uint64_t h2 = closure64(m, s & ~s1, ConvexityKind::Cycle);
            if (h1 & h2) return true;
        }
    }
    return false;
}

// ---- convexity number -------------------------------------------------------

namespace {

struct CoreConvexity {
    int value = 0;
    std::uint64_t witness = 0;
};

// Largest proper convex set of a connected graph.  Scans subset sizes
// downward; the first convex set found at a level is the least mask there.
CoreConvexity convexity_core(const Graph& g, const MaskGraph& m, ConvexityKind kind,
                             Gate& gate) {
    int n = m.n;
    if (n == 1) return {0, 0};
    if (kind == ConvexityKind::Cycle) {
        // V - {v} is convex exactly when v lies on no cycle; the largest id
        // gives the least complement mask.
        for (int v = n - 1; v >= 0; --v)
            if (!lies_on_cycle(g, v)) return {n - 1, m.full & ~bit(v)};
    }
    for (int k = n - 1; k >= 0; --k) {
        for (Combinations it(m.full, k); !it.exhausted(); it.advance()) {
            if (!gate.spend())
                throw budget_error("convexity search budget exhausted", 0, k);
            std::uint64_t s = it.embed();
            if (is_convex64(m, s, kind)) return {k, s};
        }
    }
    return {0, 0};  // the empty set is convex; reached only for n == 0
}

}  // namespace

ConvexityResult convexity_number_exact(const Graph& g, ConvexityKind kind,
                                       const SearchBudget& budget) {
    int n = g.order();
    check_order_cap(n, budget, kSubsetSearchDefaultCap);
    if (n == 0)
        throw std::invalid_argument("convexity_number_exact: empty graph has no proper subset");
    Gate gate(budget);

    auto comps = connected_components(g);
    if (comps.size() == 1) {
        MaskGraph m = to_masks(g);
        CoreConvexity core = convexity_core(g, m, kind, gate);
        return {core.value, VertexSet::from_mask(n, core.witness), "exact"};
    }
    // Best proper convex set: all of V except one component, which is
    // replaced by its own best proper convex set.
    bool have = false;
    int best_value = -1;
    std::uint64_t best_witness = 0;
    for (const VertexSet& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        MaskGraph m = to_masks(sub);
        CoreConvexity core = convexity_core(sub, m, kind, gate);
        int value = n - comp.count() + core.value;
        std::uint64_t witness = VertexSet::full(n).mask64() & ~comp.mask64();
        std::vector<int> back = comp.members();
        std::uint64_t w = core.witness;
        while (w) {
            int i = std::countr_zero(w);
            w &= w - 1;
            witness |= bit(back[i]);
        }
        if (!have || value > best_value || (value == best_value && witness < best_witness)) {
            have = true;
            best_value = value;
            best_witness = witness;
        }
    }
    return {best_value, VertexSet::from_mask(n, best_witness), "exact"};
}

// ---- independence number ----------------------------------------------------

namespace {

struct MisSolver {
    const MaskGraph& g;
    Gate& gate;

    // Greedy clique cover of `cand`: each clique contributes at most one
    // vertex to an independent set, so the number of cliques bounds it.
    int cover_bound(std::uint64_t cand) const {
        int cliques = 0;
        std::uint64_t rest = cand;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            ++cliques;
            std::uint64_t grow = g.adj[v] & rest;
            while (grow) {
                int u = std::countr_zero(grow);
                rest &= ~bit(u);
                grow &= g.adj[u] & rest;
            }
        }
        return cliques;
    }

    int best = 0;
    void expand(std::uint64_t cand, int cur) {
        if (!gate.spend()) throw budget_error("independence search budget exhausted", best, g.n);
        if (!cand) {
            best = std::max(best, cur);
            return;
        }
        if (cur + cover_bound(cand) <= best) return;
        // Branch vertex: highest degree inside cand, least id on ties.
        int pick = -1, pd = -1;
        std::uint64_t t = cand;
        while (t) {
            int v = std::countr_zero(t);
            t &= t - 1;
            int d = std::popcount(g.adj[v] & cand);
            if (d > pd) {
                pd = d;
                pick = v;
            }
        }
        expand(cand & ~g.adj[pick] & ~bit(pick), cur + 1);
        expand(cand & ~bit(pick), cur);
    }

    int value(std::uint64_t cand) {
        best = 0;
        expand(cand, 0);
        return best;
    }
};

}  // namespace

IndependenceResult independence_number_exact(const Graph& g, const SearchBudget& budget) {
    int n = g.order();
    check_order_cap(n, budget, kRepresentationCap);
    Gate gate(budget);
    MaskGraph m = to_masks(g);
    MisSolver solver{m, gate};

    int alpha = solver.value(m.full);
    // Least-mask witness: walk ids downward, dropping a vertex whenever a
    // maximum independent set avoiding it (and respecting earlier decisions)
    // still exists.
    std::uint64_t chosen = 0, cand = m.full;
    int held = 0;
    for (int v = n - 1; v >= 0; --v) {
        if (!(cand & bit(v))) continue;
        if (held + solver.value(cand & ~bit(v)) >= alpha) {
            cand &= ~bit(v);
        } else {
            chosen |= bit(v);
            cand &= ~bit(v) & ~m.adj[v];
            ++held;
        }
    }
    return {alpha, VertexSet::from_mask(n, chosen), "exact"};
}

std::optional<ConvexityResult> convexity_fastpath(const ProductGraph& p, const Graph& g,
                                                  const Graph& h, const SearchBudget& budget) {
    check_fastpath_factors(p, g, h, "convexity_fastpath");
    if (p.kind == ProductKind::Cartesian) {
        ConvexityResult cg = convexity_number_exact(g, ConvexityKind::Cycle, budget);
        ConvexityResult ch = convexity_number_exact(h, ConvexityKind::Cycle, budget);
        std::int64_t left = std::int64_t(p.n) * cg.value;
        std::int64_t right = std::int64_t(p.m) * ch.value;
        ConvexityResult res;
        res.method = "fastpath-cartesian";
        res.value = int(std::max(left, right));
        res.witness = VertexSet(p.m * p.n);
        if (left >= right) {
            cg.witness.for_each([&](int a) {
                for (int b = 0; b < p.n; ++b) res.witness.insert(p.index(a, b));
            });
        } else {
            ch.witness.for_each([&](int b) {
                for (int a = 0; a < p.m; ++a) res.witness.insert(p.index(a, b));
            });
        }
        return res;
    }
    IndependenceResult mis = independence_number_exact(p.graph, budget);
    return ConvexityResult{mis.value, mis.witness, "fastpath-alpha"};
}

}  // namespace cxh
