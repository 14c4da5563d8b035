#include "cxh/convexity.hpp"

#include <numeric>

namespace cxh {

namespace {

void check_universe(const Graph& g, const VertexSet& s, const char* op) {
    if (s.universe() != g.order())
        throw std::invalid_argument(std::string(op) + ": set universe does not match graph order");
}

// Merge-only disjoint sets over vertex ids.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
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

// Union the edges of g[current] incident to v into the DSU.  Calling this for
// every member of a set yields the components of the induced subgraph.
void absorb(Dsu& dsu, const Graph& g, const VertexSet& current, int v) {
    for (int u : g.neighbors(v))
        if (current.contains(u)) dsu.unite(v, u);
}

// Vertices outside `closed` generated in one step, given a DSU holding the
// components of g[closed].  `stamp`/`mark` detect two neighbors sharing a
// component without clearing an array per vertex.
VertexSet generated_step(const Graph& g, const VertexSet& closed, Dsu& dsu, ConvexityKind kind,
                         std::vector<int>& mark, int& stamp) {
    int n = g.order();
    VertexSet out(n);
    for (int w = 0; w < n; ++w) {
        if (closed.contains(w)) continue;
        if (kind == ConvexityKind::P3) {
            int hits = 0;
            for (int u : g.neighbors(w))
                if (closed.contains(u) && ++hits == 2) {
                    out.insert(w);
                    break;
                }
        } else {
            ++stamp;
            for (int u : g.neighbors(w)) {
                if (!closed.contains(u)) continue;
                int r = dsu.find(u);
                if (mark[r] == stamp) {
                    out.insert(w);
                    break;
                }
                mark[r] = stamp;
            }
        }
    }
    return out;
}

}  // namespace

const char* convexity_kind_name(ConvexityKind kind) {
    return kind == ConvexityKind::Cycle ? "cc" : "p3";
}

VertexSet interval(const Graph& g, const VertexSet& s, ConvexityKind kind) {
    check_universe(g, s, "interval");
    Dsu dsu(g.order());
    if (kind == ConvexityKind::Cycle) s.for_each([&](int v) { absorb(dsu, g, s, v); });
    std::vector<int> mark(g.order(), 0);
    int stamp = 0;
    return s | generated_step(g, s, dsu, kind, mark, stamp);
}

VertexSet cycle_interval_naive(const Graph& g, const VertexSet& s) {
    check_universe(g, s, "cycle_interval_naive");
    int n = g.order();
    VertexSet out = s;
    std::vector<char> on_path(n, 0);

    for (int w = 0; w < n; ++w) {
        if (s.contains(w)) continue;
        // DFS over simple paths from w inside g[S + w]; a cycle through w
        // exists iff some path of length >= 2 ends next to w.
        bool found = false;
        on_path[w] = 1;
        std::vector<std::pair<int, int>> stack;  // (vertex, depth)
        auto extend = [&](auto&& self, int v, int depth) -> void {
            if (found) return;
            for (int u : g.neighbors(v)) {
                if (found) return;
                if (u == w) {
                    if (depth >= 2) {
                        found = true;
                        return;
                    }
                    continue;
                }
                if (!s.contains(u) || on_path[u]) continue;
                on_path[u] = 1;
                self(self, u, depth + 1);
                on_path[u] = 0;
            }
        };
        extend(extend, w, 0);
        on_path[w] = 0;
        if (found) out.insert(w);
    }
    return out;
}

ClosureResult closure(const Graph& g, const VertexSet& s, ConvexityKind kind) {
    check_universe(g, s, "closure");
    ClosureResult res;
    res.closed = s;
    res.rounds.push_back(s);

    Dsu dsu(g.order());
    if (kind == ConvexityKind::Cycle) s.for_each([&](int v) { absorb(dsu, g, s, v); });
    std::vector<int> mark(g.order(), 0);
    int stamp = 0;

    for (;;) {
        VertexSet fresh = generated_step(g, res.closed, dsu, kind, mark, stamp);
        if (fresh.empty()) break;
        res.closed |= fresh;
        // New members become generators next round; record their induced
        // edges now that `closed` includes the whole batch.
        if (kind == ConvexityKind::Cycle)
            fresh.for_each([&](int v) { absorb(dsu, g, res.closed, v); });
        res.rounds.push_back(std::move(fresh));
    }
    return res;
}

bool is_convex(const Graph& g, const VertexSet& s, ConvexityKind kind) {
    return interval(g, s, kind) == s;
}

bool is_hull_set(const Graph& g, const VertexSet& s, ConvexityKind kind) {
    return closure(g, s, kind).closed == VertexSet::full(g.order());
}

}  // namespace cxh
