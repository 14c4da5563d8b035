#include "cxh/graph.hpp"

#include <algorithm>
#include <bit>

namespace cxh {

VertexSet VertexSet::from_mask(int n, std::uint64_t mask) {
    if (n > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
    VertexSet s(n);
    if (n < 64 && (mask >> n) != 0)
        throw std::invalid_argument("VertexSet::from_mask: mask has bits outside universe");
    if (n > 0) s.w_[0] = mask;
    return s;
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : w_)
        if (w) return false;
    return true;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    int spare = int(w_.size()) * 64 - n_;
    if (spare > 0 && !w_.empty()) r.w_.back() &= ~std::uint64_t(0) >> spare;
    return r;
}

std::uint64_t VertexSet::mask64() const {
    if (n_ > 64) throw std::invalid_argument("VertexSet::mask64: universe exceeds 64");
    return w_.empty() ? 0 : w_[0];
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool sep = false;
    for_each([&](int v) {
        if (sep) out += ",";
        out += std::to_string(v);
        sep = true;
    });
    return out + "}";
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
    if (adjacent(u, v)) throw std::invalid_argument("Graph::add_edge: duplicate edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
}

void Graph::set_label(int v, std::string s) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = std::move(s);
}

std::string Graph::display_name(int v) const {
    check_vertex(v);
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

BipartitenessResult is_bipartite(const Graph& g) {
    int n = g.order();
    BipartitenessResult res;
    res.side0 = VertexSet(n);
    res.side1 = VertexSet(n);
    std::vector<int> color(n, -1), parent(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = color[v] ^ 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    // Same-color edge in a BFS forest: the two root paths plus
                    // the edge close an odd cycle.
                    std::vector<int> pv, pu;
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    while (pv.size() > 1 && pu.size() > 1 &&
                           pv[pv.size() - 2] == pu[pu.size() - 2]) {
                        pv.pop_back();
                        pu.pop_back();
                    }
                    res.bipartite = false;
                    res.odd_cycle.assign(pv.begin(), pv.end());
                    for (std::size_t i = pu.size() - 1; i >= 1; --i)
                        res.odd_cycle.push_back(pu[i - 1]);
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    for (int v = 0; v < n; ++v)
        (color[v] == 1 ? res.side1 : res.side0).insert(v);
    return res;
}

bool lies_on_cycle(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("lies_on_cycle: vertex out of range");
    const auto& nb = g.neighbors(v);
    if (nb.size() < 2) return false;
    // Components of g - v, started from v's neighbors only.
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<int> stack;
    int cid = 0;
    for (int root : nb) {
        if (comp[root] != -1) return true;  // second neighbor reached earlier
        comp[root] = cid;
        stack.push_back(root);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (y == v || comp[y] != -1) continue;
                comp[y] = cid;
                stack.push_back(y);
            }
        }
        ++cid;
    }
    // All neighbors were reached as fresh roots: pairwise separated in g - v.
    return false;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: universe mismatch");
    std::vector<int> id(g.order(), -1);
    std::vector<int> verts = s.members();
    for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = int(i);
    Graph h(int(verts.size()));
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && id[v] != -1) h.add_edge(id[u], id[v]);
    if (g.has_labels())
        for (int u : verts) h.set_label(id[u], g.label(u));
    return h;
}

}  // namespace cxh
