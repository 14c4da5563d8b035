#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cxh {

// Raised for malformed textual graph input (edge lists, graph6).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Subset of {0, ..., n-1} backed by 64-bit words.  The universe size n is
// part of the value: operations on sets with different universes throw.
// Graphs beyond 64 vertices (reduction outputs) are supported; mask64()
// is the bridge to the solvers' packed representation and requires n <= 64.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(check_universe(n)), w_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet of(int n, const std::vector<int>& vs) {
        VertexSet s(n);
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet from_mask(int n, std::uint64_t mask);

    int universe() const { return n_; }

    bool contains(int v) const {
        check_member(v);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }
    VertexSet& insert(int v) {
        check_member(v);
        w_[v >> 6] |= std::uint64_t(1) << (v & 63);
        return *this;
    }
    VertexSet& erase(int v) {
        check_member(v);
        w_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        return *this;
    }

    int count() const;
    bool empty() const;
    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const;

    std::uint64_t mask64() const;
    std::vector<int> members() const;
    int first() const;  // least member, -1 when empty

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    bool operator==(const VertexSet& o) const = default;

    std::string to_string() const;  // "{0,1,2}"

private:
    static int check_universe(int n) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
        return n;
    }
    void check_member(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("VertexSet: vertex out of range");
    }
    void check_same_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Simple undirected graph: fixed vertex count, no loops or parallel edges.
// Neighbor lists are kept sorted.  Vertices may carry text labels; these are
// provenance strings (product coordinates, gadget roles), not identities.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
    }

    int order() const { return n_; }
    int size() const { return m_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return int(neighbors(v).size()); }
    std::vector<std::pair<int, int>> edges() const;  // each u < v, sorted

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_label(int v, std::string s);
    // Label of v when present, otherwise its index rendered as text.
    std::string display_name(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;  // empty vector = unlabeled graph
};

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);  // vacuously true for n <= 1

struct BipartitenessResult {
    bool bipartite = false;
    VertexSet side0, side1;      // two-coloring when bipartite
    std::vector<int> odd_cycle;  // closed odd walk witness otherwise (as a vertex cycle)
};
BipartitenessResult is_bipartite(const Graph& g);

// True iff v lies on some cycle of g, i.e. two distinct neighbors of v are
// connected in g - v.
bool lies_on_cycle(const Graph& g, int v);

// Subgraph induced by s; vertices are renumbered to 0..|s|-1 in increasing
// order of their original ids.  Labels carry over.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace cxh
