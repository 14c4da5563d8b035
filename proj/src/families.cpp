#include "cxh/families.hpp"

#include <algorithm>

namespace cxh {

namespace {

void check_order(int n, int min, const char* what) {
    if (n < min)
        throw std::invalid_argument(std::string(what) + ": order must be at least " +
                                    std::to_string(min));
}

}  // namespace

Graph path_graph(int n) {
    check_order(n, 1, "path_graph");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    check_order(n, 3, "cycle_graph");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    check_order(n, 1, "complete_graph");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int n) {
    check_order(n, 1, "star_graph");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    check_order(n, 1, "random_tree");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    SplitMix64 rng(mix_seed(seed, 0x7265652dull /* stream tag */));
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = rng.below_int(n);

    // Standard decode: repeatedly join the smallest leaf to the next code
    // entry.  degree[v] = 1 + multiplicity of v in the code.
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : pruefer) {
        g.add_edge(std::min(leaf, x), std::max(leaf, x));
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    // Two leaves remain; one of them is n-1.
    g.add_edge(leaf, n - 1);
    return g;
}

Graph grid_graph(int rows, int cols) {
    check_order(rows, 1, "grid_graph");
    check_order(cols, 1, "grid_graph");
    Graph g(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v = i * cols + j;
            if (j + 1 < cols) g.add_edge(v, v + 1);
            if (i + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return path_graph(spec.n);
        case Family::Cycle: return cycle_graph(spec.n);
        case Family::Complete: return complete_graph(spec.n);
        case Family::Star: return star_graph(spec.n);
        case Family::Tree: return random_tree(spec.n, spec.seed);
        case Family::Grid: return grid_graph(spec.rows, spec.cols);
    }
    throw std::invalid_argument("generate: unknown family");
}

}  // namespace cxh
