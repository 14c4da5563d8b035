#pragma once

#include "cxh/graph.hpp"

namespace cxh {

enum class ProductKind { Cartesian, Strong, Lexicographic };

const char* product_kind_name(ProductKind kind);

// Which factor a layer/projection refers to.
enum class FactorSide { G, H };

// A product graph over V(G) x V(H) with the row-major pair encoding
// (g,h) -> g*|V(H)| + h.  The factor orders and kind are kept so that layers,
// projections and fast paths can be asked of the product alone.
struct ProductGraph {
    Graph graph;
    int m = 0;  // |V(G)|
    int n = 0;  // |V(H)|
    ProductKind kind = ProductKind::Cartesian;

    int index(int g, int h) const {
        if (g < 0 || g >= m || h < 0 || h >= n)
            throw std::invalid_argument("ProductGraph::index: coordinate out of range");
        return g * n + h;
    }
    std::pair<int, int> coords(int p) const {
        if (p < 0 || p >= m * n)
            throw std::invalid_argument("ProductGraph::coords: vertex out of range");
        return {p / n, p % n};
    }
};

// Edge rules on pairs (g1,h1) ~ (g2,h2):
//   Cartesian:      (g1=g2 and h1~h2) or (g1~g2 and h1=h2)
//   Strong:         Cartesian edges plus (g1~g2 and h1~h2)
//   Lexicographic:  g1~g2, or (g1=g2 and h1~h2)
// Vertex labels are "(a,b)" built from factor labels (indices when absent).
ProductGraph product(const Graph& g, const Graph& h, ProductKind kind);

// layer(P, FactorSide::G, u) fixes the G-coordinate: {u} x V(H).
// layer(P, FactorSide::H, v) fixes the H-coordinate: V(G) x {v}.
VertexSet layer(const ProductGraph& p, FactorSide fixed, int index);

// Coordinate projection of a product vertex set onto one factor.
VertexSet projection(const ProductGraph& p, const VertexSet& s, FactorSide side);

// True iff s equals the product of its projections.
bool is_subproduct(const ProductGraph& p, const VertexSet& s);

}  // namespace cxh
