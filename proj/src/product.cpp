#include "cxh/product.hpp"

namespace cxh {

const char* product_kind_name(ProductKind kind) {
    switch (kind) {
        case ProductKind::Cartesian: return "cartesian";
        case ProductKind::Strong: return "strong";
        case ProductKind::Lexicographic: return "lex";
    }
    return "?";
}

ProductGraph product(const Graph& g, const Graph& h, ProductKind kind) {
    ProductGraph p;
    p.m = g.order();
    p.n = h.order();
    p.kind = kind;
    p.graph = Graph(p.m * p.n);

    for (int a = 0; a < p.m; ++a)
        for (int b = 0; b < p.n; ++b)
            p.graph.set_label(a * p.n + b, "(" + g.display_name(a) + "," + h.display_name(b) + ")");

    // Within-layer copies of H: (a,b)~(a,b') for b~b'.  Present in all kinds.
    for (int a = 0; a < p.m; ++a)
        for (int b = 0; b < p.n; ++b)
            for (int b2 : h.neighbors(b))
                if (b < b2) p.graph.add_edge(a * p.n + b, a * p.n + b2);

    for (int a = 0; a < p.m; ++a)
        for (int a2 : g.neighbors(a)) {
            if (a2 < a) continue;
            for (int b = 0; b < p.n; ++b) {
                // Copies of G: (a,b)~(a2,b), common to all three kinds (for the
                // lexicographic product this is the b2 == b case of its rule).
                p.graph.add_edge(a * p.n + b, a2 * p.n + b);
                if (kind == ProductKind::Strong) {
                    for (int b2 : h.neighbors(b)) p.graph.add_edge(a * p.n + b, a2 * p.n + b2);
                } else if (kind == ProductKind::Lexicographic) {
                    for (int b2 = 0; b2 < p.n; ++b2)
                        if (b2 != b) p.graph.add_edge(a * p.n + b, a2 * p.n + b2);
                }
            }
        }
    return p;
}

VertexSet layer(const ProductGraph& p, FactorSide fixed, int index) {
    VertexSet s(p.m * p.n);
    if (fixed == FactorSide::G) {
        if (index < 0 || index >= p.m) throw std::invalid_argument("layer: G-vertex out of range");
        for (int b = 0; b < p.n; ++b) s.insert(p.index(index, b));
    } else {
        if (index < 0 || index >= p.n) throw std::invalid_argument("layer: H-vertex out of range");
        for (int a = 0; a < p.m; ++a) s.insert(p.index(a, index));
    }
    return s;
}

VertexSet projection(const ProductGraph& p, const VertexSet& s, FactorSide side) {
    if (s.universe() != p.m * p.n) throw std::invalid_argument("projection: universe mismatch");
    VertexSet out(side == FactorSide::G ? p.m : p.n);
    s.for_each([&](int v) {
        auto [a, b] = p.coords(v);
        out.insert(side == FactorSide::G ? a : b);
    });
    return out;
}

bool is_subproduct(const ProductGraph& p, const VertexSet& s) {
    VertexSet pg = projection(p, s, FactorSide::G);
    VertexSet ph = projection(p, s, FactorSide::H);
    if (std::int64_t(pg.count()) * ph.count() != s.count()) return false;
    bool ok = true;
    pg.for_each([&](int a) {
        ph.for_each([&](int b) {
            if (!s.contains(p.index(a, b))) ok = false;
        });
    });
    return ok;
}

}  // namespace cxh
