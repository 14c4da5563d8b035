#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cxh/graph.hpp"
#include "cxh/product.hpp"

namespace cxh {

// Rigid 14-vertex block used by both hardness constructions.  Vertices:
// y0..y5 at ids 0..5 forming a 6-cycle, x1..x8 at ids 6..13.  Four more
// 4-cycles hang off consecutive y-pairs:
//
//   x1,y1,y2,x2   x3,y2,y3,x4   x6,y4,y3,x5   x8,y5,y4,x7
//
// 18 edges total, bipartite.  Its whole point: the block needs 9 seeds on
// its own (every 4-cycle needs one of its x-pair plus enough of the
// y-cycle) and y0 is then generated for free, so attaching things to y0
// adds closure reach without adding seed budget.  When y0 arrives from
// outside instead, 8 seeds suffice; the identified-block accounting below
// leans on that asymmetry.
struct GadgetHw {
    Graph graph;

    static constexpr int y(int j) { return j; }       // 0 <= j <= 5
    static constexpr int x(int j) { return 5 + j; }   // 1 <= j <= 8
    static constexpr int order = 14;
};

GadgetHw build_Hw();

// The canonical 9-seed certificate {y1..y5, x1, x3, x5, x7}; its closure
// under cycle convexity is all of build_Hw().
VertexSet hull_set_Hw();

// 74-vertex assembly dropped onto a non-adjacent pair u, v: the four
// vertices u, u', v, v' plus five GadgetHw copies w1..w5, wired so that
//
//   u, u', y0(w2), y0(w1)   and   v, v', y0(w4), y0(w5)   are 4-cycles
//   u', y0(w3), v'                                        is a path
//
// Once u and v are both in a hull, the two 4-cycles yield u' and v', and
// any common neighbor z of u and v then lies on the 6-cycle
// u, u', y0(w3), v', v, z.  That is the whole mechanism: it converts
// "two neighbors of z in the hull" into an actual cycle through z.
struct GadgetFuv {
    Graph graph;
    int u = 0, uprime = 1, v = 2, vprime = 3;

    // Base id of copy wi (1 <= i <= 5); roles are GadgetHw offsets from it.
    static constexpr int w(int i) { return 4 + 14 * (i - 1); }
    static constexpr int order = 74;
};

GadgetFuv build_Fuv();

// Non-adjacent pairs with a common neighbor, in (min,max) lexicographic
// order.  These are exactly the pairs that can generate a third vertex in
// the two-neighbor convexity, hence the pairs the reduction must cover.
std::vector<std::pair<int, int>> nonedge_set(const Graph& g);

enum class ReductionKind { P3ToCycle, CartesianK2 };

struct VertexOrigin {
    bool from_base = false;  // base-graph vertex vs. constructed vertex
    std::string label;       // provenance string, e.g. "w3^{(0,2)}:y0"
};

struct ReductionInstance {
    ReductionKind kind = ReductionKind::P3ToCycle;
    Graph base;
    Graph output;
    int k = 0;
    int k_prime = 0;
    std::vector<std::pair<int, int>> L;       // covered non-edge pairs (empty for CartesianK2)
    std::vector<VertexOrigin> provenance;     // one entry per output vertex
    std::optional<ProductGraph> product;      // CartesianK2 records output x K2
    int attach_vertex = -1;                   // CartesianK2: the base vertex wired to the block
};

// Two-neighbor hull instance (G, k) to cycle-convexity instance (G', k').
// G' keeps G's vertices at their ids and appends one GadgetFuv per pair in
// nonedge_set(G), with the gadget's u, v identified with the base pair
// (72 fresh vertices per pair).  k' = k + 45 |L|.  Requires bipartite G;
// the output is bipartite again.
ReductionInstance reduce_p3_to_cc(const Graph& g, int k);

// Output-graph ids of the block appended for pair index p of a P3ToCycle
// instance: the pair's u' and v', and the base id of block copy wi
// (1 <= i <= 5; roles sit at GadgetHw offsets from it).
int fuv_uprime(const ReductionInstance& instance, int p);
int fuv_vprime(const ReductionInstance& instance, int p);
int fuv_w(const ReductionInstance& instance, int p, int i);

// Two GadgetHw blocks sharing their y0, which becomes a cut-vertex v at
// id 0.  27 vertices; copy w1 occupies ids 1..13 (y1..y5, x1..x8), copy w2
// ids 14..26.
Graph build_identified_HH();

// The 18-seed certificate (both blocks' 9-seed sets); closes all 27 vertices.
VertexSet hull_set_identified_HH();

// Cycle-convexity instance (G, k) to an equal-threshold instance on a
// Cartesian product: G' = G plus build_identified_HH() plus the edge from
// base vertex u to the shared block vertex v (at id |V(G)|), k' = k + 18.
// The instance records G' x K2.  Accounting: the block raises the hull
// number by exactly 17 (one copy pays its full 9, the other reuses the
// shared vertex and pays 8), and no minimum hull set of G' splits into
// halves with intersecting hulls, so the K2 direction costs one more seed:
// hn(G' x K2) = hn(G') + 1 = hn(G) + 18.
ReductionInstance build_cartesian_hardness(const Graph& g, int u, int k);

// Certificate transport along a reduction.  For P3ToCycle: seeds of the
// base plus all five 9-seed block certificates per covered pair; for
// CartesianK2: seeds of the base plus the 18-seed block certificate.
// Requires s to be a hull set of the base in the source convexity (two-
// neighbor for P3ToCycle, cycle for CartesianK2); the returned set is
// checked to close the output under cycle convexity.
VertexSet lift_hull_set(const ReductionInstance& instance, const VertexSet& s);

// Reverse transport: members of a cycle-convexity hull set of the output
// are mapped to base vertices.  Base members map to themselves, a pair's
// u'/v' map to the pair's u/v, block-internal members are dropped.
// Requires s_cc to close the output; whether the result is a hull set of
// the base is the caller's question, not a guarantee.
VertexSet project_back(const ReductionInstance& instance, const VertexSet& s_cc);

// JSON envelope for a reduction instance: {edge_list, labels, k_prime, L,
// provenance} plus product_edge_list for CartesianK2 instances.
std::string reduction_to_json(const ReductionInstance& instance);

}  // namespace cxh
