#pragma once

#include "cxh/graph.hpp"

namespace cxh {

// The two interval operators.
//
// Cycle:  w is generated by S when the subgraph induced by S + w has a cycle
//         through w; operationally, when two distinct neighbors of w lie in
//         the same connected component of g[S].
// P3:     w is generated when it has at least two neighbors in S.
enum class ConvexityKind { Cycle, P3 };

const char* convexity_kind_name(ConvexityKind kind);  // "cc" / "p3"

// One application of the interval operator: S plus everything S generates.
VertexSet interval(const Graph& g, const VertexSet& s, ConvexityKind kind);

// Reference implementation of the cycle interval straight from the
// definition: for each w outside S, search g[S + w] for a simple cycle
// through w by DFS over simple paths.  Exponential; used as the oracle the
// component-based interval is checked against.
VertexSet cycle_interval_naive(const Graph& g, const VertexSet& s);

// Closure = least fixpoint of the interval operator, with the generation
// trace.  rounds[0] is the seed; rounds[r] (r >= 1) holds the vertices first
// generated in round r, so a vertex generated in round r acts as a generator
// only from round r+1 on.  Empty rounds are not recorded.
struct ClosureResult {
    VertexSet closed;
    std::vector<VertexSet> rounds;
};
ClosureResult closure(const Graph& g, const VertexSet& s, ConvexityKind kind);

// S is convex iff it generates nothing: interval(S) == S.
bool is_convex(const Graph& g, const VertexSet& s, ConvexityKind kind);

// S is a hull set iff its closure is all of V(g).
bool is_hull_set(const Graph& g, const VertexSet& s, ConvexityKind kind);

}  // namespace cxh
