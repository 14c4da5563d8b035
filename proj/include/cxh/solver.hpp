#pragma once

#include <optional>
#include <utility>

#include "cxh/convexity.hpp"
#include "cxh/product.hpp"

namespace cxh {

// Raised when an exact search would exceed its budget (vertex cap, subset
// cap, or time limit).  Carries the best bounds established before the
// interruption; -1 means no bound was derived.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, int lower = -1, int upper = -1)
        : std::runtime_error(what), lower_(lower), upper_(upper) {}
    int lower_bound() const { return lower_; }
    int upper_bound() const { return upper_; }

private:
    int lower_, upper_;
};

// Limits for the exact solvers.  Zero fields mean "default": max_n falls back
// to 22 for the subset-enumeration searches and 64 (the representation cap)
// for the independence solver; max_subsets and time_limit_s default to
// unlimited.  No value of max_n lifts the 64-vertex representation cap.
struct SearchBudget {
    int max_n = 0;
    std::uint64_t max_subsets = 0;
    double time_limit_s = 0.0;
};

struct HullResult {
    int value = 0;
    VertexSet witness;
    std::string method;
};

struct ConvexityResult {
    int value = 0;
    VertexSet witness;
    std::string method;
};

struct IndependenceResult {
    int value = 0;
    VertexSet witness;
    std::string method;
};

// Minimum hull set by iterative deepening over k-subsets.  For the cycle
// kind, every vertex on no cycle of g can never be generated, so all such
// vertices are forced into every candidate.  Subsets are enumerated in
// increasing bit-mask order; the witness is the least mask among optima.
// Disconnected inputs are solved per component and summed.
HullResult hull_number_exact(const Graph& g, ConvexityKind kind, const SearchBudget& budget = {});

// Closed-form cycle hull numbers on products of nontrivial connected factors:
// strong and lexicographic products have hull number 2; the Cartesian product
// of two trees has m + n - 1 (reported as "fastpath-grid" when both factors
// are paths).  Returns nullopt for Cartesian products outside the tree case.
std::optional<HullResult> hull_fastpath(const ProductGraph& p, const Graph& g, const Graph& h);

// {max(hn_g, hn_h, 3), hn_g + hn_h - 1}: the general bounds on the cycle hull
// number of a Cartesian product of nontrivial connected factors.  Both inputs
// must be at least 2 (every graph with an edge has hull number >= 2).
std::pair<int, int> cartesian_hull_bounds(int hn_g, int hn_h);

// The L-shaped set ({g1} x S_H) u (S_G x {h_s}) with g1 = min S_G and
// h_s = min S_H.  When S_G and S_H are hull sets of the factors this is a
// hull set of the Cartesian product, of size |S_G| + |S_H| - 1.
VertexSet cartesian_hull_witness(const ProductGraph& p, const VertexSet& s_g,
                                 const VertexSet& s_h);

// True iff some minimum cycle hull set S of g splits into nonempty S1 and S2
// whose hulls intersect.  Decided by enumerating all minimum hull sets and
// all bipartitions of each.
bool partition_condition(const Graph& g, const SearchBudget& budget = {});

// Largest proper convex set, searched downward from size n-1.  For the cycle
// kind, a vertex v on no cycle yields the shortcut V - {v}.  Disconnected
// inputs: the best witness keeps all other components whole and takes the
// best proper convex set inside one component.
ConvexityResult convexity_number_exact(const Graph& g, ConvexityKind kind,
                                       const SearchBudget& budget = {});

// Closed-form cycle convexity numbers on products of nontrivial connected
// factors.  Cartesian: max(n*C(G), m*C(H)) with the winning factor's witness
// times the whole other factor.  Strong and lexicographic: the convexity
// number equals the independence number; the witness is a maximum
// independent set.
std::optional<ConvexityResult> convexity_fastpath(const ProductGraph& p, const Graph& g,
                                                  const Graph& h, const SearchBudget& budget = {});

// Maximum independent set by branch and bound with a greedy clique-cover
// bound; branches on the highest-degree candidate.  The witness is the least
// mask among maximum independent sets.
IndependenceResult independence_number_exact(const Graph& g, const SearchBudget& budget = {});

}  // namespace cxh
