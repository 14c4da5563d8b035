#include <doctest.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cxh/convexity.hpp"
#include "cxh/families.hpp"
#include "cxh/gadgets.hpp"
#include "cxh/graph.hpp"
#include "cxh/io.hpp"
#include "cxh/solver.hpp"

using namespace cxh;

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void require_cycle(const Graph& g, const std::vector<int>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CAPTURE(i);
        CHECK(g.adjacent(seq[i], seq[(i + 1) % seq.size()]));
    }
}

}  // namespace

TEST_CASE("the 14-vertex block has its published wiring") {
    GadgetHw hw = build_Hw();
    const Graph& g = hw.graph;
    CHECK(g.order() == 14);
    CHECK(g.size() == 18);
    CHECK(is_connected(g));
    CHECK(is_bipartite(g).bipartite);

    require_cycle(g, {hw.y(0), hw.y(1), hw.y(2), hw.y(3), hw.y(4), hw.y(5)});
    require_cycle(g, {hw.x(1), hw.y(1), hw.y(2), hw.x(2)});
    require_cycle(g, {hw.x(3), hw.y(2), hw.y(3), hw.x(4)});
    require_cycle(g, {hw.x(6), hw.y(4), hw.y(3), hw.x(5)});
    require_cycle(g, {hw.x(8), hw.y(5), hw.y(4), hw.x(7)});

    CHECK(g.label(hw.y(0)) == "y0");
    CHECK(g.label(hw.x(8)) == "x8");

    // Every vertex lies on one of those cycles, so nothing is forced.
    for (int v = 0; v < 14; ++v) CHECK(lies_on_cycle(g, v));
}

TEST_CASE("the block needs nine seeds, checked against a full scan") {
    GadgetHw hw = build_Hw();
    VertexSet cert = hull_set_Hw();
    CHECK(cert.count() == 9);
    CHECK(is_hull_set(hw.graph, cert, ConvexityKind::Cycle));

    // Exhaustive reference: every one of the 2^14 subsets.
    int best = 14;
    for (std::uint64_t mask = 0; mask < (1ull << 14); ++mask) {
        if (std::popcount(mask) >= best) continue;
        if (is_hull_set(hw.graph, VertexSet::from_mask(14, mask), ConvexityKind::Cycle))
            best = std::popcount(mask);
    }
    CHECK(best == 9);
    CHECK(hull_number_exact(hw.graph, ConvexityKind::Cycle).value == 9);
}

TEST_CASE("with y0 handed in the block closes from eight seeds") {
    GadgetHw hw = build_Hw();
    VertexSet eight = VertexSet::of(
        14, {hw.y(1), hw.y(2), hw.y(3), hw.y(4), hw.x(1), hw.x(3), hw.x(5), hw.x(7)});

    // Standalone the eight seeds stall just short of y0, y5 and x8.
    VertexSet stalled = closure(hw.graph, eight, ConvexityKind::Cycle).closed;
    CHECK(stalled == VertexSet::full(14) - VertexSet::of(14, {hw.y(0), hw.y(5), hw.x(8)}));

    VertexSet with_anchor = eight;
    with_anchor.insert(hw.y(0));
    CHECK(is_hull_set(hw.graph, with_anchor, ConvexityKind::Cycle));
}

TEST_CASE("nonedge pairs are the generating pairs, in order") {
    CHECK(nonedge_set(path_graph(4)) ==
          std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(nonedge_set(path_graph(3)) == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(nonedge_set(cycle_graph(4)) ==
          std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(nonedge_set(complete_graph(4)).empty());
    CHECK(nonedge_set(star_graph(4)) ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

    // Non-adjacent pairs without a common neighbor do not appear.
    CHECK(nonedge_set(path_graph(5)) ==
          std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 4}});
}

TEST_CASE("the pair assembly wires two squares and a bridge path") {
    GadgetFuv f = build_Fuv();
    CHECK(f.graph.order() == 74);
    CHECK(is_bipartite(f.graph).bipartite);

    require_cycle(f.graph, {f.u, f.uprime, GadgetFuv::w(2) + GadgetHw::y(0),
                            GadgetFuv::w(1) + GadgetHw::y(0)});
    require_cycle(f.graph, {f.v, f.vprime, GadgetFuv::w(4) + GadgetHw::y(0),
                            GadgetFuv::w(5) + GadgetHw::y(0)});
    CHECK(f.graph.adjacent(f.uprime, GadgetFuv::w(3) + GadgetHw::y(0)));
    CHECK(f.graph.adjacent(GadgetFuv::w(3) + GadgetHw::y(0), f.vprime));
    CHECK(!f.graph.adjacent(f.u, f.v));
    CHECK(!f.graph.adjacent(f.uprime, f.vprime));
}

TEST_CASE("the two-neighbor reduction appends one assembly per pair") {
    Graph p3 = path_graph(3);
    ReductionInstance inst = reduce_p3_to_cc(p3, 2);
    CHECK(inst.kind == ReductionKind::P3ToCycle);
    CHECK(inst.k == 2);
    CHECK(inst.k_prime == 2 + 45);
    REQUIRE(inst.L.size() == 1);
    CHECK(inst.L[0] == std::pair<int, int>{0, 2});
    CHECK(inst.output.order() == 3 + 72);
    CHECK(inst.output.size() == 102);
    CHECK(is_connected(inst.output));
    CHECK(is_bipartite(inst.output).bipartite);
    REQUIRE(inst.provenance.size() == 75);
    CHECK(inst.provenance[0].from_base);
    CHECK(!inst.provenance[3].from_base);

    // Pair block ids behave like the standalone assembly shifted past the base.
    int up = fuv_uprime(inst, 0), vp = fuv_vprime(inst, 0);
    CHECK(up == 3);
    CHECK(vp == 4);
    CHECK(fuv_w(inst, 0, 1) == 5);
    CHECK(fuv_w(inst, 0, 3) == 5 + 2 * 14);
    require_cycle(inst.output, {0, up, fuv_w(inst, 0, 2) + GadgetHw::y(0),
                                fuv_w(inst, 0, 1) + GadgetHw::y(0)});
    require_cycle(inst.output, {2, vp, fuv_w(inst, 0, 4) + GadgetHw::y(0),
                                fuv_w(inst, 0, 5) + GadgetHw::y(0)});

    CHECK_THROWS_AS(fuv_uprime(inst, 1), std::invalid_argument);
    CHECK_THROWS_AS(fuv_w(inst, 0, 6), std::invalid_argument);
    CHECK_THROWS_AS(reduce_p3_to_cc(complete_graph(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce_p3_to_cc(p3, -1), std::invalid_argument);
}

TEST_CASE("certificates ride the reduction there and back") {
    Graph c4 = cycle_graph(4);
    ReductionInstance inst = reduce_p3_to_cc(c4, 2);
    REQUIRE(inst.L.size() == 2);
    CHECK(inst.output.order() == 4 + 2 * 72);
    CHECK(inst.k_prime == 2 + 90);

    VertexSet base_witness = hull_number_exact(c4, ConvexityKind::P3).witness;
    CHECK(base_witness.count() == 2);

    VertexSet lifted = lift_hull_set(inst, base_witness);
    CHECK(lifted.count() == 2 + 45 * 2);
    CHECK(is_hull_set(inst.output, lifted, ConvexityKind::Cycle));
    CHECK(project_back(inst, lifted) == base_witness);

    VertexSet not_a_hull_set = VertexSet::of(4, {0});
    CHECK_THROWS_AS(lift_hull_set(inst, not_a_hull_set), std::invalid_argument);
    CHECK_THROWS_AS(lift_hull_set(inst, VertexSet::of(5, {0, 2})), std::invalid_argument);
}

TEST_CASE("the identified pair of blocks shares exactly its anchor") {
    Graph hh = build_identified_HH();
    CHECK(hh.order() == 27);
    CHECK(hh.size() == 36);
    CHECK(is_connected(hh));
    CHECK(is_bipartite(hh).bipartite);

    VertexSet cert = hull_set_identified_HH();
    CHECK(cert.count() == 18);
    CHECK(!cert.contains(0));
    CHECK(is_hull_set(hh, cert, ConvexityKind::Cycle));

    // Removing the shared vertex separates the copies.
    VertexSet rest = VertexSet::full(27);
    rest.erase(0);
    CHECK(connected_components(induced_subgraph(hh, rest)).size() == 2);
}

TEST_CASE("one block can run on eight seeds once the other supplies the anchor") {
    Graph hh = build_identified_HH();

    // Full nine-seed certificate on the first copy, eight seeds on the second.
    std::vector<int> nine = {1, 2, 3, 4, 5, 6, 8, 10, 12};
    std::vector<int> eight_offsets = {1, 2, 3, 4, 6, 8, 10, 12};
    VertexSet seventeen(27);
    for (int v : nine) seventeen.insert(v);
    for (int v : eight_offsets) seventeen.insert(13 + v);
    CHECK(seventeen.count() == 17);
    CHECK(is_hull_set(hh, seventeen, ConvexityKind::Cycle));

    // Eight and eight stall: neither side can generate the shared anchor.
    VertexSet sixteen = seventeen;
    sixteen.erase(5);
    CHECK(sixteen.count() == 16);
    VertexSet stalled = closure(hh, sixteen, ConvexityKind::Cycle).closed;
    CHECK(!stalled.contains(0));
    CHECK(stalled.count() == 22);
}

TEST_CASE("the cartesian hardness instance attaches the block by one edge") {
    Graph c4 = cycle_graph(4);
    ReductionInstance inst = build_cartesian_hardness(c4, 0, 3);
    CHECK(inst.kind == ReductionKind::CartesianK2);
    CHECK(inst.k_prime == 21);
    CHECK(inst.attach_vertex == 0);
    CHECK(inst.L.empty());
    CHECK(inst.output.order() == 31);
    CHECK(inst.output.size() == 4 + 36 + 1);
    CHECK(inst.output.adjacent(0, 4));
    CHECK(is_connected(inst.output));
    REQUIRE(inst.product.has_value());
    CHECK(inst.product->graph.order() == 62);
    CHECK(inst.product->kind == ProductKind::Cartesian);
    CHECK(inst.product->n == 2);

    VertexSet base_witness = hull_number_exact(c4, ConvexityKind::Cycle).witness;
    VertexSet lifted = lift_hull_set(inst, base_witness);
    CHECK(lifted.count() == 3 + 18);
    CHECK(is_hull_set(inst.output, lifted, ConvexityKind::Cycle));
    CHECK(project_back(inst, lifted) == base_witness);

    CHECK_THROWS_AS(build_cartesian_hardness(c4, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_cartesian_hardness(c4, 0, -2), std::invalid_argument);
}

TEST_CASE("the appended block costs seventeen seeds, not eighteen") {
    // Smallest base: a single vertex wired to the shared anchor.
    ReductionInstance inst = build_cartesian_hardness(Graph(1), 0, 1);
    CHECK(inst.output.order() == 28);

    // hn(K1) = 1, so the lifted certificate has 19 members; but the base
    // vertex plus the 17-seed split closes as well.
    VertexSet tight(28);
    tight.insert(0);
    for (int v : {1, 2, 3, 4, 5, 6, 8, 10, 12}) tight.insert(1 + v);
    for (int v : {1, 2, 3, 4, 6, 8, 10, 12}) tight.insert(14 + v);
    CHECK(tight.count() == 18);
    CHECK(is_hull_set(inst.output, tight, ConvexityKind::Cycle));
}

TEST_CASE("the exact solver confirms the block economy"
          * doctest::test_suite("slow")) {
    ReductionInstance inst = build_cartesian_hardness(Graph(1), 0, 1);
    SearchBudget budget;
    budget.max_n = 28;
    HullResult r = hull_number_exact(inst.output, ConvexityKind::Cycle, budget);
    CHECK(r.value == 18);
    CHECK(is_hull_set(inst.output, r.witness, ConvexityKind::Cycle));
}

TEST_CASE("reduction instances serialize to a JSON envelope") {
    ReductionInstance inst = reduce_p3_to_cc(path_graph(3), 2);
    nlohmann::json j = nlohmann::json::parse(reduction_to_json(inst));
    CHECK(j["k_prime"] == 47);
    REQUIRE(j["L"].is_array());
    REQUIRE(j["L"].size() == 1);
    CHECK(j["L"][0][0] == 0);
    CHECK(j["L"][0][1] == 2);
    REQUIRE(j["provenance"].size() == 75);
    CHECK(j["provenance"][0]["origin"] == "base");
    CHECK(j["provenance"][3]["origin"] == "gadget");
    CHECK(!j.contains("product_edge_list"));

    Graph out = parse_edge_list(j["edge_list"].get<std::string>());
    CHECK(out == inst.output);

    ReductionInstance cart = build_cartesian_hardness(cycle_graph(4), 1, 3);
    nlohmann::json jc = nlohmann::json::parse(reduction_to_json(cart));
    REQUIRE(jc.contains("product_edge_list"));
    Graph prod = parse_edge_list(jc["product_edge_list"].get<std::string>());
    CHECK(prod.order() == 62);
}
