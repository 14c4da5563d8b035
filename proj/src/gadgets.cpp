#include "cxh/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "cxh/convexity.hpp"
#include "cxh/io.hpp"

namespace cxh {

namespace {

// The 18 edges of the block, as (role, role) pairs relative to a base id.
// Offsets 0..5 are y0..y5, 6..13 are x1..x8.
constexpr std::pair<int, int> kHwEdges[18] = {
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},      // 6-cycle on the y's
    {1, 6}, {6, 7}, {2, 7},                              // x1,y1,y2,x2
    {2, 8}, {8, 9}, {3, 9},                              // x3,y2,y3,x4
    {3, 10}, {10, 11}, {4, 11},                          // x6,y4,y3,x5
    {4, 12}, {12, 13}, {5, 13},                          // x8,y5,y4,x7
};

std::string hw_role(int offset) {
    return offset <= 5 ? "y" + std::to_string(offset)
                       : "x" + std::to_string(offset - 5);
}

void add_hw_copy(Graph& g, int base, const std::string& prefix) {
    for (auto [a, b] : kHwEdges) g.add_edge(base + a, base + b);
    for (int off = 0; off < GadgetHw::order; ++off)
        g.set_label(base + off, prefix + hw_role(off));
}

const int kHullOffsets[9] = {1, 2, 3, 4, 5, 6, 8, 10, 12};  // y1..y5, x1,x3,x5,x7

std::string pair_tag(std::pair<int, int> p) {
    return "^{(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")}";
}

// Fresh-vertex layout of one appended block: u', v', then copies w1..w5.
constexpr int kPairBlockSize = 72;
int pair_base(int n_base, int pair_index) { return n_base + kPairBlockSize * pair_index; }
int pair_uprime(int block) { return block; }
int pair_vprime(int block) { return block + 1; }
int pair_w(int block, int i) { return block + 2 + GadgetHw::order * (i - 1); }

}  // namespace

GadgetHw build_Hw() {
    GadgetHw hw;
    hw.graph = Graph(GadgetHw::order);
    for (auto [a, b] : kHwEdges) hw.graph.add_edge(a, b);
    for (int off = 0; off < GadgetHw::order; ++off) hw.graph.set_label(off, hw_role(off));
    return hw;
}

VertexSet hull_set_Hw() {
    VertexSet s(GadgetHw::order);
    for (int off : kHullOffsets) s.insert(off);
    return s;
}

GadgetFuv build_Fuv() {
    GadgetFuv f;
    f.graph = Graph(GadgetFuv::order);
    f.graph.set_label(f.u, "u");
    f.graph.set_label(f.uprime, "u'");
    f.graph.set_label(f.v, "v");
    f.graph.set_label(f.vprime, "v'");
    for (int i = 1; i <= 5; ++i)
        add_hw_copy(f.graph, GadgetFuv::w(i), "w" + std::to_string(i) + ":");
    int y0 = GadgetHw::y(0);
    f.graph.add_edge(f.u, f.uprime);
    f.graph.add_edge(f.uprime, GadgetFuv::w(2) + y0);
    f.graph.add_edge(GadgetFuv::w(2) + y0, GadgetFuv::w(1) + y0);
    f.graph.add_edge(GadgetFuv::w(1) + y0, f.u);
    f.graph.add_edge(f.v, f.vprime);
    f.graph.add_edge(f.vprime, GadgetFuv::w(4) + y0);
    f.graph.add_edge(GadgetFuv::w(4) + y0, GadgetFuv::w(5) + y0);
    f.graph.add_edge(GadgetFuv::w(5) + y0, f.v);
    f.graph.add_edge(f.uprime, GadgetFuv::w(3) + y0);
    f.graph.add_edge(GadgetFuv::w(3) + y0, f.vprime);
    return f;
}

std::vector<std::pair<int, int>> nonedge_set(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v)) continue;
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            bool common = false;
            std::size_t i = 0, j = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] == nv[j]) {
                    common = true;
                    break;
                }
                nu[i] < nv[j] ? ++i : ++j;
            }
            if (common) out.emplace_back(u, v);
        }
    return out;
}

ReductionInstance reduce_p3_to_cc(const Graph& g, int k) {
    if (!is_bipartite(g).bipartite)
        throw std::invalid_argument("reduce_p3_to_cc: input graph must be bipartite");
    if (k < 0) throw std::invalid_argument("reduce_p3_to_cc: negative budget");

    ReductionInstance inst;
    inst.kind = ReductionKind::P3ToCycle;
    inst.base = g;
    inst.k = k;
    inst.L = nonedge_set(g);
    inst.k_prime = k + 45 * int(inst.L.size());

    int n = g.order();
    Graph out(n + kPairBlockSize * int(inst.L.size()));
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    inst.provenance.resize(out.order());
    for (int v = 0; v < n; ++v) {
        if (g.has_labels() && !g.label(v).empty()) out.set_label(v, g.label(v));
        inst.provenance[v] = {true, g.display_name(v)};
    }

    int y0 = GadgetHw::y(0);
    for (int p = 0; p < int(inst.L.size()); ++p) {
        auto [a, b] = inst.L[p];
        std::string tag = pair_tag(inst.L[p]);
        int block = pair_base(n, p);
        int up = pair_uprime(block);
        int vp = pair_vprime(block);
        out.set_label(up, "u'" + tag);
        out.set_label(vp, "v'" + tag);
        for (int i = 1; i <= 5; ++i)
            add_hw_copy(out, pair_w(block, i), "w" + std::to_string(i) + tag + ":");

        out.add_edge(a, up);
        out.add_edge(up, pair_w(block, 2) + y0);
        out.add_edge(pair_w(block, 2) + y0, pair_w(block, 1) + y0);
        out.add_edge(pair_w(block, 1) + y0, a);
        out.add_edge(b, vp);
        out.add_edge(vp, pair_w(block, 4) + y0);
        out.add_edge(pair_w(block, 4) + y0, pair_w(block, 5) + y0);
        out.add_edge(pair_w(block, 5) + y0, b);
        out.add_edge(up, pair_w(block, 3) + y0);
        out.add_edge(pair_w(block, 3) + y0, vp);

        for (int off = block; off < block + kPairBlockSize; ++off)
            inst.provenance[off] = {false, out.label(off)};
    }

    if (!is_bipartite(out).bipartite)
        throw std::logic_error("reduce_p3_to_cc: output lost bipartiteness");
    inst.output = std::move(out);
    return inst;
}

namespace {

int checked_pair_block(const ReductionInstance& instance, int p) {
    if (instance.kind != ReductionKind::P3ToCycle)
        throw std::invalid_argument("pair block ids only exist on P3ToCycle instances");
    if (p < 0 || p >= int(instance.L.size()))
        throw std::invalid_argument("pair index out of range");
    return pair_base(instance.base.order(), p);
}

}  // namespace

int fuv_uprime(const ReductionInstance& instance, int p) {
    return pair_uprime(checked_pair_block(instance, p));
}

int fuv_vprime(const ReductionInstance& instance, int p) {
    return pair_vprime(checked_pair_block(instance, p));
}

int fuv_w(const ReductionInstance& instance, int p, int i) {
    if (i < 1 || i > 5) throw std::invalid_argument("block copy index must be 1..5");
    return pair_w(checked_pair_block(instance, p), i);
}

Graph build_identified_HH() {
    Graph g(27);
    g.set_label(0, "v");
    // Copy w1 at ids 1..13, copy w2 at 14..26; both use id 0 as their y0.
    for (int c = 0; c < 2; ++c) {
        int shift = c == 0 ? 0 : 13;
        std::string prefix = c == 0 ? "w1:" : "w2:";
        auto id = [&](int off) { return off == 0 ? 0 : off + shift; };
        for (auto [a, b] : kHwEdges) g.add_edge(id(a), id(b));
        for (int off = 1; off < GadgetHw::order; ++off)
            g.set_label(id(off), prefix + hw_role(off));
    }
    return g;
}

VertexSet hull_set_identified_HH() {
    VertexSet s(27);
    for (int off : kHullOffsets) {
        s.insert(off);       // copy w1: roles keep their ids
        s.insert(off + 13);  // copy w2: shifted block
    }
    return s;
}

ReductionInstance build_cartesian_hardness(const Graph& g, int u, int k) {
    if (u < 0 || u >= g.order())
        throw std::invalid_argument("build_cartesian_hardness: attach vertex out of range");
    if (k < 0) throw std::invalid_argument("build_cartesian_hardness: negative budget");

    ReductionInstance inst;
    inst.kind = ReductionKind::CartesianK2;
    inst.base = g;
    inst.k = k;
    inst.k_prime = k + 18;
    inst.attach_vertex = u;

    int n = g.order();
    Graph hh = build_identified_HH();
    Graph out(n + hh.order());
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (auto [a, b] : hh.edges()) out.add_edge(n + a, n + b);
    out.add_edge(u, n);  // base vertex to the shared block vertex

    inst.provenance.resize(out.order());
    for (int v = 0; v < n; ++v) {
        if (g.has_labels() && !g.label(v).empty()) out.set_label(v, g.label(v));
        inst.provenance[v] = {true, g.display_name(v)};
    }
    for (int v = 0; v < hh.order(); ++v) {
        out.set_label(n + v, hh.label(v));
        inst.provenance[n + v] = {false, hh.label(v)};
    }

    Graph k2(2);
    k2.add_edge(0, 1);
    inst.output = std::move(out);
    inst.product = product(inst.output, k2, ProductKind::Cartesian);
    if (is_bipartite(g).bipartite && !is_bipartite(inst.product->graph).bipartite)
        throw std::logic_error("build_cartesian_hardness: product lost bipartiteness");
    return inst;
}

VertexSet lift_hull_set(const ReductionInstance& instance, const VertexSet& s) {
    int n = instance.base.order();
    if (s.universe() != n)
        throw std::invalid_argument("lift_hull_set: seed universe does not match the base graph");
    ConvexityKind source = instance.kind == ReductionKind::P3ToCycle ? ConvexityKind::P3
                                                                     : ConvexityKind::Cycle;
    if (!is_hull_set(instance.base, s, source))
        throw std::invalid_argument("lift_hull_set: seeds do not close the base graph");

    VertexSet lifted(instance.output.order());
    s.for_each([&](int v) { lifted.insert(v); });
    if (instance.kind == ReductionKind::P3ToCycle) {
        for (int p = 0; p < int(instance.L.size()); ++p) {
            int block = pair_base(n, p);
            for (int i = 1; i <= 5; ++i)
                for (int off : kHullOffsets) lifted.insert(pair_w(block, i) + off);
        }
    } else {
        hull_set_identified_HH().for_each([&](int v) { lifted.insert(n + v); });
    }

    if (!is_hull_set(instance.output, lifted, ConvexityKind::Cycle))
        throw std::logic_error("lift_hull_set: lifted certificate fails to close the output");
    return lifted;
}

VertexSet project_back(const ReductionInstance& instance, const VertexSet& s_cc) {
    if (s_cc.universe() != instance.output.order())
        throw std::invalid_argument("project_back: set universe does not match the output graph");
    if (!is_hull_set(instance.output, s_cc, ConvexityKind::Cycle))
        throw std::invalid_argument("project_back: set does not close the output graph");

    int n = instance.base.order();
    VertexSet back(n);
    s_cc.for_each([&](int v) {
        if (v < n) {
            back.insert(v);
            return;
        }
        if (instance.kind == ReductionKind::P3ToCycle) {
            int p = (v - n) / kPairBlockSize;
            int block = pair_base(n, p);
            if (v == pair_uprime(block)) back.insert(instance.L[p].first);
            if (v == pair_vprime(block)) back.insert(instance.L[p].second);
        }
        // Block-internal members carry no base information and are dropped.
    });
    return back;
}

std::string reduction_to_json(const ReductionInstance& instance) {
    nlohmann::ordered_json j;
    j["edge_list"] = emit_edge_list(instance.output);
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    if (instance.output.has_labels())
        for (int v = 0; v < instance.output.order(); ++v)
            if (!instance.output.label(v).empty())
                labels[std::to_string(v)] = instance.output.label(v);
    j["labels"] = labels;
    j["k_prime"] = instance.k_prime;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (auto [a, b] : instance.L) pairs.push_back({a, b});
    j["L"] = pairs;
    nlohmann::ordered_json prov = nlohmann::ordered_json::array();
    for (const auto& origin : instance.provenance)
        prov.push_back({{"origin", origin.from_base ? "base" : "gadget"},
                        {"label", origin.label}});
    j["provenance"] = prov;
    if (instance.product) j["product_edge_list"] = emit_edge_list(instance.product->graph);
    return j.dump(2) + "\n";
}

}  // namespace cxh
