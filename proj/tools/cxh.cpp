#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cxh/convexity.hpp"
#include "cxh/gadgets.hpp"
#include "cxh/io.hpp"
#include "cxh/product.hpp"
#include "cxh/solver.hpp"
#include "cxh/verify.hpp"

namespace {

using namespace cxh;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

// Edge-list files start with an "n m" header line; graph6 data has no
// whitespace inside the line.  That is enough to tell them apart.
Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        if (line.find_first_of(" \t", pos) != std::string::npos) return parse_edge_list(text);
        return parse_graph6(text);
    }
    throw std::invalid_argument(path + ": no graph data found");
}

ConvexityKind to_convexity(const std::string& s) {
    if (s == "cc") return ConvexityKind::Cycle;
    if (s == "p3") return ConvexityKind::P3;
    throw std::invalid_argument("--convexity must be cc or p3");
}

ProductKind to_product_kind(const std::string& s) {
    if (s == "cartesian") return ProductKind::Cartesian;
    if (s == "strong") return ProductKind::Strong;
    if (s == "lex" || s == "lexicographic") return ProductKind::Lexicographic;
    throw std::invalid_argument("--kind must be cartesian, strong, or lex");
}

std::string trimmed(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

VertexSet parse_seed_set(const std::string& spec, int universe) {
    VertexSet s(universe);
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trimmed(item);
        if (item.empty()) continue;
        int v;
        try {
            v = std::stoi(item);
        } catch (...) {
            throw std::invalid_argument("bad seed vertex '" + item + "'");
        }
        if (v < 0 || v >= universe)
            throw std::invalid_argument("seed vertex " + item + " out of range for order " +
                                        std::to_string(universe));
        s.insert(v);
    }
    return s;
}

SearchBudget base_budget() {
    SearchBudget b;
    if (const char* t = std::getenv("CXH_TIME_LIMIT")) {
        try {
            b.time_limit_s = std::stod(t);
        } catch (...) {
            throw std::invalid_argument("CXH_TIME_LIMIT must be a number of seconds");
        }
        if (b.time_limit_s < 0) throw std::invalid_argument("CXH_TIME_LIMIT must be nonnegative");
    }
    return b;
}

void print_witness(const Graph& g, const VertexSet& s) {
    std::cout << "witness: " << s.to_string() << "\n";
    if (g.has_labels()) {
        std::cout << "labels:";
        s.for_each([&](int v) { std::cout << " " << g.display_name(v); });
        std::cout << "\n";
    }
}

nlohmann::ordered_json set_to_json(const VertexSet& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle and two-neighbor convexity on graphs and graph products"};
    app.require_subcommand(1);
    int rc = 0;

    // graph stats | graph convert
    auto* graph_cmd = app.add_subcommand("graph", "inspect or convert a graph file");
    graph_cmd->require_subcommand(1);

    auto* stats = graph_cmd->add_subcommand("stats", "order, size, connectivity, bipartiteness");
    static std::string stats_file;
    stats->add_option("file", stats_file, "graph file (edge list or graph6)")->required();
    stats->callback([&] {
        Graph g = load_graph(stats_file);
        std::cout << "order: " << g.order() << "\n";
        std::cout << "edges: " << g.size() << "\n";
        auto comps = connected_components(g);
        std::cout << "components: " << comps.size() << "\n";
        std::cout << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";
        std::cout << "bipartite: " << (is_bipartite(g).bipartite ? "yes" : "no") << "\n";
        if (g.order() > 0) {
            int dmin = g.order(), dmax = 0;
            for (int v = 0; v < g.order(); ++v) {
                dmin = std::min(dmin, g.degree(v));
                dmax = std::max(dmax, g.degree(v));
            }
            std::cout << "degree: " << dmin << ".." << dmax << "\n";
        }
    });

    auto* convert = graph_cmd->add_subcommand("convert", "rewrite a graph file");
    static std::string convert_file, convert_to = "edgelist", convert_out;
    convert->add_option("file", convert_file, "graph file")->required();
    convert->add_option("--to", convert_to, "edgelist or graph6 (default edgelist)");
    convert->add_option("-o,--output", convert_out, "output path (default stdout)");
    convert->callback([&] {
        Graph g = load_graph(convert_file);
        std::string text;
        if (convert_to == "edgelist")
            text = emit_edge_list(g);
        else if (convert_to == "graph6")
            text = encode_graph6(g) + "\n";
        else
            throw std::invalid_argument("--to must be edgelist or graph6");
        if (convert_out.empty())
            std::cout << text;
        else
            write_file(convert_out, text);
    });

    // product
    auto* product_cmd = app.add_subcommand("product", "build a product of two graphs");
    static std::string product_kind = "cartesian", product_out;
    static std::vector<std::string> product_files;
    product_cmd->add_option("--kind", product_kind, "cartesian, strong, or lex");
    product_cmd->add_option("files", product_files, "two factor graph files")
        ->expected(2)
        ->required();
    product_cmd->add_option("-o,--output", product_out, "output path (default stdout)");
    product_cmd->callback([&] {
        Graph g = load_graph(product_files[0]);
        Graph h = load_graph(product_files[1]);
        ProductGraph p = product(g, h, to_product_kind(product_kind));
        std::string text = emit_edge_list(p.graph);
        if (product_out.empty())
            std::cout << text;
        else
            write_file(product_out, text);
    });

    // hull / cnum share their flag shape.
    struct SolveFlags {
        std::string convexity = "cc";
        std::string kind = "cartesian";
        bool exact = false;
        bool fastpath = false;
        std::vector<std::string> files;
        int max_n = 0;
        double time_limit = 0.0;
    };
    auto add_solve_flags = [](CLI::App* cmd, SolveFlags& f) {
        cmd->add_option("--convexity", f.convexity, "cc or p3 (default cc)");
        auto* ex = cmd->add_flag("--exact", f.exact, "force the exact solver");
        auto* fp = cmd->add_flag("--fastpath", f.fastpath,
                                 "use the product closed form (two factor files)");
        ex->excludes(fp);
        cmd->add_option("--kind", f.kind, "product kind for two factor files (default cartesian)");
        cmd->add_option("files", f.files, "one graph file, or two factor files")
            ->expected(1, 2)
            ->required();
        cmd->add_option("--max-n", f.max_n, "order cap for the exact search");
        cmd->add_option("--time-limit", f.time_limit, "seconds before giving up");
    };
    auto flag_budget = [](const SolveFlags& f) {
        SearchBudget b = base_budget();
        if (f.max_n > 0) b.max_n = f.max_n;
        if (f.time_limit > 0) b.time_limit_s = f.time_limit;
        return b;
    };

    auto* hull_cmd = app.add_subcommand("hull", "minimum hull set and hull number");
    static SolveFlags hull_flags;
    add_solve_flags(hull_cmd, hull_flags);
    hull_cmd->callback([&] {
        const SolveFlags& f = hull_flags;
        ConvexityKind kind = to_convexity(f.convexity);
        SearchBudget budget = flag_budget(f);
        if (f.files.size() == 1) {
            if (f.fastpath)
                throw std::invalid_argument("--fastpath needs two factor files and a --kind");
            Graph g = load_graph(f.files[0]);
            HullResult r = hull_number_exact(g, kind, budget);
            std::cout << "hull number: " << r.value << "\n";
            print_witness(g, r.witness);
            std::cout << "method: " << r.method << "\n";
            return;
        }
        Graph g = load_graph(f.files[0]);
        Graph h = load_graph(f.files[1]);
        ProductGraph p = product(g, h, to_product_kind(f.kind));
        std::optional<HullResult> r;
        if (kind == ConvexityKind::Cycle && !f.exact) r = hull_fastpath(p, g, h);
        if (f.fastpath && !r)
            throw std::invalid_argument("no hull closed form applies to this product");
        if (!r) r = hull_number_exact(p.graph, kind, budget);
        std::cout << "hull number: " << r->value << "\n";
        print_witness(p.graph, r->witness);
        std::cout << "method: " << r->method << "\n";
    });

    auto* cnum_cmd = app.add_subcommand("cnum", "largest proper convex set and convexity number");
    static SolveFlags cnum_flags;
    add_solve_flags(cnum_cmd, cnum_flags);
    cnum_cmd->callback([&] {
        const SolveFlags& f = cnum_flags;
        ConvexityKind kind = to_convexity(f.convexity);
        SearchBudget budget = flag_budget(f);
        if (f.files.size() == 1) {
            if (f.fastpath)
                throw std::invalid_argument("--fastpath needs two factor files and a --kind");
            Graph g = load_graph(f.files[0]);
            ConvexityResult r = convexity_number_exact(g, kind, budget);
            std::cout << "convexity number: " << r.value << "\n";
            print_witness(g, r.witness);
            std::cout << "method: " << r.method << "\n";
            return;
        }
        Graph g = load_graph(f.files[0]);
        Graph h = load_graph(f.files[1]);
        ProductGraph p = product(g, h, to_product_kind(f.kind));
        std::optional<ConvexityResult> r;
        if (kind == ConvexityKind::Cycle && !f.exact) r = convexity_fastpath(p, g, h, budget);
        if (f.fastpath && !r)
            throw std::invalid_argument("no convexity closed form applies to this product");
        if (!r) r = convexity_number_exact(p.graph, kind, budget);
        std::cout << "convexity number: " << r->value << "\n";
        print_witness(p.graph, r->witness);
        std::cout << "method: " << r->method << "\n";
    });

    // alpha
    auto* alpha_cmd = app.add_subcommand("alpha", "maximum independent set");
    static std::string alpha_file;
    static int alpha_max_n = 0;
    static double alpha_time = 0.0;
    alpha_cmd->add_option("file", alpha_file, "graph file")->required();
    alpha_cmd->add_option("--max-n", alpha_max_n, "order cap for the search");
    alpha_cmd->add_option("--time-limit", alpha_time, "seconds before giving up");
    alpha_cmd->callback([&] {
        Graph g = load_graph(alpha_file);
        SearchBudget b = base_budget();
        if (alpha_max_n > 0) b.max_n = alpha_max_n;
        if (alpha_time > 0) b.time_limit_s = alpha_time;
        IndependenceResult r = independence_number_exact(g, b);
        std::cout << "independence number: " << r.value << "\n";
        print_witness(g, r.witness);
    });

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "closure of a seed set, with rounds");
    static std::string closure_convexity = "cc", closure_file, closure_seeds;
    closure_cmd->add_option("--convexity", closure_convexity, "cc or p3 (default cc)");
    closure_cmd->add_option("file", closure_file, "graph file")->required();
    closure_cmd->add_option("--seed-set", closure_seeds, "comma-separated vertex ids")->required();
    closure_cmd->callback([&] {
        Graph g = load_graph(closure_file);
        ConvexityKind kind = to_convexity(closure_convexity);
        VertexSet seed = parse_seed_set(closure_seeds, g.order());
        ClosureResult r = closure(g, seed, kind);
        nlohmann::ordered_json out;
        out["convexity"] = convexity_kind_name(kind);
        out["seed"] = set_to_json(seed);
        out["closed"] = set_to_json(r.closed);
        out["rounds"] = nlohmann::ordered_json::array();
        for (const VertexSet& round : r.rounds) out["rounds"].push_back(set_to_json(round));
        out["is_hull_set"] = r.closed.count() == g.order();
        std::cout << out.dump(2) << "\n";
    });

    // reduce p3cc | reduce cart-k2
    auto* reduce_cmd = app.add_subcommand("reduce", "hardness constructions");
    reduce_cmd->require_subcommand(1);

    auto* p3cc = reduce_cmd->add_subcommand(
        "p3cc", "two-neighbor hull instance to cycle hull instance");
    static std::string p3cc_file, p3cc_out;
    static int p3cc_k = 0;
    p3cc->add_option("file", p3cc_file, "bipartite base graph")->required();
    p3cc->add_option("-k", p3cc_k, "hull threshold of the base instance")->required();
    p3cc->add_option("-o,--output", p3cc_out, "JSON output path (default stdout)");
    p3cc->callback([&] {
        Graph g = load_graph(p3cc_file);
        ReductionInstance inst = reduce_p3_to_cc(g, p3cc_k);
        std::string text = reduction_to_json(inst);
        if (p3cc_out.empty()) {
            std::cout << text;
        } else {
            write_file(p3cc_out, text);
            std::cout << "pairs covered: " << inst.L.size() << "\n";
            std::cout << "k': " << inst.k_prime << "\n";
            std::cout << "output order: " << inst.output.order() << "\n";
        }
    });

    auto* cartk2 = reduce_cmd->add_subcommand(
        "cart-k2", "cycle hull instance to an equal-threshold product instance");
    static std::string cartk2_file, cartk2_out;
    static int cartk2_u = 0, cartk2_k = 0;
    cartk2->add_option("file", cartk2_file, "base graph")->required();
    cartk2->add_option("-u", cartk2_u, "base vertex wired to the block")->required();
    cartk2->add_option("-k", cartk2_k, "hull threshold of the base instance")->required();
    cartk2->add_option("-o,--output", cartk2_out, "JSON output path (default stdout)");
    cartk2->callback([&] {
        Graph g = load_graph(cartk2_file);
        ReductionInstance inst = build_cartesian_hardness(g, cartk2_u, cartk2_k);
        std::string text = reduction_to_json(inst);
        if (cartk2_out.empty()) {
            std::cout << text;
        } else {
            write_file(cartk2_out, text);
            std::cout << "k': " << inst.k_prime << "\n";
            std::cout << "output order: " << inst.output.order() << "\n";
            std::cout << "product order: " << inst.product->graph.order() << "\n";
        }
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the theorem-check catalog");
    static std::string suite = "all", report_path;
    static std::uint64_t verify_seed = 42;
    static int verify_max_order = 0, verify_jobs = 1;
    static double verify_time = 0.0;
    verify_cmd->add_option("--suite", suite, "all, or comma-separated check ids");
    verify_cmd->add_option("--seed", verify_seed, "instance stream seed (default 42)");
    verify_cmd->add_option("--max-order", verify_max_order,
                           "override the per-check size caps (default: catalog values)");
    verify_cmd->add_option("--report", report_path, "write the JSON report here");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads (default 1)");
    verify_cmd->add_option("--time-limit", verify_time, "per-solver-call seconds");
    verify_cmd->callback([&] {
        std::vector<std::string> ids;
        if (trimmed(suite) == "all") {
            ids = catalog_ids();
        } else {
            std::istringstream in(suite);
            std::string item;
            while (std::getline(in, item, ','))
                if (!trimmed(item).empty()) ids.push_back(trimmed(item));
        }
        SuiteConfig config;
        config.seed = verify_seed;
        config.max_order = verify_max_order;
        config.parallelism = verify_jobs;
        config.budget = base_budget();
        if (verify_time > 0) config.budget.time_limit_s = verify_time;

        std::vector<TheoremReport> reports = run_suite(ids, config);
        std::string json = reports_to_json(reports);

        std::ostream& summary = report_path.empty() ? std::cerr : std::cout;
        bool all_passed = true;
        for (const TheoremReport& r : reports) {
            summary << r.id << ": " << check_status_name(r.status) << " (" << r.instances_run
                    << (r.instances_run == 1 ? " instance, " : " instances, ") << std::fixed
                    << std::setprecision(2) << r.wallclock << "s)\n";
            if (r.counterexample) summary << "  counterexample: " << r.counterexample->detail << "\n";
            if (!r.note.empty()) summary << "  note: " << r.note << "\n";
            all_passed = all_passed && r.passed;
        }
        if (report_path.empty())
            std::cout << json;
        else
            write_file(report_path, json);
        if (!all_passed) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what();
        if (e.lower_bound() >= 0) std::cerr << " (lower bound " << e.lower_bound() << ")";
        if (e.upper_bound() >= 0) std::cerr << " (upper bound " << e.upper_bound() << ")";
        std::cerr << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
