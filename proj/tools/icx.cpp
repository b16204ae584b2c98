// Command-line front end: property checks, graph operations, shelling
// constructions and the verification suite.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "icx/complex.hpp"
#include "icx/constructions.hpp"
#include "icx/decompose.hpp"
#include "icx/error.hpp"
#include "icx/generate.hpp"
#include "icx/homology.hpp"
#include "icx/io.hpp"
#include "icx/ops.hpp"
#include "icx/suite.hpp"

namespace {

using namespace icx;

constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr int kExitSuiteFailed = 4;

Graph load_graph(const std::string& path) { return graph_from_json(parse_json(read_file(path), path), path); }

GraphFamily load_family(const std::string& path) {
    return family_from_json(parse_json(read_file(path), path), path);
}

void emit(const Json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << dump_json(j);
    } else {
        write_file(out, dump_json(j));
    }
}

Json pair_json(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
    if (!p) return nullptr;
    return Json::array({p->first, p->second});
}

int run_check(const std::string& prop, const std::string& graph_path, bool witness) {
    const Graph g = load_graph(graph_path);
    Json out;
    if (prop == "vd") {
        const VDVerdict v = is_vertex_decomposable(g);
        out = Json{{"vd", v.decomposable}};
        if (witness) out["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
    } else if (prop == "shellable") {
        const SimplicialComplex c = independence_complex(g);
        const auto ord = find_shelling(c);
        out = Json{{"shellable", ord.has_value()}};
        if (witness) out["witness"] = ord ? order_to_json(*ord) : Json(nullptr);
    } else if (prop == "cm") {
        out = cm_to_json(is_cohen_macaulay(g));
    } else if (prop == "unmixed") {
        out = Json{{"unmixed", is_unmixed(g)}};
        if (witness) out["witness"] = complex_to_json(independence_complex(g));
    } else if (prop == "chordal") {
        out = Json{{"chordal", is_chordal(g)}};
    } else {
        out = Json{{"shedding", shedding_vertices(g)}};
    }
    emit(out, "");
    return 0;
}

int run_op(const std::string& kind, const std::string& lhs, const std::string& rhs, const std::string& family,
           const std::string& out) {
    const bool binary = kind == "union" || kind == "join" || kind == "cartesian";
    if (binary) {
        if (lhs.empty() || rhs.empty()) throw InvalidInput("--kind " + kind + " needs --lhs and --rhs");
        const Graph g = load_graph(lhs);
        const Graph h = load_graph(rhs);
        const Graph r = kind == "union" ? disjoint_union(g, h) : kind == "join" ? join(g, h) : cartesian_product(g, h);
        emit(graph_to_json(r), out);
        return 0;
    }
    if (family.empty()) throw InvalidInput("--kind " + kind + " needs --family");
    const GraphFamily f = load_family(family);
    if (!lhs.empty() && !(load_graph(lhs) == f.base())) {
        throw InvalidInput("--lhs differs from the base graph of the family");
    }
    const Graph r = kind == "rooted" ? rooted_product(f) : kind == "corona" ? corona(f) : lexicographic_product(f);
    emit(graph_to_json(r), out);
    return 0;
}

int run_shelling(const std::string& construct, const std::string& family, const std::string& base_order_path) {
    const GraphFamily f = load_family(family);
    const auto components = find_component_shellings(f);
    if (!components) throw InvalidInput("some member graph is not shellable");
    ShellingOrder ord;
    Graph product;
    Json base_json = nullptr;
    if (construct == "corona") {
        product = corona(f);
        ord = corona_shelling(f, *components);
    } else {
        product = lexicographic_product(f);
        std::optional<ShellingOrder> base_order;
        if (!base_order_path.empty()) {
            base_order = order_from_json(parse_json(read_file(base_order_path), base_order_path), base_order_path);
        } else {
            base_order = find_shell2_shelling(f.base(), complete_members(f));
            if (!base_order) throw InvalidInput("no base shelling satisfies the hypothesis for the complete members");
        }
        base_json = order_to_json(*base_order);
        ord = lexicographic_shelling(f, *base_order, *components);
    }
    const SimplicialComplex c = independence_complex(product);
    const ShellingVerdict v = verify_shelling(c, ord);
    Json facets = Json::array();
    for (std::size_t i : ord.order) facets.push_back(c.facet_labels(i));
    Json out{{"order", order_to_json(ord)}, {"facets", std::move(facets)}, {"accepted", v.accepted},
             {"witness", pair_json(v.witness)}};
    if (!base_json.is_null()) out["base_order"] = std::move(base_json);
    emit(out, "");
    return 0;
}

int run_generate(const std::string& kind, int n, int min_n, double p, std::uint64_t seed, int count,
                 const std::string& out) {
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(kind);
    spec.n = n;
    spec.min_n = min_n;
    spec.p = p;
    spec.seed = seed;
    spec.count = count;
    const auto graphs = generate(spec);
    if (graphs.size() == 1) {
        emit(graph_to_json(graphs.front()), out);
    } else {
        Json all = Json::array();
        for (const auto& g : graphs) all.push_back(graph_to_json(g));
        emit(all, out);
    }
    return 0;
}

int run_suite_command(SuiteConfig config, const std::string& report_path) {
    const SuiteReport report = run_suite(config);
    for (const auto& c : report.checks) {
        std::cout << (c.passed() ? "PASS " : "FAIL ") << c.id << " instances=" << c.instances
                  << " degraded=" << c.degraded << " failures=" << c.failure_count << "\n";
    }
    if (!report_path.empty()) write_file(report_path, dump_json(report.to_json()));
    return report.passed() ? 0 : kExitSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence complexes of graphs and graph operations"};
    app.require_subcommand(1);

    std::string prop, graph_path;
    bool witness = false;
    auto* check = app.add_subcommand("check", "Decide a property of a graph");
    check->add_option("--prop", prop, "Property to decide")
        ->required()
        ->check(CLI::IsMember({"vd", "shellable", "cm", "unmixed", "chordal", "shedding"}));
    check->add_option("--graph", graph_path, "Graph JSON file")->required();
    check->add_flag("--witness", witness, "Include a certificate");

    std::string kind, lhs, rhs, family, out;
    auto* op = app.add_subcommand("op", "Apply a graph operation");
    op->add_option("--kind", kind, "Operation")
        ->required()
        ->check(CLI::IsMember({"union", "join", "rooted", "corona", "cartesian", "lex"}));
    op->add_option("--lhs", lhs, "Left graph JSON file");
    auto* rhs_opt = op->add_option("--rhs", rhs, "Right graph JSON file");
    auto* family_opt = op->add_option("--family", family, "Family JSON file");
    rhs_opt->excludes(family_opt);
    op->add_option("-o,--out", out, "Output file (default stdout)");

    std::string construct, shell_family, base_order;
    auto* shelling = app.add_subcommand("shelling", "Build a shelling of a corona or lexicographic product");
    shelling->add_option("--construct", construct, "Construction")
        ->required()
        ->check(CLI::IsMember({"corona", "lex"}));
    shelling->add_option("--family", shell_family, "Family JSON file")->required();
    shelling->add_option("--base-order", base_order, "Base shelling as facet indices (lex only)");

    std::string gen_kind, gen_out;
    int gen_n = 0, gen_min_n = 0, gen_count = 1;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("generate", "Generate graphs");
    gen->add_option("--kind", gen_kind, "cycle|path|complete|star|discrete|all-graphs|gnp|chordal-random")->required();
    gen->add_option("--n", gen_n, "Number of vertices")->required();
    gen->add_option("--min-n", gen_min_n, "Smallest order for random kinds");
    gen->add_option("--p", gen_p, "Edge probability for gnp");
    gen->add_option("--seed", gen_seed, "Seed for random kinds");
    gen->add_option("--count", gen_count, "Number of random graphs");
    gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

    SuiteConfig config;
    std::string report_path;
    bool no_timing = false;
    auto* suite = app.add_subcommand("suite", "Run the verification suite");
    suite->add_option("--max-n", config.max_n, "Order of the exhaustive implication sweep")
        ->check(CLI::Range(1, 7));
    suite->add_option("--seed", config.seed, "Seed for the random families");
    suite->add_option("--report", report_path, "Write the JSON report here");
    suite->add_flag("--no-timing", no_timing, "Omit wall times so reports compare byte for byte");
    suite->add_flag("--mutate", config.mutate, "Use a shelling decision that accepts everything");
    suite->add_option("--only", config.only, "Run only these check ids");
    suite->add_option("--node-cap", config.search.node_cap, "Shelling search node cap (0 disables)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*check) return run_check(prop, graph_path, witness);
        if (*op) return run_op(kind, lhs, rhs, family, out);
        if (*shelling) return run_shelling(construct, shell_family, base_order);
        if (*gen) return run_generate(gen_kind, gen_n, gen_min_n, gen_p, gen_seed, gen_count, gen_out);
        config.record_timing = !no_timing;
        return run_suite_command(config, report_path);
    } catch (const InvalidInput& e) {
        std::cerr << "icx: invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ResourceLimit& e) {
        std::cerr << "icx: resource cap: " << e.what() << "\n";
        return kExitResource;
    }
}
