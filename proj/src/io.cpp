#include "icx/io.hpp"

#include <fstream>
#include <sstream>

#include "icx/error.hpp"

namespace icx {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw InvalidInput(where + ": " + what);
}

void require_object(const Json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) schema_error(where, "expected an object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) schema_error(where, "unknown field '" + key + "'");
    }
}

const Json& field(const Json& j, const std::string& where, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) schema_error(where, std::string("missing field '") + name + "'");
    return *it;
}

std::string string_at(const Json& j, const std::string& where) {
    if (!j.is_string()) schema_error(where, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> strings_at(const Json& j, const std::string& where) {
    if (!j.is_array()) schema_error(where, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

template <class Fn>
auto with_context(const std::string& where, Fn&& fn) {
    try {
        return fn();
    } catch (const InvalidInput& e) {
        throw InvalidInput(where + ": " + e.what());
    }
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.label_edges()) edges.push_back(Json::array({a, b}));
    return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j, const std::string& where) {
    require_object(j, where, {"vertices", "edges"});
    auto vertices = strings_at(field(j, where, "vertices"), where + ".vertices");
    const Json& e = field(j, where, "edges");
    if (!e.is_array()) schema_error(where + ".edges", "expected an array");
    std::vector<LabelEdge> edges;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::string at = where + ".edges[" + std::to_string(i) + "]";
        auto pair = strings_at(e[i], at);
        if (pair.size() != 2) schema_error(at, "expected two endpoints");
        edges.emplace_back(pair[0], pair[1]);
    }
    return with_context(where, [&] { return Graph(std::move(vertices), edges); });
}

Json family_to_json(const GraphFamily& f) {
    Json assign = Json::object();
    for (int x = 0; x < static_cast<int>(f.base().order()); ++x) {
        const auto& m = f.member(x);
        Json entry{{"graph", graph_to_json(m.graph)}};
        if (m.root) entry["root"] = *m.root;
        assign[f.base().label(x)] = std::move(entry);
    }
    return Json{{"base", graph_to_json(f.base())}, {"assign", std::move(assign)}};
}

GraphFamily family_from_json(const Json& j, const std::string& where) {
    require_object(j, where, {"base", "assign"});
    Graph base = graph_from_json(field(j, where, "base"), where + ".base");
    const Json& assign = field(j, where, "assign");
    if (!assign.is_object()) schema_error(where + ".assign", "expected an object");
    std::vector<FamilyMember> members;
    for (const auto& x : base.vertices()) {
        const std::string at = where + ".assign." + x;
        auto it = assign.find(x);
        if (it == assign.end()) schema_error(where + ".assign", "no assignment for base vertex '" + x + "'");
        require_object(*it, at, {"graph", "root"});
        FamilyMember m{graph_from_json(field(*it, at, "graph"), at + ".graph"), std::nullopt};
        if (auto r = it->find("root"); r != it->end()) {
            m.root = string_at(*r, at + ".root");
            if (!m.graph.contains(*m.root)) schema_error(at + ".root", "'" + *m.root + "' is not a vertex of the graph");
        }
        if (m.graph.empty()) schema_error(at + ".graph", "member graph is empty");
        members.push_back(std::move(m));
    }
    for (const auto& [x, _] : assign.items()) {
        if (!base.contains(x)) schema_error(where + ".assign", "'" + x + "' is not a base vertex");
    }
    return GraphFamily(std::move(base), std::move(members));
}

Json complex_to_json(const SimplicialComplex& c) {
    Json facets = Json::array();
    for (std::size_t i = 0; i < c.facet_count(); ++i) facets.push_back(c.facet_labels(i));
    return Json{{"ground", c.ground()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j, const std::string& where) {
    require_object(j, where, {"ground", "facets"});
    auto ground = strings_at(field(j, where, "ground"), where + ".ground");
    const Json& fs = field(j, where, "facets");
    if (!fs.is_array()) schema_error(where + ".facets", "expected an array");
    std::vector<VertexSet> facets;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        facets.push_back(strings_at(fs[i], where + ".facets[" + std::to_string(i) + "]"));
    }
    return with_context(where, [&] { return SimplicialComplex::from_labels(std::move(ground), facets); });
}

Json order_to_json(const ShellingOrder& ord) { return Json(ord.order); }

ShellingOrder order_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) schema_error(where, "expected an array of facet indices");
    ShellingOrder out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_unsigned()) schema_error(where + "[" + std::to_string(i) + "]", "expected a facet index");
        out.order.push_back(j[i].get<std::size_t>());
    }
    return out;
}

Json witness_to_json(const VDWitness& w) {
    if (w.is_leaf()) return "discrete";
    return Json{{"vertex", w.vertex}, {"minus", witness_to_json(*w.minus)}, {"minusN", witness_to_json(*w.minus_closed)}};
}

Json cm_to_json(const CMVerdict& v) {
    Json witness = nullptr;
    if (v.witness) witness = Json{{"face", v.witness->face}, {"degree", v.witness->degree}};
    return Json{{"cm", v.cohen_macaulay}, {"witness", std::move(witness)}};
}

Json parse_json(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Byte offsets are easier to act on as line and column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string serialize_graph(const Graph& g) { return dump_json(graph_to_json(g)); }

Graph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

std::string serialize_family(const GraphFamily& f) { return dump_json(family_to_json(f)); }

GraphFamily parse_family(std::string_view text) { return family_from_json(parse_json(text)); }

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& p, std::string_view content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + p.string());
    out << content;
}

}  // namespace icx
