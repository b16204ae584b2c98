#include "doctest.h"

#include <string>

#include "icx/complex.hpp"
#include "icx/decompose.hpp"
#include "icx/error.hpp"
#include "icx/generate.hpp"
#include "icx/homology.hpp"
#include "icx/io.hpp"
#include "icx/ops.hpp"
#include "icx/suite.hpp"

using namespace icx;

namespace {

std::string fixture(const std::string& name) { return read_file(std::string(ICX_FIXTURES) + "/" + name); }

std::string error_of(const std::string& text, bool family) {
    try {
        if (family) {
            parse_family(text);
        } else {
            parse_graph(text);
        }
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

bool mentions(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("graph files round-trip byte for byte") {
    for (const auto* name : {"c4.json", "c5.json", "path_a_e.json", "c3_box_c3.json", "p3_lex_p3_minus_22.json"}) {
        const std::string text = fixture(name);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
    CHECK(parse_graph(fixture("c4.json")) == cycle_graph(4));
}

TEST_CASE("family files round-trip byte for byte") {
    for (const auto* name : {"c4_k2_family.json", "path_a_e_family.json", "c4_k1_family.json"}) {
        const std::string text = fixture(name);
        CHECK(serialize_family(parse_family(text)) == text);
    }
    const GraphFamily f = parse_family(fixture("c4_k2_family.json"));
    CHECK(f.member("3").root == std::optional<std::string>("1"));
    CHECK(rooted_product(f) == parse_graph(fixture("c4_rooted_k2.json")));
}

TEST_CASE("pinned fixture files match the built-in fixtures") {
    for (const auto& [name, g] : pinned_fixtures()) CHECK(parse_graph(fixture(name + ".json")) == g);
}

TEST_CASE("graph schema errors name the problem") {
    CHECK(mentions(error_of(R"({"vertices": ["a"], "edges": [["a", "a"]]})", false), "'a'"));
    CHECK(mentions(error_of(R"({"vertices": ["a"], "edges": [["a", "b"]]})", false), "'b'"));
    CHECK(mentions(error_of(R"({"vertices": ["a"]})", false), "edges"));
    CHECK(mentions(error_of(R"({"vertices": ["a"], "edges": [], "extra": 1})", false), "extra"));
    CHECK(mentions(error_of(R"({"vertices": [1], "edges": []})", false), "vertices"));
    CHECK(mentions(error_of(R"({"vertices": ["a", "b"], "edges": [["a"]]})", false), "edges"));
    CHECK(mentions(error_of(R"([1, 2])", false), "graph"));
}

TEST_CASE("family schema errors name the problem") {
    const std::string k1 = R"({"vertices": ["x"], "edges": []})";
    const std::string base = R"({"vertices": ["a", "b"], "edges": [["a", "b"]]})";
    const std::string missing = R"({"base": )" + base + R"(, "assign": {"a": {"graph": )" + k1 + "}}}";
    CHECK(mentions(error_of(missing, true), "'b'"));
    const std::string bad_root =
        R"({"base": )" + base + R"(, "assign": {"a": {"graph": )" + k1 + R"(, "root": "q"}, "b": {"graph": )" + k1 + "}}}";
    CHECK(mentions(error_of(bad_root, true), "'q'"));
    const std::string stranger = R"({"base": )" + base + R"(, "assign": {"a": {"graph": )" + k1 + R"(}, "b": {"graph": )" +
                                 k1 + R"(}, "z": {"graph": )" + k1 + "}}}";
    CHECK(mentions(error_of(stranger, true), "'z'"));
    const std::string empty = R"({"base": )" + base + R"(, "assign": {"a": {"graph": )" + k1 +
                              R"(}, "b": {"graph": {"vertices": [], "edges": []}}}})";
    CHECK_FALSE(error_of(empty, true).empty());
}

TEST_CASE("malformed JSON reports line and column") {
    try {
        parse_json("{\n  \"vertices\": [,\n}", "g.json");
        FAIL("expected an error");
    } catch (const InvalidInput& e) {
        CHECK(mentions(e.what(), "g.json:2:"));
    }
}

TEST_CASE("complexes, orders, witnesses and verdicts serialise") {
    const auto c = independence_complex(cycle_graph(5));
    CHECK(complex_from_json(complex_to_json(c)) == c);
    const ShellingOrder ord{{2, 0, 1}};
    CHECK(order_from_json(order_to_json(ord)) == ord);
    CHECK_THROWS_AS(order_from_json(Json::array({-1})), InvalidInput);

    CHECK(witness_to_json(VDWitness{}) == Json("discrete"));
    const auto v = is_vertex_decomposable(cycle_graph(5));
    const Json w = witness_to_json(*v.witness);
    CHECK(w.contains("vertex"));
    CHECK(w.contains("minus"));
    CHECK(w.contains("minusN"));

    const Json cm = cm_to_json(is_cohen_macaulay(cycle_graph(4)));
    CHECK(cm.dump() == R"({"cm":false,"witness":{"face":[],"degree":0}})");
    CHECK(cm_to_json(is_cohen_macaulay(cycle_graph(5))).dump() == R"({"cm":true,"witness":null})");
}

TEST_CASE("dump_json ends with a newline") { CHECK(dump_json(Json::array()).back() == '\n'); }
