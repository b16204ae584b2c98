#include "doctest.h"

#include <string>

#include "icx/error.hpp"
#include "icx/generate.hpp"
#include "icx/graph.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace icx;

namespace {

Graph c4() { return cycle_graph(4); }

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("build_graph accepts simple graphs") {
    const Graph k2 = build_graph({"a", "b"}, {{"a", "b"}});
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.adjacent(0, 1));

    const Graph g = c4();
    CHECK(g.vertices() == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(g.size() == 4);
}

TEST_CASE("build_graph rejects malformed input and names the offender") {
    CHECK(message_of([] { build_graph({"a"}, {{"a", "a"}}); }).find("'a'") != std::string::npos);
    CHECK(message_of([] { build_graph({"a", "a"}, {}); }).find("'a'") != std::string::npos);
    CHECK(message_of([] { build_graph({"a"}, {{"a", "zz"}}); }).find("'zz'") != std::string::npos);
    CHECK_THROWS_AS(build_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidInput);
    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i) many.push_back(std::to_string(i));
    CHECK_THROWS_AS(build_graph(many, {}), ResourceLimit);
}

TEST_CASE("neighborhoods") {
    const Graph g = c4();
    CHECK(neighborhood(g, "1", false) == VertexSet{"2", "4"});
    CHECK(neighborhood(g, "1", true) == VertexSet{"1", "2", "4"});
    CHECK(neighborhood(complete_graph(1), "1", false).empty());
    CHECK_THROWS_AS(neighborhood(g, "9", false), InvalidInput);
}

TEST_CASE("delete_vertices") {
    const Graph p = delete_vertices(c4(), {"1"});
    CHECK(p.vertices() == std::vector<std::string>{"2", "3", "4"});
    CHECK(p.size() == 2);
    CHECK(p.adjacent(0, 1));
    CHECK(p.adjacent(1, 2));

    const Graph c5 = cycle_graph(5);
    const Graph rest = delete_vertices(c5, neighborhood(c5, "1", true));
    CHECK(rest.vertices() == std::vector<std::string>{"3", "4"});
    CHECK(rest.size() == 1);

    CHECK(delete_vertices(c5, {}) == c5);
    CHECK_THROWS_AS(delete_vertices(c5, {"x"}), InvalidInput);
}

TEST_CASE("maximal independent sets of small graphs") {
    CHECK(maximal_independent_sets(cycle_graph(5)) ==
          std::vector<VertexSet>{{"1", "3"}, {"1", "4"}, {"2", "4"}, {"2", "5"}, {"3", "5"}});
    CHECK(maximal_independent_sets(path_graph(3)) == std::vector<VertexSet>{{"1", "3"}, {"2"}});
    CHECK(maximal_independent_sets(complete_graph(3)) == std::vector<VertexSet>{{"1"}, {"2"}, {"3"}});
    CHECK(maximal_independent_sets(discrete_graph(3)) == std::vector<VertexSet>{{"1", "2", "3"}});
    CHECK(maximal_independent_sets(Graph{}) == std::vector<VertexSet>{{}});
}

TEST_CASE("independence and cover numbers") {
    CHECK(independence_number(cycle_graph(5)) == 2);
    CHECK(vertex_cover_number(cycle_graph(5)) == 3);
    CHECK(vertex_cover_number(complete_graph(4)) == 3);
    CHECK(vertex_cover_number(discrete_graph(4)) == 0);
    CHECK(is_vertex_cover(c4(), {"1", "3"}));
    CHECK_FALSE(is_vertex_cover(c4(), {"1", "2"}));
    CHECK(is_independent(c4(), {"1", "3"}));
    CHECK_FALSE(is_independent(c4(), {"1", "2"}));
}

TEST_CASE("complete and totally disconnected") {
    CHECK(is_complete(complete_graph(4)));
    CHECK(is_complete(complete_graph(1)));
    CHECK_FALSE(is_complete(c4()));
    CHECK(is_totally_disconnected(discrete_graph(3)));
    CHECK_FALSE(is_totally_disconnected(path_graph(2)));
}

TEST_CASE("girth and cycle subgraphs") {
    CHECK(girth(cycle_graph(7)) == 7u);
    CHECK(girth(complete_graph(4)) == 3u);
    CHECK_FALSE(girth(path_graph(5)).has_value());
    CHECK(has_cycle_subgraph(complete_graph(4), 3));
    CHECK(has_cycle_subgraph(complete_graph(4), 4));
    CHECK_FALSE(has_cycle_subgraph(cycle_graph(6), 5));
    CHECK(has_cycle_subgraph(cycle_graph(5), 5));
    CHECK_THROWS_AS(has_cycle_subgraph(c4(), 2), InvalidInput);
}

TEST_CASE("chordality of named graphs") {
    CHECK(is_chordal(path_graph(6)));
    CHECK(is_chordal(star_graph(5)));
    CHECK(is_chordal(complete_graph(5)));
    CHECK_FALSE(is_chordal(c4()));
    CHECK_FALSE(is_chordal(cycle_graph(6)));
    CHECK(is_chordal(build_graph({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"1", "3"}})));
}

TEST_CASE("disjoint_relabel prefixes every label") {
    const Graph g = disjoint_relabel(path_graph(2), "L");
    CHECK(g.vertices() == std::vector<std::string>{"L.1", "L.2"});
    CHECK(g.size() == 1);
}

TEST_CASE("maximal independent sets agree with subset filtering") {
    std::vector<Graph> graphs = all_graphs_between(0, 5);
    for (auto& g : testing::random_graphs(11, 60, 6, 12)) graphs.push_back(std::move(g));
    for (const auto& g : graphs) {
        std::vector<oracle::Set> got;
        for (auto m : maximal_independent_masks(g, g.all())) got.push_back(testing::to_set(m));
        CHECK(testing::sorted(got) == testing::sorted(oracle::maximal_independent_sets(g)));
    }
}

TEST_CASE("maximal independent sets are listed lexicographically and are maximal") {
    for (const auto& g : testing::random_graphs(5, 40, 1, 10)) {
        const auto sets = maximal_independent_sets(g);
        for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
            CHECK(lex_less(g.mask_of(sets[i]), g.mask_of(sets[i + 1])));
        }
        for (const auto& s : sets) {
            CHECK(is_independent(g, s));
            const Graph rest = delete_vertices(g, s);
            for (const auto& v : rest.vertices()) {
                VertexSet t = s;
                t.push_back(v);
                CHECK_FALSE(is_independent(g, t));
            }
        }
    }
}

TEST_CASE("independence number plus cover number is the order") {
    for (const auto& g : all_graphs_between(0, 5)) {
        CHECK(independence_number(g) + vertex_cover_number(g) == g.order());
    }
}

TEST_CASE("removing a closed neighbourhood leaves the induced subgraph") {
    for (const auto& g : all_graphs(5)) {
        for (const auto& x : g.vertices()) {
            const Graph h = delete_vertices(g, neighborhood(g, x, true));
            for (const auto& [u, v] : h.label_edges()) CHECK(g.adjacent(g.index_of(u), g.index_of(v)));
            for (std::size_t i = 0; i < h.order(); ++i) {
                for (std::size_t j = i + 1; j < h.order(); ++j) {
                    const bool in_g = g.adjacent(g.index_of(h.label(static_cast<int>(i))),
                                                 g.index_of(h.label(static_cast<int>(j))));
                    CHECK(in_g == h.adjacent(static_cast<int>(i), static_cast<int>(j)));
                }
            }
        }
    }
}

TEST_CASE("chordality agrees with the induced-cycle oracle") {
    for (const auto& g : all_graphs_between(0, 6)) CHECK(is_chordal(g) == oracle::chordal(g));
}

TEST_CASE("cycle subgraphs and girth agree with the sequence oracle") {
    for (const auto& g : all_graphs_between(3, 5)) {
        bool any = false;
        for (std::size_t n = 3; n <= g.order(); ++n) {
            const bool expect = oracle::has_cycle(g, static_cast<int>(n));
            CHECK(has_cycle_subgraph(g, n) == expect);
            if (expect && !any) {
                CHECK(girth(g) == n);
                any = true;
            }
        }
        if (!any) CHECK_FALSE(girth(g).has_value());
    }
}
