#include "doctest.h"

#include <set>

#include "icx/error.hpp"
#include "icx/generate.hpp"
#include "icx/graph.hpp"
#include "icx/io.hpp"
#include "oracle/oracle.hpp"

using namespace icx;

TEST_CASE("fixed generators") {
    const Graph c5 = cycle_graph(5);
    CHECK(c5.vertices() == std::vector<std::string>{"1", "2", "3", "4", "5"});
    CHECK(c5.size() == 5);
    CHECK(path_graph(4).size() == 3);
    CHECK(complete_graph(5).size() == 10);
    CHECK(star_graph(4).size() == 3);
    CHECK(discrete_graph(4).size() == 0);
    CHECK(path_graph(0).empty());
    CHECK_THROWS_AS(cycle_graph(2), InvalidInput);
    CHECK_THROWS_AS(star_graph(0), InvalidInput);
}

TEST_CASE("all-graphs enumerates every labeled graph once") {
    CHECK(all_graphs(3).size() == 8);
    for (int n = 0; n <= 6; ++n) {
        const auto graphs = all_graphs(n);
        CHECK(graphs.size() == std::size_t{1} << (n * (n - 1) / 2));
        std::set<std::string> seen;
        for (const auto& g : graphs) seen.insert(serialize_graph(g));
        CHECK(seen.size() == graphs.size());
    }
    CHECK(all_graphs(3)[0].size() == 0);
    CHECK(all_graphs(3)[7].size() == 3);
    CHECK(all_graphs_between(2, 3).size() == 10);
    CHECK_THROWS_AS(all_graphs(7), InvalidInput);
    CHECK(all_graphs(7, 7).size() == std::size_t{1} << 21);
}

TEST_CASE("random generators are seeded and reproducible") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::Gnp;
    spec.n = 9;
    spec.min_n = 3;
    spec.p = 0.4;
    spec.seed = 12;
    spec.count = 20;
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].order() >= 3);
        CHECK(a[i].order() <= 9);
    }
    spec.seed = 13;
    CHECK_FALSE(generate(spec) == a);

    Rng rng(5);
    CHECK(random_gnp(6, 0.0, rng).size() == 0);
    CHECK(random_gnp(6, 1.0, rng).size() == 15);
}

TEST_CASE("the Rng stream is fixed") {
    Rng rng(0);
    std::mt19937_64 reference(0);
    for (int i = 0; i < 5; ++i) CHECK(rng.next() == reference());
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const int k = rng.between(-2, 3);
        CHECK(k >= -2);
        CHECK(k <= 3);
    }
}

TEST_CASE("random chordal graphs are chordal") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::ChordalRandom;
    spec.n = 8;
    spec.seed = 7;
    const auto g = generate(spec);
    REQUIRE(g.size() == 1);
    CHECK(g[0].order() == 8);
    CHECK(is_chordal(g[0]));
    CHECK(oracle::chordal(g[0]));

    Rng rng(1);
    for (int i = 0; i < 200; ++i) CHECK(oracle::chordal(random_chordal(rng.between(1, 9), rng)));
}

TEST_CASE("generator parameters are validated") {
    CHECK(parse_generator_kind("chordal-random") == GeneratorKind::ChordalRandom);
    CHECK(to_string(GeneratorKind::AllGraphs) == "all-graphs");
    CHECK_THROWS_AS(parse_generator_kind("petersen"), InvalidInput);
    GeneratorSpec spec;
    spec.kind = GeneratorKind::Gnp;
    spec.n = 5;
    spec.p = 1.5;
    CHECK_THROWS_AS(generate(spec), InvalidInput);
    spec.p = 0.5;
    spec.count = 0;
    CHECK(generate(spec).empty());
    spec.count = -1;
    CHECK_THROWS_AS(generate(spec), InvalidInput);
    spec.count = 1;
    spec.min_n = 6;
    CHECK_THROWS_AS(generate(spec), InvalidInput);
    spec.kind = GeneratorKind::Cycle;
    spec.n = 1;
    CHECK_THROWS_AS(generate(spec), InvalidInput);
}
