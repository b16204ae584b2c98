#include "doctest.h"

#include "icx/complex.hpp"
#include "icx/error.hpp"
#include "icx/generate.hpp"
#include "icx/homology.hpp"
#include "icx/ops.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace icx;

namespace {

std::vector<std::size_t> betti(const Graph& g) { return reduced_betti(independence_complex(g)).entries; }

/// g with one extra vertex joined to nothing, so that its complex is a cone.
Graph with_isolated(const Graph& g) {
    std::vector<std::string> vs = g.vertices();
    vs.push_back("apex");
    return Graph(vs, g.label_edges());
}

}  // namespace

TEST_CASE("links in the five-cycle complex") {
    const auto c = independence_complex(cycle_graph(5));
    const auto l = link(c, VertexSet{"1"});
    CHECK(l.facet_count() == 2);
    CHECK(l.facet_labels(0) == VertexSet{"3"});
    CHECK(l.facet_labels(1) == VertexSet{"4"});
    CHECK(link(c, VertexSet{}) == c);
    const auto top = link(c, VertexSet{"1", "3"});
    CHECK(top.facet_count() == 1);
    CHECK(top.facets()[0] == 0);
    CHECK_THROWS_AS(link(c, VertexSet{"1", "2"}), InvalidInput);
}

TEST_CASE("reduced Betti numbers of small complexes") {
    CHECK(betti(cycle_graph(5)) == std::vector<std::size_t>{0, 0, 1});
    CHECK(betti(cycle_graph(4)) == std::vector<std::size_t>{0, 1, 0});
    CHECK(betti(complete_graph(1)) == std::vector<std::size_t>{0, 0});
    CHECK(betti(complete_graph(3)) == std::vector<std::size_t>{0, 2});
    CHECK(betti(Graph{}) == std::vector<std::size_t>{1});
    const auto b = reduced_betti(independence_complex(cycle_graph(5)));
    CHECK(b.at(1) == 1);
    CHECK(b.top_degree() == 1);
}

TEST_CASE("Cohen-Macaulay verdicts on named graphs") {
    CHECK(is_cohen_macaulay(cycle_graph(5)).cohen_macaulay);
    CHECK(is_cohen_macaulay(cycle_graph(3)).cohen_macaulay);
    const auto c4 = is_cohen_macaulay(cycle_graph(4));
    CHECK_FALSE(c4.cohen_macaulay);
    REQUIRE(c4.witness.has_value());
    CHECK(c4.witness->face.empty());
    CHECK(c4.witness->degree == 0);
    CHECK(is_cohen_macaulay(corona(GraphFamily::uniform(cycle_graph(4), complete_graph(1)))).cohen_macaulay);
    CHECK_FALSE(is_cohen_macaulay(path_graph(3)).cohen_macaulay);
}

TEST_CASE("Betti numbers agree with the rational oracle") {
    std::vector<Graph> graphs = all_graphs_between(0, 5);
    for (auto& g : testing::random_graphs(7, 80, 6, 9)) graphs.push_back(std::move(g));
    for (const auto& g : graphs) {
        const oracle::Adj a(g);
        CHECK(betti(g) == oracle::reduced_betti(a, testing::to_set(g.all())));
    }
}

TEST_CASE("Euler identity") {
    std::vector<Graph> graphs = all_graphs_between(0, 5);
    for (auto& g : testing::random_graphs(8, 80, 6, 11)) graphs.push_back(std::move(g));
    for (const auto& g : graphs) {
        const auto faces = all_faces(independence_complex(g));
        const auto b = reduced_betti(faces);
        long long alt = 0;
        for (int d = -1; d <= b.top_degree(); ++d) alt += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(b.at(d));
        CHECK(alt == reduced_euler_characteristic(faces));
    }
}

TEST_CASE("cones are acyclic") {
    for (const auto& g : all_graphs(4)) {
        for (auto x : betti(with_isolated(g))) CHECK(x == 0);
    }
}

TEST_CASE("faces by size agree between the complex and the graph") {
    for (const auto& g : testing::random_graphs(9, 40, 0, 9)) {
        CHECK(all_faces(independence_complex(g)) == independent_sets_by_size(g, g.all()));
    }
}

TEST_CASE("sparse boundary rank agrees with Bareiss and the rational oracle") {
    std::vector<Graph> graphs{cartesian_product(cycle_graph(5), cycle_graph(3)), cycle_graph(9),
                              discrete_graph(6), corona(GraphFamily::uniform(cycle_graph(4), path_graph(3)))};
    for (auto& g : testing::random_graphs(10, 10, 6, 10)) graphs.push_back(std::move(g));
    for (const auto& g : graphs) {
        const auto faces = all_faces(independence_complex(g));
        for (std::size_t k = 1; k < faces.size(); ++k) {
            const auto m = boundary_matrix(faces[k - 1], faces[k]);
            const std::size_t sparse = boundary_rank(faces[k - 1], faces[k]);
            CHECK(sparse == bareiss_rank(m));
            if (faces[k - 1].size() * faces[k].size() > 40000) continue;
            std::vector<std::vector<long long>> small;
            for (const auto& row : m) {
                std::vector<long long> r;
                for (const auto& x : row) r.push_back(static_cast<long long>(x));
                small.push_back(std::move(r));
            }
            CHECK(sparse == oracle::rational_rank(small));
        }
    }
}

TEST_CASE("Cohen-Macaulayness agrees with the Reisner oracle") {
    std::vector<Graph> graphs = all_graphs_between(0, 5);
    for (auto& g : testing::random_graphs(12, 60, 6, 8)) graphs.push_back(std::move(g));
    for (const auto& g : graphs) {
        const auto v = is_cohen_macaulay(g);
        CHECK(v.cohen_macaulay == oracle::cohen_macaulay(g));
        CHECK(v.witness.has_value() != v.cohen_macaulay);
        CHECK(is_cohen_macaulay(independence_complex(g)).cohen_macaulay == v.cohen_macaulay);
    }
}

TEST_CASE("a Cohen-Macaulay witness fails where it says") {
    for (const auto& g : all_graphs(5)) {
        const auto v = is_cohen_macaulay(g);
        if (v.cohen_macaulay) continue;
        const auto l = link(independence_complex(g), v.witness->face);
        const auto b = reduced_betti(l);
        CHECK(v.witness->degree < l.dimension());
        CHECK(b.at(v.witness->degree) != 0);
        for (int d = -1; d < v.witness->degree; ++d) CHECK(b.at(d) == 0);
    }
}

TEST_CASE("Cohen-Macaulay complexes are pure, and pure shellable ones are Cohen-Macaulay") {
    for (const auto& g : all_graphs(5)) {
        const bool cm = is_cohen_macaulay(g).cohen_macaulay;
        if (cm) CHECK(is_unmixed(g));
        if (is_unmixed(g) && is_shellable(g)) CHECK(cm);
    }
}

TEST_CASE("the face cap raises ResourceLimit") {
    CHECK_THROWS_AS(is_cohen_macaulay(discrete_graph(12), CMLimits{100}), ResourceLimit);
}
