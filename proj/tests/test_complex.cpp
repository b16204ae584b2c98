#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "icx/complex.hpp"
#include "icx/error.hpp"
#include "icx/generate.hpp"
#include "icx/ops.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace icx;

namespace {

std::vector<oracle::Set> in_order(const SimplicialComplex& c, const ShellingOrder& ord) {
    std::vector<oracle::Set> out;
    for (std::size_t i : ord.order) out.push_back(testing::to_set(c.facets()[i]));
    return out;
}

/// Least shelling with non-increasing facet sizes, by trying every permutation.
std::optional<ShellingOrder> least_sorted_shelling(const SimplicialComplex& c) {
    std::vector<std::size_t> p(c.facet_count());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool sorted = true;
        for (std::size_t k = 0; k + 1 < p.size(); ++k) {
            sorted = sorted && popcount(c.facets()[p[k]]) >= popcount(c.facets()[p[k + 1]]);
        }
        if (sorted && oracle::is_shelling(in_order(c, ShellingOrder{p}))) return ShellingOrder{p};
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

}  // namespace

TEST_CASE("independence complexes of small graphs") {
    const auto c = independence_complex(cycle_graph(4));
    CHECK(c.facet_count() == 2);
    CHECK(c.facet_labels(0) == VertexSet{"1", "3"});
    CHECK(c.facet_labels(1) == VertexSet{"2", "4"});
    CHECK(c.dimension() == 1);

    const auto k3 = independence_complex(complete_graph(3));
    CHECK(k3.facet_count() == 3);
    CHECK(k3.dimension() == 0);

    const auto empty = independence_complex(Graph{});
    CHECK(empty.facet_count() == 1);
    CHECK(empty.facets()[0] == 0);
    CHECK(empty.dimension() == -1);
}

TEST_CASE("complexes reject non-antichains and the void complex") {
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {0b01, 0b11}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex({"a"}, {}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex::from_labels({"a"}, {{"b"}}), InvalidInput);
}

TEST_CASE("purity") {
    CHECK(is_pure(independence_complex(cycle_graph(4))));
    CHECK_FALSE(is_pure(independence_complex(path_graph(3))));
    CHECK(is_unmixed(cartesian_product(complete_graph(3), complete_graph(2))));
    CHECK_FALSE(is_unmixed(star_graph(3)));
}

TEST_CASE("verify_shelling on the four-cycle names the first pair") {
    const auto c = independence_complex(cycle_graph(4));
    const auto v = verify_shelling(c, ShellingOrder{{0, 1}});
    CHECK_FALSE(v.accepted);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("verify_shelling accepts trivial orders and rejects non-permutations") {
    const auto k1 = independence_complex(complete_graph(1));
    CHECK(verify_shelling(k1, ShellingOrder{{0}}).accepted);
    const auto k3 = independence_complex(complete_graph(3));
    CHECK(verify_shelling(k3, ShellingOrder{{2, 0, 1}}).accepted);
    CHECK_THROWS_AS(verify_shelling(k3, ShellingOrder{{0, 0, 1}}), InvalidInput);
    CHECK_THROWS_AS(verify_shelling(k3, ShellingOrder{{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(verify_shelling(k3, ShellingOrder{{0, 1, 3}}), InvalidInput);
}

TEST_CASE("verify_shelling matches the literal condition on every permutation") {
    for (const auto& g : testing::random_graphs(3, 25, 3, 6)) {
        const auto c = independence_complex(g);
        if (c.facet_count() > 6) continue;
        std::vector<std::size_t> p(c.facet_count());
        std::iota(p.begin(), p.end(), 0);
        do {
            const ShellingOrder ord{p};
            const auto v = verify_shelling(c, ord);
            const auto sets = in_order(c, ord);
            CHECK(v.accepted == oracle::is_shelling(sets));
            if (!v.accepted) {
                // The witness is the first failing pair: earlier prefixes pass.
                const auto [i, j] = *v.witness;
                CHECK(i < j);
                CHECK(oracle::is_shelling({sets.begin(), sets.begin() + static_cast<long>(j - 1)}));
                CHECK_FALSE(oracle::is_shelling({sets.begin(), sets.begin() + static_cast<long>(j)}));
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("find_shelling on named graphs") {
    CHECK_FALSE(find_shelling(independence_complex(cycle_graph(4))).has_value());
    const auto c5 = independence_complex(cycle_graph(5));
    const auto ord = find_shelling(c5);
    REQUIRE(ord.has_value());
    CHECK(verify_shelling(c5, *ord).accepted);
    CHECK(find_shelling(independence_complex(complete_graph(4)))->order == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("find_shelling returns the least size-sorted shelling") {
    std::vector<Graph> graphs = all_graphs_between(1, 4);
    for (auto& g : testing::random_graphs(17, 40, 4, 7)) graphs.push_back(std::move(g));
    for (const auto& g : graphs) {
        const auto c = independence_complex(g);
        if (c.facet_count() > 7) continue;
        CHECK(find_shelling(c) == least_sorted_shelling(c));
    }
}

TEST_CASE("shellability agrees with the permutation oracle") {
    std::vector<Graph> graphs = all_graphs(5);
    for (auto& g : testing::random_graphs(23, 100, 4, 8)) graphs.push_back(std::move(g));
    for (const auto& g : graphs) {
        const auto c = independence_complex(g);
        if (c.facet_count() > 8) continue;
        const auto ord = find_shelling(c);
        CHECK(ord.has_value() == oracle::shellable_by_permutation(testing::facet_sets(c)));
        if (ord) CHECK(oracle::is_shelling(in_order(c, *ord)));
    }
}

TEST_CASE("the unrestricted search also finds the least order") {
    for (const auto& g : all_graphs(4)) {
        const auto c = independence_complex(g);
        const auto ord = search_order(c, can_append);
        REQUIRE(ord.has_value() == find_shelling(c).has_value());
        if (!ord) continue;
        std::vector<std::size_t> p(c.facet_count());
        std::iota(p.begin(), p.end(), 0);
        while (!oracle::is_shelling(in_order(c, ShellingOrder{p}))) std::next_permutation(p.begin(), p.end());
        CHECK(ord->order == p);
    }
}

TEST_CASE("cycles are shellable exactly at lengths three and five") {
    for (int n = 3; n <= 12; ++n) CHECK(is_shellable(cycle_graph(n)) == (n == 3 || n == 5));
}

TEST_CASE("chordal graphs are shellable") {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) CHECK(is_shellable(random_chordal(rng.between(1, 10), rng)));
}

TEST_CASE("search caps raise ResourceLimit") {
    const auto c = independence_complex(cycle_graph(5));
    CHECK_THROWS_AS(find_shelling(c, SearchLimits{2, 0}), ResourceLimit);
    const auto hard = independence_complex(cartesian_product(cycle_graph(4), cycle_graph(3)));
    CHECK_THROWS_AS(find_shelling(hard, SearchLimits{5000, 3}), ResourceLimit);
}

TEST_CASE("single-step vertices and can_append") {
    const std::vector<VertexMask> placed{0b0101};
    CHECK(single_step_vertices(placed, 0b0110) == 0b0010);
    CHECK(single_step_vertices(placed, 0b1010) == 0);
    CHECK(can_append(placed, 0b0110));
    CHECK_FALSE(can_append(placed, 0b1010));
}
