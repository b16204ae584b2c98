#include "icx/suite.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <utility>

#include "icx/constructions.hpp"
#include "icx/decompose.hpp"
#include "icx/error.hpp"
#include "icx/generate.hpp"
#include "icx/ops.hpp"
#include "icx/parallel.hpp"

namespace icx {

namespace {

using Shape = std::vector<VertexMask>;

class Run {
public:
    Run(const SuiteConfig& config, CheckRecord& record, std::mutex& observer_guard, std::uint64_t seed)
        : rng(seed), config_(config), record_(record), observer_guard_(observer_guard) {}

    Rng rng;

    bool vd(const Graph& g) {
        return cached(vd_, g, [&] { return is_vertex_decomposable(g).decomposable; });
    }

    bool shellable(const Graph& g) {
        return cached(shellable_, g, [&] {
            const SimplicialComplex c = independence_complex(g);
            observe(c);
            if (config_.mutate) {
                return search_order(c, [](std::span<const VertexMask>, VertexMask) { return true; }, config_.search)
                    .has_value();
            }
            return find_shelling(c, config_.search).has_value();
        });
    }

    bool cm(const Graph& g) {
        return cached(cm_, g, [&] {
            observe(independence_complex(g));
            return is_cohen_macaulay(g, config_.cm).cohen_macaulay;
        });
    }

    bool all_of(const GraphFamily& f, bool (Run::*pred)(const Graph&)) {
        for (const auto& m : f.members()) {
            if (!(this->*pred)(m.graph)) return false;
        }
        return true;
    }

    /// One instance of the declared family; a resource cap skips it.
    template <class Fn>
    void each(Fn&& fn) {
        ++record_.instances;
        try {
            fn();
        } catch (const ResourceLimit&) {
            ++record_.degraded;
        }
    }

    void fail(Json instance, Json witness) {
        ++record_.failure_count;
        if (record_.failures.size() < config_.failure_cap) {
            record_.failures.push_back({std::move(instance), std::move(witness)});
        }
    }

    void expect(bool ok, const Json& instance, Json witness) {
        if (!ok) fail(instance, std::move(witness));
    }

    const SuiteConfig& config() const { return config_; }

private:
    template <class Fn>
    bool cached(std::map<Shape, bool>& memo, const Graph& g, Fn&& compute) {
        if (auto it = memo.find(g.adjacency()); it != memo.end()) return it->second;
        const bool v = compute();
        memo.emplace(g.adjacency(), v);
        return v;
    }

    void observe(const SimplicialComplex& c) {
        if (!config_.observer) return;
        std::lock_guard lock(observer_guard_);
        config_.observer(c);
    }

    const SuiteConfig& config_;
    CheckRecord& record_;
    std::mutex& observer_guard_;
    std::map<Shape, bool> vd_, shellable_, cm_;
};

Json gj(const Graph& g) { return graph_to_json(g); }
Json fj(const GraphFamily& f) { return family_to_json(f); }

Graph random_graph(Rng& rng, int lo, int hi) { return random_gnp(rng.between(lo, hi), 0.5, rng); }

GraphFamily plain_family(const Graph& base, const std::vector<Graph>& members) {
    std::vector<FamilyMember> m;
    for (const auto& h : members) m.push_back({h, std::nullopt});
    return GraphFamily(base, std::move(m));
}

GraphFamily random_family(Rng& rng, const Graph& base, int lo, int hi) {
    std::vector<Graph> members;
    for (std::size_t i = 0; i < base.order(); ++i) members.push_back(random_graph(rng, lo, hi));
    return plain_family(base, members);
}

// Calls fn with every k-tuple of indices into a pool of the given size.
template <class Fn>
void for_each_tuple(std::size_t pool, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        fn(idx);
        std::size_t i = 0;
        while (i < k && ++idx[i] == pool) idx[i++] = 0;
        if (i == k) return;
    }
}

// Bases on 1..3 vertices with every assignment of members on 1..3 vertices.
template <class Fn>
void for_each_small_lex_family(Fn&& fn) {
    static const std::vector<Graph> pool = all_graphs_between(1, 3);
    for (const auto& base : pool) {
        for_each_tuple(pool.size(), base.order(), [&](const std::vector<std::size_t>& idx) {
            std::vector<Graph> members;
            for (auto i : idx) members.push_back(pool[i]);
            fn(plain_family(base, members));
        });
    }
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < static_cast<int>(g.order()); ++v) {
        if (!g.adjacency(v)) return true;
    }
    return false;
}

std::size_t girth_or_max(const Graph& g) { return girth(g).value_or(SIZE_MAX); }

Json labels_json(const VertexSet& s) { return Json(s); }

std::vector<int> member_offsets(const GraphFamily& f, int start) {
    std::vector<int> out;
    for (const auto& m : f.members()) {
        out.push_back(start);
        start += static_cast<int>(m.graph.order());
    }
    return out;
}

// ---------------------------------------------------------------- checks

void cycle_law(Run& run) {
    for (int n = 3; n <= 9; ++n) {
        run.each([&] {
            const Graph c = cycle_graph(n);
            const bool expected = n == 3 || n == 5;
            const bool v = run.vd(c);
            const bool s = run.shellable(c);
            run.expect(v == expected && s == expected, Json{{"n", n}},
                       Json{{"vd", v}, {"shellable", s}, {"expected", expected}});
        });
    }
}

void chordal_law(Run& run) {
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_chordal(run.rng.between(1, 8), run.rng);
        run.each([&] {
            const bool chordal = is_chordal(g);
            const bool v = run.vd(g);
            const bool s = run.shellable(g);
            run.expect(chordal && v && s, gj(g), Json{{"chordal", chordal}, {"vd", v}, {"shellable", s}});
        });
    }
}

void union_law(Run& run) {
    const auto left = all_graphs(4);
    const auto right = all_graphs(3);
    for (const auto& g : left) {
        for (const auto& h : right) {
            run.each([&] {
                const Graph u = disjoint_union(g, h);
                const bool vd_ok = run.vd(u) == (run.vd(g) && run.vd(h));
                const bool sh_ok = run.shellable(u) == (run.shellable(g) && run.shellable(h));
                run.expect(vd_ok && sh_ok, Json{{"g", gj(g)}, {"h", gj(h)}},
                           Json{{"vd_union", run.vd(u)}, {"vd_g", run.vd(g)}, {"vd_h", run.vd(h)},
                                {"shellable_union", run.shellable(u)}, {"shellable_g", run.shellable(g)},
                                {"shellable_h", run.shellable(h)}});
            });
        }
    }
}

void join_law(Run& run) {
    const auto pool = all_graphs(4);
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            run.each([&] {
                const Graph j = join(g, h);
                const bool some_complete = is_complete(g) || is_complete(h);
                const bool sh = run.shellable(j);
                const bool vd = run.vd(j);
                const bool sh_ok = sh == (run.shellable(g) && run.shellable(h) && some_complete);
                const bool vd_ok = vd == (run.vd(g) && run.vd(h) && some_complete);
                run.expect(sh_ok && vd_ok, Json{{"g", gj(g)}, {"h", gj(h)}},
                           Json{{"shellable_join", sh}, {"vd_join", vd}, {"some_complete", some_complete}});
            });
        }
    }
}

void join_cm(Run& run) {
    const auto pool = all_graphs(4);
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            run.each([&] {
                const Graph j = join(g, h);
                if (!run.cm(j)) return;
                const auto ag = independence_number(g);
                const auto ah = independence_number(h);
                const bool vd_ok = run.vd(j) == is_complete(j);
                run.expect(ag == ah && vd_ok, Json{{"g", gj(g)}, {"h", gj(h)}},
                           Json{{"alpha_g", ag}, {"alpha_h", ah}, {"vd_join", run.vd(j)}, {"complete", is_complete(j)}});
            });
        }
    }
}

void rooted_sufficient(Run& run) {
    for (int i = 0; i < 100; ++i) {
        const Graph base = random_graph(run.rng, 1, 5);
        std::vector<FamilyMember> members;
        for (std::size_t x = 0; x < base.order(); ++x) {
            while (true) {
                Graph h = random_graph(run.rng, 2, 4);
                const VertexSet shedding = shedding_vertices(h);
                if (shedding.empty() || !run.vd(h)) continue;
                std::string root = shedding[run.rng.below(shedding.size())];
                members.push_back({std::move(h), std::move(root)});
                break;
            }
        }
        const GraphFamily f(base, std::move(members));
        run.each([&] {
            const Graph p = rooted_product(f);
            run.expect(run.vd(p), fj(f), Json{{"vd_product", false}});
        });
    }
}

void rooted_necessary(Run& run) {
    for (int i = 0; i < 150; ++i) {
        const Graph base = random_graph(run.rng, 1, 4);
        std::vector<FamilyMember> members;
        for (std::size_t x = 0; x < base.order(); ++x) {
            Graph h = random_graph(run.rng, 1, 4);
            std::string root = h.label(static_cast<int>(run.rng.below(h.order())));
            members.push_back({std::move(h), std::move(root)});
        }
        const GraphFamily f(base, std::move(members));
        run.each([&] {
            const Graph p = rooted_product(f);
            if (!run.all_of(f, &Run::vd)) run.expect(!run.vd(p), fj(f), Json{{"vd_product", true}, {"all_members_vd", false}});
            if (!run.all_of(f, &Run::shellable)) {
                run.expect(!run.shellable(p), fj(f), Json{{"shellable_product", true}, {"all_members_shellable", false}});
            }
        });
    }
}

void rooted_fixture(Run& run) {
    run.each([&] {
        const Graph c4 = cycle_graph(4);
        const Graph p = rooted_product(GraphFamily::uniform(c4, complete_graph(2), "1"));
        const bool ok = run.vd(p) && run.shellable(p) && !run.vd(c4) && !run.shellable(c4);
        run.expect(ok, gj(p), Json{{"vd_product", run.vd(p)}, {"shellable_product", run.shellable(p)}, {"vd_base", run.vd(c4)}});
    });
}

void check_corona_shelling(Run& run, const GraphFamily& f) {
    auto components = find_component_shellings(f, run.config().search);
    if (!components) return;
    const ShellingOrder ord = corona_shelling(f, *components);
    const ShellingVerdict v = verify_shelling(independence_complex(corona(f)), ord);
    Json witness = Json{{"order", order_to_json(ord)}, {"accepted", v.accepted}};
    if (v.witness) witness["pair"] = Json::array({v.witness->first, v.witness->second});
    run.expect(v.accepted, fj(f), std::move(witness));
}

void corona_law(Run& run) {
    for (int i = 0; i < 100; ++i) {
        const GraphFamily f = random_family(run.rng, random_graph(run.rng, 1, 4), 1, 3);
        run.each([&] {
            const Graph c = corona(f);
            const bool sh_ok = run.shellable(c) == run.all_of(f, &Run::shellable);
            const bool vd_ok = run.vd(c) == run.all_of(f, &Run::vd);
            run.expect(sh_ok && vd_ok, fj(f), Json{{"shellable_corona", run.shellable(c)}, {"vd_corona", run.vd(c)}});
            check_corona_shelling(run, f);
        });
    }
}

void corona_law_wide(Run& run) {
    for (int i = 0; i < 100; ++i) {
        const GraphFamily f = random_family(run.rng, random_graph(run.rng, 1, 4), 1, 4);
        run.each([&] {
            const Graph c = corona(f);
            run.expect(run.vd(c) == run.all_of(f, &Run::vd), fj(f), Json{{"vd_corona", run.vd(c)}});
            check_corona_shelling(run, f);
        });
    }
}

void corona_cm(Run& run) {
    auto check = [&](const GraphFamily& f) {
        run.each([&] {
            bool all_complete = true;
            for (const auto& m : f.members()) all_complete = all_complete && is_complete(m.graph);
            const bool cm = run.cm(corona(f));
            run.expect(cm == all_complete, fj(f), Json{{"cm_corona", cm}, {"all_complete", all_complete}});
        });
    };
    for (int i = 0; i < 100; ++i) check(random_family(run.rng, random_graph(run.rng, 1, 4), 1, 3));
    const auto pool = all_graphs_between(1, 3);
    for (const auto& base : pool) {
        for (const auto& h : pool) check(GraphFamily::uniform(base, h));
    }
}

void corona_fixture(Run& run) {
    run.each([&] {
        const Graph c4 = cycle_graph(4);
        const Graph c = corona(GraphFamily::uniform(c4, complete_graph(1)));
        const bool ok = run.vd(c) && run.shellable(c) && run.cm(c) && !run.vd(c4) && !run.shellable(c4) && !run.cm(c4);
        run.expect(ok, gj(c), Json{{"vd", run.vd(c)}, {"shellable", run.shellable(c)}, {"cm", run.cm(c)}});
    });
}

void cartesian_km_k2(Run& run) {
    for (int m = 3; m <= 6; ++m) {
        run.each([&] {
            const Graph p = cartesian_product(complete_graph(m), complete_graph(2));
            const bool u = is_unmixed(p);
            run.expect(u && run.vd(p) && run.cm(p), Json{{"m", m}}, Json{{"unmixed", u}, {"vd", run.vd(p)}, {"cm", run.cm(p)}});
        });
    }
}

std::vector<Graph> triangle_free_without_isolated(int lo, int hi) {
    std::vector<Graph> out;
    for (auto& g : all_graphs_between(lo, hi)) {
        if (!has_isolated_vertex(g) && !has_cycle_subgraph(g, 3)) out.push_back(std::move(g));
    }
    return out;
}

void cartesian_c3_free(Run& run) {
    auto check = [&](const Graph& g, const Graph& h) {
        run.each([&] {
            const Graph p = cartesian_product(g, h);
            const VertexSet shedding = shedding_vertices(p);
            const bool v = run.vd(p);
            run.expect(shedding.empty() && !v, Json{{"g", gj(g)}, {"h", gj(h)}},
                       Json{{"shedding", labels_json(shedding)}, {"vd", v}});
        });
    };
    const auto pool = triangle_free_without_isolated(2, 4);
    for (const auto& g : pool) {
        for (const auto& h : pool) check(g, h);
    }
    auto sample = [&] {
        while (true) {
            Graph g = random_graph(run.rng, 2, 5);
            if (!has_isolated_vertex(g) && !has_cycle_subgraph(g, 3)) return g;
        }
    };
    for (int i = 0; i < 100; ++i) {
        const Graph g = sample();
        const Graph h = sample();
        check(g, h);
    }
}

void cartesian_girth(Run& run) {
    std::vector<Graph> pool;
    for (auto& g : all_graphs_between(2, 4)) {
        if (!has_isolated_vertex(g)) pool.push_back(std::move(g));
    }
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            run.each([&] {
                if (std::min(girth_or_max(g), girth_or_max(h)) == 3) return;
                const bool v = run.vd(cartesian_product(g, h));
                run.expect(!v, Json{{"g", gj(g)}, {"h", gj(h)}}, Json{{"vd", v}});
            });
        }
    }
}

void cartesian_shedding_factors(Run& run) {
    auto check = [&](const Graph& g, const Graph& h) {
        run.each([&] {
            const Graph p = cartesian_product(g, h);
            const int m = static_cast<int>(h.order());
            for_each_bit(p.all(), [&](int v) {
                if (!is_shedding_within(p, p.all(), v)) return;
                const int x = v / m;
                const int y = v % m;
                const bool ok = is_shedding_within(g, g.all(), x) || is_shedding_within(h, h.all(), y);
                run.expect(ok, Json{{"g", gj(g)}, {"h", gj(h)}}, Json{{"vertex", p.label(v)}});
            });
        });
    };
    const auto pool = all_graphs_between(1, 3);
    for (const auto& g : pool) {
        for (const auto& h : pool) check(g, h);
    }
    for (int m = 3; m <= 6; ++m) check(complete_graph(m), complete_graph(2));
    for (int n = 3; n <= 5; ++n) {
        for (int k = 3; k <= 5; ++k) check(cycle_graph(n), cycle_graph(k));
    }
    for (int i = 0; i < 100; ++i) {
        const Graph g = random_graph(run.rng, 1, 4);
        const Graph h = random_graph(run.rng, 1, 4);
        check(g, h);
    }
}

void cartesian_c3_c3(Run& run) {
    run.each([&] {
        const Graph p = cartesian_product(cycle_graph(3), cycle_graph(3));
        const VertexSet shedding = shedding_vertices(p);
        const bool ok = p.order() == 9 && p.size() == 18 && shedding.empty() && !run.vd(p);
        run.expect(ok, gj(p), Json{{"order", p.order()}, {"size", p.size()}, {"shedding", labels_json(shedding)}, {"vd", run.vd(p)}});
    });
}

void cartesian_cycles(Run& run) {
    for (int n = 3; n <= 5; ++n) {
        for (int m = 3; m <= 5; ++m) {
            run.each([&] {
                if (n == 3 || m == 3) return;
                const Graph p = cartesian_product(cycle_graph(n), cycle_graph(m));
                const bool v = run.vd(p);
                const bool c = run.cm(p);
                run.expect(!v && !c, Json{{"n", n}, {"m", m}}, Json{{"vd", v}, {"cm", c}});
            });
        }
    }
}

bool complete_set_covers(const GraphFamily& f) {
    return is_vertex_cover(f.base(), complete_members(f));
}

void lex_necessary(Run& run) {
    for_each_small_lex_family([&](const GraphFamily& f) {
        run.each([&] {
            const bool members = run.all_of(f, &Run::shellable);
            const bool cover = complete_set_covers(f);
            if (members && cover) return;
            const bool s = run.shellable(lexicographic_product(f));
            run.expect(!s, fj(f), Json{{"shellable_product", s}, {"all_members_shellable", members}, {"complete_members_cover", cover}});
        });
    });
}

void lex_discrete_shellable(Run& run) {
    for (int i = 0; i < 150; ++i) {
        const GraphFamily f = random_family(run.rng, discrete_graph(run.rng.between(1, 3)), 1, 4);
        run.each([&] {
            const bool s = run.shellable(lexicographic_product(f));
            const bool members = run.all_of(f, &Run::shellable);
            run.expect(s == members, fj(f), Json{{"shellable_product", s}, {"all_members_shellable", members}});
        });
    }
}

// Builds the lexicographic shelling for a base order and verifies it.
void check_lex_shelling(Run& run, const GraphFamily& f, const ShellingOrder& base_order) {
    auto components = find_component_shellings(f, run.config().search);
    if (!components) {
        run.fail(fj(f), Json{{"error", "a member is not shellable"}});
        return;
    }
    const ShellingOrder ord = lexicographic_shelling(f, base_order, *components);
    const ShellingVerdict v = verify_shelling(independence_complex(lexicographic_product(f)), ord);
    Json witness{{"base_order", order_to_json(base_order)}, {"accepted", v.accepted}};
    if (v.witness) witness["pair"] = Json::array({v.witness->first, v.witness->second});
    run.expect(v.accepted, fj(f), std::move(witness));
}

Graph pick_shellable(Run& run, int lo, int hi) {
    while (true) {
        Graph h = random_graph(run.rng, lo, hi);
        if (run.shellable(h)) return h;
    }
}

void lex_examples(Run& run) {
    // All members complete over a shellable base.
    for (const auto& base : all_graphs_between(1, 4)) {
        std::vector<Graph> members;
        for (std::size_t x = 0; x < base.order(); ++x) members.push_back(complete_graph(run.rng.between(1, 3)));
        const GraphFamily f = plain_family(base, members);
        run.each([&] {
            if (!run.shellable(base)) return;
            auto ord = find_shell2_shelling(base, base.vertices(), run.config().search);
            if (!ord) {
                run.fail(fj(f), Json{{"error", "no base order satisfies the hypothesis"}});
                return;
            }
            check_lex_shelling(run, f, *ord);
        });
    }
    // Complete base; all members but one complete.
    for (int i = 0; i < 40; ++i) {
        const Graph base = complete_graph(run.rng.between(1, 4));
        const auto odd = static_cast<std::size_t>(run.rng.below(base.order()));
        std::vector<Graph> members;
        for (std::size_t x = 0; x < base.order(); ++x) {
            members.push_back(x == odd ? pick_shellable(run, 1, 4) : complete_graph(run.rng.between(1, 3)));
        }
        const GraphFamily f = plain_family(base, members);
        run.each([&] {
            auto ord = find_shell2_shelling(base, complete_members(f), run.config().search);
            if (!ord) {
                run.fail(fj(f), Json{{"error", "no base order satisfies the hypothesis"}});
                return;
            }
            check_lex_shelling(run, f, *ord);
        });
    }
    // The five-vertex path-plus-point base with its stated order.
    const Graph g({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    const SimplicialComplex gc = independence_complex(g);
    ShellingOrder stated;
    for (const VertexSet& facet : {VertexSet{"a", "c", "e"}, VertexSet{"a", "d", "e"}, VertexSet{"b", "d", "e"}}) {
        const VertexMask m = gc.mask_of(facet);
        stated.order.push_back(static_cast<std::size_t>(
            std::find(gc.facets().begin(), gc.facets().end(), m) - gc.facets().begin()));
    }
    run.each([&] {
        const bool with_bd = verify_shell2_hypothesis(g, stated, {"b", "d"}).accepted;
        const bool with_none = verify_shell2_hypothesis(g, stated, {}).accepted;
        run.expect(with_bd && !with_none, gj(g), Json{{"accepted_with_b_d", with_bd}, {"accepted_with_none", with_none}});
    });
    auto example_c = [&](const Graph& ha, const Graph& hb, const Graph& hc, const Graph& hd, const Graph& he) {
        const GraphFamily f = plain_family(g, {ha, hb, hc, hd, he});
        run.each([&] { check_lex_shelling(run, f, stated); });
    };
    example_c(path_graph(3), complete_graph(2), path_graph(3), complete_graph(2), path_graph(3));
    for (int i = 0; i < 20; ++i) {
        const Graph ha = pick_shellable(run, 1, 4);
        const Graph hb = complete_graph(run.rng.between(1, 3));
        const Graph hc = pick_shellable(run, 1, 4);
        const Graph hd = complete_graph(run.rng.between(1, 3));
        const Graph he = pick_shellable(run, 1, 4);
        example_c(ha, hb, hc, hd, he);
    }
}

void lex_hypothesis_seeded(Run& run) {
    int found = 0;
    while (found < 50) {
        const Graph base = random_graph(run.rng, 2, 5);
        std::vector<Graph> members;
        for (std::size_t x = 0; x < base.order(); ++x) {
            members.push_back(run.rng.chance(0.5) ? complete_graph(run.rng.between(1, 3)) : pick_shellable(run, 1, 4));
        }
        const GraphFamily f = plain_family(base, members);
        auto ord = find_shell2_shelling(base, complete_members(f), run.config().search);
        if (!ord) continue;
        ++found;
        run.each([&] { check_lex_shelling(run, f, *ord); });
    }
}

void lex_cm_bound(Run& run, bool cover_reading) {
    std::vector<Graph> pool;
    for (auto& h : all_graphs_between(1, 3)) {
        if (run.cm(h) && run.shellable(h)) pool.push_back(std::move(h));
    }
    auto alpha = [&](const Graph& h) { return cover_reading ? vertex_cover_number(h) : independence_number(h); };
    for (int n = 1; n <= 3; ++n) {
        const Graph base = complete_graph(n);
        for_each_tuple(pool.size(), static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& idx) {
            std::size_t complete = 0;
            for (auto i : idx) complete += is_complete(pool[i]) ? 1 : 0;
            if (complete + 1 < static_cast<std::size_t>(n)) return;
            for (auto i : idx) {
                if (alpha(pool[i]) != alpha(pool[idx[0]])) return;
            }
            std::vector<Graph> members;
            for (auto i : idx) members.push_back(pool[i]);
            const GraphFamily f = plain_family(base, members);
            run.each([&] {
                const Graph p = lexicographic_product(f);
                const CMVerdict v = is_cohen_macaulay(p, run.config().cm);
                run.expect(v.cohen_macaulay, fj(f),
                           Json{{"cm_product", cm_to_json(v)}, {"unmixed_product", is_unmixed(p)}});
            });
        });
    }
}

void lex_vd_complete(Run& run) {
    for (const auto& base : all_graphs_between(1, 4)) {
        for_each_tuple(3, base.order(), [&](const std::vector<std::size_t>& idx) {
            std::vector<Graph> members;
            for (auto i : idx) members.push_back(complete_graph(static_cast<int>(i) + 1));
            const GraphFamily f = plain_family(base, members);
            run.each([&] {
                const bool p = run.vd(lexicographic_product(f));
                run.expect(p == run.vd(base), fj(f), Json{{"vd_product", p}, {"vd_base", run.vd(base)}});
            });
        });
    }
}

void lex_vd_discrete(Run& run) {
    auto check = [&](const GraphFamily& f) {
        run.each([&] {
            const bool p = run.vd(lexicographic_product(f));
            const bool members = run.all_of(f, &Run::vd);
            run.expect(p == members, fj(f), Json{{"vd_product", p}, {"all_members_vd", members}});
        });
    };
    const auto pool = all_graphs_between(1, 3);
    for (const auto& g : pool) {
        for (const auto& h : pool) check(plain_family(discrete_graph(2), {g, h}));
    }
    for (int i = 0; i < 150; ++i) check(random_family(run.rng, discrete_graph(run.rng.between(1, 3)), 1, 4));
}

// The exhaustive small families followed by seeded ones with larger members.
template <class Fn>
void lex_families(Run& run, Fn&& fn) {
    for_each_small_lex_family(fn);
    for (int i = 0; i < 200; ++i) fn(random_family(run.rng, random_graph(run.rng, 1, 3), 1, 4));
}

void lex_vd_some_complete(Run& run) {
    lex_families(run, [&](const GraphFamily& f) {
        run.each([&] {
            if (is_totally_disconnected(f.base()) || !complete_members(f).empty()) return;
            const bool p = run.vd(lexicographic_product(f));
            run.expect(!p, fj(f), Json{{"vd_product", p}, {"complete_members", Json::array()}});
        });
    });
}

void lex_vd_factors(Run& run) {
    lex_families(run, [&](const GraphFamily& f) {
        run.each([&] {
            const bool factors = run.vd(f.base()) && run.all_of(f, &Run::vd);
            if (factors) return;
            const bool p = run.vd(lexicographic_product(f));
            run.expect(!p, fj(f), Json{{"vd_product", p}, {"vd_base", run.vd(f.base())}, {"all_members_vd", run.all_of(f, &Run::vd)}});
        });
    });
}

void lex_cm_members(Run& run) {
    lex_families(run, [&](const GraphFamily& f) {
        run.each([&] {
            if (run.all_of(f, &Run::cm)) return;
            const Graph p = lexicographic_product(f);
            const bool both = run.vd(p) && run.cm(p);
            run.expect(!both, fj(f), Json{{"vd_product", run.vd(p)}, {"cm_product", run.cm(p)}, {"all_members_cm", false}});
        });
    });
}

void check_lex_shedding(Run& run, const GraphFamily& f) {
    const Graph p = lexicographic_product(f);
    const auto offset = member_offsets(f, 0);
    for (int x = 0; x < static_cast<int>(f.base().order()); ++x) {
        const Graph& h = f.member(x).graph;
        const bool c5_free = !(h.order() >= 5 && has_cycle_subgraph(h, 5));
        const bool x_sheds = is_shedding_within(f.base(), f.base().all(), x);
        for (int y = 0; y < static_cast<int>(h.order()); ++y) {
            const bool y_sheds = is_shedding_within(h, h.all(), y);
            const int v = offset[static_cast<std::size_t>(x)] + y;
            const bool product_sheds = is_shedding_within(p, p.all(), v);
            const bool a1 = !(c5_free && y_sheds) || product_sheds;
            const bool a2 = !(x_sheds && y_sheds) || product_sheds;
            const bool b = !product_sheds || h.order() == 1 || y_sheds;
            run.expect(a1 && a2 && b, fj(f),
                       Json{{"vertex", p.label(v)}, {"part_a1", a1}, {"part_a2", a2}, {"part_b", b}});
        }
    }
}

void lex_shedding(Run& run) {
    lex_families(run, [&](const GraphFamily& f) { run.each([&] { check_lex_shedding(run, f); }); });
    for (int i = 0; i < 100; ++i) {
        const GraphFamily f = random_family(run.rng, random_graph(run.rng, 1, 3), 1, 5);
        run.each([&] { check_lex_shedding(run, f); });
    }
}

void lex_fixtures(Run& run) {
    const Graph p3 = path_graph(3);
    const Graph square = lexicographic_product(GraphFamily::uniform(p3, p3));
    run.each([&] {
        const std::string xx = pair_label("2", "2");
        const bool sheds = is_shedding_vertex(square, xx);
        const Graph minus = delete_vertices(square, {xx});
        const bool v = run.vd(minus);
        run.expect(sheds && !v, gj(square), Json{{"shedding", sheds}, {"vd_after_deletion", v}});
    });
    run.each([&] {
        const Graph k = lexicographic_product(plain_family(complete_graph(2), {complete_graph(1), p3}));
        run.expect(run.vd(k), gj(k), Json{{"vd", run.vd(k)}});
    });
}

void homology_examples(Run& run) {
    auto check = [&](int n, std::vector<std::size_t> expected) {
        run.each([&] {
            const BettiVector b = reduced_betti(independence_complex(cycle_graph(n)));
            run.expect(b.entries == expected, Json{{"n", n}}, Json{{"betti", b.entries}});
        });
    };
    check(5, {0, 0, 1});
    check(4, {0, 1, 0});
}

void implication_chain(Run& run) {
    for (const auto& g : all_graphs(run.config().max_n, std::max(6, run.config().max_n))) {
        run.each([&] {
            const bool pure = is_unmixed(g);
            if (pure && !run.cm(g)) {
                run.expect(!run.shellable(g), gj(g), Json{{"pure", true}, {"shellable", true}, {"cm", false}});
            }
            if (!pure) run.expect(!run.cm(g), gj(g), Json{{"cm", true}, {"unmixed", false}});
            if (run.vd(g)) run.expect(run.shellable(g), gj(g), Json{{"vd", true}, {"shellable", false}});
        });
    }
}

struct CheckDef {
    const char* id;
    int criterion;
    const char* claim;
    const char* reading;
    const char* family;
    void (*body)(Run&);
};

const std::vector<CheckDef>& definitions() {
    static const std::vector<CheckDef> defs = {
        {"cycle-law", 1, "C_n is vertex decomposable, and shellable, exactly when n is 3 or 5", "n/a",
         "cycles n=3..9", cycle_law},
        {"chordal-law", 2, "chordal graphs are vertex decomposable and shellable", "n/a",
         "200 seeded chordal-random graphs on 1..8 vertices", chordal_law},
        {"union-law", 3, "G u H is vertex decomposable (shellable) iff both G and H are", "n/a",
         "all-graphs(4) x all-graphs(3)", union_law},
        {"join-law", 4, "G + H is vertex decomposable (shellable) iff both are and one of them is complete", "n/a",
         "all-graphs(4) x all-graphs(4)", join_law},
        {"join-cm", 4, "a Cohen-Macaulay join has alpha(G) = alpha(H) and is vertex decomposable iff complete",
         "independence", "all-graphs(4) x all-graphs(4), Cohen-Macaulay joins", join_cm},
        {"rooted-sufficient", 5, "rooted product is vertex decomposable when every H_x is and each root sheds in H_x",
         "n/a", "100 seeded: base gnp on 1..5, members gnp on 2..4 with a shedding root", rooted_sufficient},
        {"rooted-necessary", 5, "a vertex decomposable (shellable) rooted product has every H_x vertex decomposable (shellable)",
         "n/a", "150 seeded: base gnp on 1..4, members gnp on 1..4, random roots", rooted_necessary},
        {"rooted-fixture", 5, "C_4(K_2) is vertex decomposable and shellable while C_4 is neither", "n/a",
         "pinned fixture", rooted_fixture},
        {"corona-law", 6, "a corona is vertex decomposable (shellable) iff every H_x is; the key order shells it", "n/a",
         "100 seeded: base gnp on 1..4, members gnp on 1..3", corona_law},
        {"corona-law-wide", 6, "a corona is vertex decomposable iff every H_x is; the key order shells it", "n/a",
         "100 seeded: base gnp on 1..4, members gnp on 1..4", corona_law_wide},
        {"corona-cm", 6, "a corona is Cohen-Macaulay iff every H_x is complete", "n/a",
         "100 seeded (base 1..4, members 1..3) plus all-graphs(1..3) bases with uniform members from all-graphs(1..3)",
         corona_cm},
        {"corona-fixture", 6, "C_4 with one whisker per vertex is vertex decomposable, shellable and Cohen-Macaulay", "n/a",
         "pinned fixture", corona_fixture},
        {"cartesian-km-k2", 7, "K_m x K_2 is unmixed, vertex decomposable and Cohen-Macaulay", "n/a", "m=3..6",
         cartesian_km_k2},
        {"cartesian-c3-free", 7, "product of triangle-free graphs without isolated vertices has no shedding vertex",
         "n/a", "exhaustive pairs on 2..4 vertices plus 100 seeded pairs on 2..5", cartesian_c3_free},
        {"cartesian-girth", 7, "a vertex decomposable product of graphs without isolated vertices has a factor of girth 3",
         "n/a", "all pairs from all-graphs(2..4) without isolated vertices", cartesian_girth},
        {"cartesian-shedding-factors", 7, "a shedding vertex (x,y) of G x H has x shedding in G or y shedding in H", "n/a",
         "all-graphs(1..3) pairs, K_m x K_2, cycle pairs 3..5, 100 seeded pairs on 1..4", cartesian_shedding_factors},
        {"cartesian-c3-c3", 7, "C_3 x C_3 has 9 vertices, 18 edges, no shedding vertex and is not vertex decomposable",
         "n/a", "pinned fixture", cartesian_c3_c3},
        {"cartesian-cycles", 7, "C_n x C_m vertex decomposable or Cohen-Macaulay forces 3 in {n, m}", "n/a",
         "n, m = 3..5", cartesian_cycles},
        {"lex-necessary", 8, "a shellable lexicographic product has shellable members and complete members covering the base",
         "cover", "bases all-graphs(1..3) with every member tuple from all-graphs(1..3)", lex_necessary},
        {"lex-discrete-shellable", 8, "over a discrete base the product is shellable iff every member is", "n/a",
         "150 seeded: discrete base on 1..3, members gnp on 1..4", lex_discrete_shellable},
        {"lex-examples", 9, "the lexicographic shelling built from a hypothesis order is a shelling", "n/a",
         "complete members over all-graphs(1..4); complete bases with one free member; the a-e path example",
         lex_examples},
        {"lex-hypothesis-seeded", 9, "the lexicographic shelling built from a hypothesis order is a shelling", "n/a",
         "50 seeded hypothesis-satisfying instances, base gnp on 2..5", lex_hypothesis_seeded},
        {"lex-cm-independence", 9,
         "complete base, members Cohen-Macaulay and shellable, all but one complete, equal alpha: product is Cohen-Macaulay",
         "independence", "K_1..K_3 bases, members from all-graphs(1..3)",
         [](Run& r) { lex_cm_bound(r, false); }},
        {"lex-cm-cover", 9,
         "complete base, members Cohen-Macaulay and shellable, all but one complete, equal alpha: product is Cohen-Macaulay",
         "cover", "K_1..K_3 bases, members from all-graphs(1..3)", [](Run& r) { lex_cm_bound(r, true); }},
        {"lex-vd-complete", 10, "with every member complete the product is vertex decomposable iff the base is", "n/a",
         "bases all-graphs(1..4), members K_1..K_3 in every combination", lex_vd_complete},
        {"lex-vd-discrete", 10, "over a discrete base the product is vertex decomposable iff every member is", "n/a",
         "discrete base on 2 with members from all-graphs(1..3), plus 150 seeded on 1..3 with members on 1..4",
         lex_vd_discrete},
        {"lex-vd-some-complete", 10, "a vertex decomposable product over a non-discrete base has a complete member",
         "n/a", "small exhaustive families plus 200 seeded with members on 1..4", lex_vd_some_complete},
        {"lex-vd-factors", 10, "a vertex decomposable product has a vertex decomposable base and members", "n/a",
         "small exhaustive families plus 200 seeded with members on 1..4", lex_vd_factors},
        {"lex-cm-members", 10, "a vertex decomposable Cohen-Macaulay product has Cohen-Macaulay members", "n/a",
         "small exhaustive families plus 200 seeded with members on 1..4", lex_cm_members},
        {"lex-shedding", 10, "shedding vertices of lexicographic products, parts a1, a2 and b", "n/a",
         "small exhaustive families, 200 seeded with members on 1..4, 100 seeded with members on 1..5", lex_shedding},
        {"lex-fixtures", 10, "P_3[P_3] minus (2,2) is not vertex decomposable although (2,2) sheds; K_2[{K_1,P_3}] is",
         "n/a", "pinned fixtures", lex_fixtures},
        {"homology-examples", 12, "reduced Betti numbers of C_5 are (0,1) and of C_4 are (1,0)", "n/a",
         "C_5, C_4", homology_examples},
        {"implication-chain", 12, "pure shellable implies Cohen-Macaulay implies unmixed; vertex decomposable implies shellable",
         "n/a", "all-graphs(max_n)", implication_chain},
    };
    return defs;
}

std::uint64_t check_seed(std::uint64_t seed, std::string_view id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : id) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return seed ^ h;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed(); });
}

Json SuiteReport::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        Json failures = Json::array();
        for (const auto& f : c.failures) failures.push_back(Json{{"instance", f.instance}, {"witness", f.witness}});
        Json entry{{"id", c.id},
                   {"criterion", c.criterion},
                   {"claim", c.claim},
                   {"alpha_reading", c.reading},
                   {"family", c.family},
                   {"instances", c.instances},
                   {"degraded", c.degraded},
                   {"passed", c.passed()},
                   {"failure_count", c.failure_count},
                   {"failures", std::move(failures)}};
        if (c.seconds) entry["seconds"] = *c.seconds;
        checks_json.push_back(std::move(entry));
    }
    return Json{{"config",
                 {{"max_n", config.max_n},
                  {"seed", config.seed},
                  {"mutate", config.mutate},
                  {"search_facet_cap", config.search.facet_cap},
                  {"search_node_cap", config.search.node_cap},
                  {"cm_face_cap", config.cm.face_cap},
                  {"failure_cap", config.failure_cap}}},
                {"passed", passed()},
                {"checks", std::move(checks_json)}};
}

std::vector<CheckInfo> suite_checks() {
    std::vector<CheckInfo> out;
    for (const auto& d : definitions()) out.push_back({d.id, d.criterion});
    return out;
}

SuiteReport run_suite(const SuiteConfig& config) {
    std::vector<const CheckDef*> selected;
    for (const auto& d : definitions()) {
        if (config.only.empty() || std::find(config.only.begin(), config.only.end(), d.id) != config.only.end()) {
            selected.push_back(&d);
        }
    }
    for (const auto& id : config.only) {
        if (std::none_of(selected.begin(), selected.end(), [&](const CheckDef* d) { return id == d->id; })) {
            throw InvalidInput("unknown check '" + id + "'");
        }
    }
    SuiteReport report{config, std::vector<CheckRecord>(selected.size())};
    std::mutex observer_guard;
    parallel_for(selected.size(), [&](std::size_t i) {
        const CheckDef& d = *selected[i];
        CheckRecord& rec = report.checks[i];
        rec.id = d.id;
        rec.criterion = d.criterion;
        rec.claim = d.claim;
        rec.reading = d.reading;
        rec.family = d.family;
        const auto start = std::chrono::steady_clock::now();
        Run run(config, rec, observer_guard, check_seed(config.seed, d.id));
        d.body(run);
        if (config.record_timing) {
            rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    });
    return report;
}

std::map<std::string, Graph> pinned_fixtures() {
    const Graph c4 = cycle_graph(4);
    const Graph p3 = path_graph(3);
    const Graph p3p3 = lexicographic_product(GraphFamily::uniform(p3, p3));
    return {
        {"c4_rooted_k2", rooted_product(GraphFamily::uniform(c4, complete_graph(2), "1"))},
        {"c3_box_c3", cartesian_product(cycle_graph(3), cycle_graph(3))},
        {"p3_lex_p3_minus_22", delete_vertices(p3p3, {pair_label("2", "2")})},
        {"k2_lex_k1_p3", lexicographic_product(plain_family(complete_graph(2), {complete_graph(1), p3}))},
        {"c4_corona_k1", corona(GraphFamily::uniform(c4, complete_graph(1)))},
    };
}

}  // namespace icx
