#include "icx/generate.hpp"

#include <utility>

#include "icx/error.hpp"

namespace icx {

namespace {

std::vector<std::string> numbered(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidInput(what);
}

void require_order(int n, int lo, const char* kind) {
    require(n >= lo && n <= static_cast<int>(kMaxVertices),
            std::string(kind) + ": n must lie in [" + std::to_string(lo) + ", 64], got " + std::to_string(n));
}

}  // namespace

GeneratorKind parse_generator_kind(const std::string& name) {
    static const std::pair<const char*, GeneratorKind> table[] = {
        {"cycle", GeneratorKind::Cycle},         {"path", GeneratorKind::Path},
        {"complete", GeneratorKind::Complete},   {"star", GeneratorKind::Star},
        {"discrete", GeneratorKind::Discrete},   {"all-graphs", GeneratorKind::AllGraphs},
        {"gnp", GeneratorKind::Gnp},             {"chordal-random", GeneratorKind::ChordalRandom},
    };
    for (const auto& [text, kind] : table) {
        if (name == text) return kind;
    }
    throw InvalidInput("unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::Cycle: return "cycle";
        case GeneratorKind::Path: return "path";
        case GeneratorKind::Complete: return "complete";
        case GeneratorKind::Star: return "star";
        case GeneratorKind::Discrete: return "discrete";
        case GeneratorKind::AllGraphs: return "all-graphs";
        case GeneratorKind::Gnp: return "gnp";
        case GeneratorKind::ChordalRandom: return "chordal-random";
    }
    return "unknown";
}

Graph cycle_graph(int n) {
    require_order(n, 3, "cycle");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_index_edges(numbered(n), edges);
}

Graph path_graph(int n) {
    require_order(n, 0, "path");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_index_edges(numbered(n), edges);
}

Graph complete_graph(int n) {
    require_order(n, 0, "complete");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph::from_index_edges(numbered(n), edges);
}

Graph star_graph(int n) {
    require_order(n, 1, "star");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_index_edges(numbered(n), edges);
}

Graph discrete_graph(int n) {
    require_order(n, 0, "discrete");
    return Graph::from_index_edges(numbered(n), {});
}

std::vector<Graph> all_graphs(int n, int cap) {
    require(n >= 0 && n <= cap, "all-graphs: n must lie in [0, " + std::to_string(cap) + "], got " + std::to_string(n));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    const auto labels = numbered(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Graph> out;
    out.reserve(total);
    for (std::uint64_t s = 0; s < total; ++s) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if (s >> e & 1) edges.push_back(pairs[e]);
        }
        out.push_back(Graph::from_index_edges(labels, edges));
    }
    return out;
}

std::vector<Graph> all_graphs_between(int lo, int hi, int cap) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n) {
        auto part = all_graphs(n, cap);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

Graph random_gnp(int n, double p, Rng& rng) {
    require_order(n, 0, "gnp");
    require(p >= 0.0 && p <= 1.0, "gnp: p must lie in [0, 1]");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.chance(p)) edges.emplace_back(i, j);
        }
    }
    return Graph::from_index_edges(numbered(n), edges);
}

Graph random_chordal(int n, Rng& rng) {
    require_order(n, 0, "chordal-random");
    std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        // Seed with a random vertex, then admit each common neighbour by coin flip.
        VertexMask clique = bit(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
        VertexMask common = adj[static_cast<std::size_t>(lowest(clique))];
        for (int w = 0; w < v; ++w) {
            if ((common & bit(w)) && rng.chance(0.5)) {
                clique |= bit(w);
                common &= adj[static_cast<std::size_t>(w)];
            }
        }
        for_each_bit(clique, [&](int u) {
            edges.emplace_back(u, v);
            adj[static_cast<std::size_t>(u)] |= bit(v);
            adj[static_cast<std::size_t>(v)] |= bit(u);
        });
    }
    return Graph::from_index_edges(numbered(n), edges);
}

std::vector<Graph> generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::Cycle: return {cycle_graph(spec.n)};
        case GeneratorKind::Path: return {path_graph(spec.n)};
        case GeneratorKind::Complete: return {complete_graph(spec.n)};
        case GeneratorKind::Star: return {star_graph(spec.n)};
        case GeneratorKind::Discrete: return {discrete_graph(spec.n)};
        case GeneratorKind::AllGraphs: return all_graphs(spec.n, spec.cap);
        case GeneratorKind::Gnp:
        case GeneratorKind::ChordalRandom: break;
    }
    require(spec.count >= 0, "count must be non-negative");
    const int lo = spec.min_n > 0 ? spec.min_n : spec.n;
    require(lo <= spec.n, "min_n must not exceed n");
    Rng rng(spec.seed);
    std::vector<Graph> out;
    for (int i = 0; i < spec.count; ++i) {
        const int n = rng.between(lo, spec.n);
        out.push_back(spec.kind == GeneratorKind::Gnp ? random_gnp(n, spec.p, rng) : random_chordal(n, rng));
    }
    return out;
}

}  // namespace icx
