#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "icx/graph.hpp"

namespace icx {

/// Seeded source with fixed reduction rules, so streams are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

enum class GeneratorKind { Cycle, Path, Complete, Star, Discrete, AllGraphs, Gnp, ChordalRandom };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Cycle;
    int n = 0;
    /// Random kinds draw each graph's order uniformly from [min_n, n]; 0 means n.
    int min_n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    /// Number of graphs for the random kinds.
    int count = 1;
    /// Largest n accepted by all-graphs.
    int cap = 6;
};

GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

/// Throws InvalidInput on out-of-bounds parameters. Vertices are labeled "1".."n".
std::vector<Graph> generate(const GeneratorSpec& spec);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
Graph discrete_graph(int n);

/// Every labeled graph on n vertices, edge subsets in binary counting order.
std::vector<Graph> all_graphs(int n, int cap = 6);
/// all_graphs(k) for k = lo..hi, concatenated.
std::vector<Graph> all_graphs_between(int lo, int hi, int cap = 6);

Graph random_gnp(int n, double p, Rng& rng);
/// Grows a graph by attaching each new vertex to a random non-empty clique.
Graph random_chordal(int n, Rng& rng);

}  // namespace icx
