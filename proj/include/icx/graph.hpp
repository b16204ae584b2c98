#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "icx/bits.hpp"

namespace icx {

/// Vertex labels listed in the ambient order of their graph.
using VertexSet = std::vector<std::string>;

using LabelEdge = std::pair<std::string, std::string>;

/**
 * Labeled simple graph.
 *
 * Vertices keep their insertion order, which fixes every tie-break in the
 * library (facet order, candidate order, witness choice). Adjacency is
 * stored as one bitmask per vertex, so a graph holds at most 64 vertices.
 * Edges also remember their insertion order so that files round-trip.
 */
class Graph {
public:
    Graph() = default;

    /// Throws InvalidInput on duplicate labels, loops, unknown endpoints or
    /// repeated edges, and ResourceLimit above 64 vertices.
    Graph(std::vector<std::string> vertices, const std::vector<LabelEdge>& edges);

    /// Builds from index pairs; same validation as the label constructor.
    static Graph from_index_edges(std::vector<std::string> vertices,
                                  const std::vector<std::pair<int, int>>& edges);

    std::size_t order() const { return labels_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return labels_.empty(); }

    const std::vector<std::string>& vertices() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

    /// Edges as index pairs, in insertion order with their original orientation.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<LabelEdge> label_edges() const;

    std::optional<int> find(std::string_view label) const;
    bool contains(std::string_view label) const { return find(label).has_value(); }
    /// Throws InvalidInput naming the label when absent.
    int index_of(std::string_view label) const;

    VertexMask all() const { return low_bits(static_cast<int>(order())); }
    VertexMask adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::vector<VertexMask>& adjacency() const { return adj_; }
    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0; }

    VertexMask mask_of(const VertexSet& labels) const;
    VertexSet labels_of(VertexMask m) const;

    /// Induced subgraph on `keep`; vertex and edge order inherited.
    Graph induced(VertexMask keep) const;

    /// Same vertex list in the same order and the same edge set.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<VertexMask> adj_;
    std::vector<std::pair<int, int>> edges_;
};

Graph build_graph(std::vector<std::string> vertices, const std::vector<LabelEdge>& edges);

VertexSet neighborhood(const Graph& g, std::string_view x, bool closed);
Graph delete_vertices(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// All inclusion-maximal independent sets, lexicographic in ambient order.
/// The 0-vertex graph yields the single empty set.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Mask form of the above restricted to the induced subgraph on `within`.
std::vector<VertexMask> maximal_independent_masks(const Graph& g, VertexMask within);

std::size_t independence_number(const Graph& g);
std::size_t vertex_cover_number(const Graph& g);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

bool is_complete(const Graph& g);
bool is_totally_disconnected(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Whether g contains an n-cycle as a (not necessarily induced) subgraph.
/// Throws InvalidInput for n < 3.
bool has_cycle_subgraph(const Graph& g, std::size_t n);

/// Lex-BFS ordering followed by perfect-elimination verification.
bool is_chordal(const Graph& g);

/// Copy of g with every label prefixed by "tag.".
Graph disjoint_relabel(const Graph& g, std::string_view tag);

// ---------------------------------------------------------------------------
// Mask-level primitives shared by the decision procedures.

/// Neighbours of v inside `within`.
inline VertexMask neighbors_in(const Graph& g, int v, VertexMask within) {
    return g.adjacency(v) & within;
}

/// True when no two vertices of `s` are adjacent.
bool independent_mask(const Graph& g, VertexMask s);

/// True when the induced subgraph on `within` has no edge.
bool edgeless_within(const Graph& g, VertexMask within);

/**
 * Enumerates the maximal independent sets of g restricted to `within`
 * (Bron-Kerbosch on the complement with Tomita pivoting). The visitor
 * returns false to stop early; the function returns false if stopped.
 * Visit order is unspecified.
 */
template <class Visitor>
bool for_each_maximal_independent(const Graph& g, VertexMask within, Visitor&& visit);

namespace detail {

template <class Visitor>
bool mis_recurse(const std::vector<VertexMask>& adj, VertexMask r, VertexMask p, VertexMask x,
                 Visitor& visit) {
    if (!p && !x) return visit(r);
    if (!p) return true;
    // Pivot minimising the number of branches P ∩ N[u].
    VertexMask cand = p | x;
    int best = -1;
    int best_count = 65;
    for_each_bit(cand, [&](int u) {
        int c = popcount(p & (adj[static_cast<std::size_t>(u)] | bit(u)));
        if (c < best_count) {
            best_count = c;
            best = u;
        }
    });
    VertexMask branches = p & (adj[static_cast<std::size_t>(best)] | bit(best));
    while (branches) {
        int v = lowest(branches);
        branches &= branches - 1;
        VertexMask closed = adj[static_cast<std::size_t>(v)] | bit(v);
        if (!mis_recurse(adj, r | bit(v), p & ~closed, x & ~closed, visit)) return false;
        p &= ~bit(v);
        x |= bit(v);
    }
    return true;
}

}  // namespace detail

template <class Visitor>
bool for_each_maximal_independent(const Graph& g, VertexMask within, Visitor&& visit) {
    return detail::mis_recurse(g.adjacency(), VertexMask{0}, within, VertexMask{0}, visit);
}

}  // namespace icx
