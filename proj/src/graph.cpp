#include "icx/graph.hpp"

#include <algorithm>
#include <queue>

#include "icx/error.hpp"

namespace icx {

namespace {

void check_capacity(std::size_t n) {
    if (n > static_cast<std::size_t>(kMaxVertices)) {
        throw ResourceLimit("graph has " + std::to_string(n) + " vertices; at most " +
                            std::to_string(kMaxVertices) + " are supported");
    }
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices, const std::vector<LabelEdge>& edges) {
    check_capacity(vertices.size());
    labels_ = std::move(vertices);
    adj_.assign(labels_.size(), 0);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
            throw InvalidInput("duplicate vertex label '" + labels_[i] + "'");
        }
    }
    for (const auto& [a, b] : edges) {
        auto ia = find(a);
        auto ib = find(b);
        if (!ia) throw InvalidInput("edge endpoint '" + a + "' is not a vertex");
        if (!ib) throw InvalidInput("edge endpoint '" + b + "' is not a vertex");
        if (*ia == *ib) throw InvalidInput("loop edge at '" + a + "'");
        if (adjacent(*ia, *ib)) throw InvalidInput("duplicate edge {" + a + "," + b + "}");
        adj_[static_cast<std::size_t>(*ia)] |= bit(*ib);
        adj_[static_cast<std::size_t>(*ib)] |= bit(*ia);
        edges_.emplace_back(*ia, *ib);
    }
}

Graph Graph::from_index_edges(std::vector<std::string> vertices,
                              const std::vector<std::pair<int, int>>& edges) {
    std::vector<LabelEdge> named;
    named.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vertices.size() ||
            static_cast<std::size_t>(b) >= vertices.size()) {
            throw InvalidInput("edge index out of range");
        }
        named.emplace_back(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)]);
    }
    return Graph(std::move(vertices), named);
}

std::vector<LabelEdge> Graph::label_edges() const {
    std::vector<LabelEdge> out;
    out.reserve(edges_.size());
    for (auto [a, b] : edges_) out.emplace_back(label(a), label(b));
    return out;
}

std::optional<int> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) throw InvalidInput("unknown vertex '" + std::string(label) + "'");
    return *i;
}

VertexMask Graph::mask_of(const VertexSet& labels) const {
    VertexMask m = 0;
    for (const auto& l : labels) m |= bit(index_of(l));
    return m;
}

VertexSet Graph::labels_of(VertexMask m) const {
    VertexSet out;
    for_each_bit(m, [&](int v) { out.push_back(label(v)); });
    return out;
}

Graph Graph::induced(VertexMask keep) const {
    keep &= all();
    std::vector<std::string> labels;
    std::vector<int> remap(order(), -1);
    for_each_bit(keep, [&](int v) {
        remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(label(v));
    });
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : edges_) {
        if ((keep & bit(a)) && (keep & bit(b))) {
            kept.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
        }
    }
    return from_index_edges(std::move(labels), kept);
}

bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
}

Graph build_graph(std::vector<std::string> vertices, const std::vector<LabelEdge>& edges) {
    return Graph(std::move(vertices), edges);
}

VertexSet neighborhood(const Graph& g, std::string_view x, bool closed) {
    int v = g.index_of(x);
    VertexMask m = g.adjacency(v);
    if (closed) m |= bit(v);
    return g.labels_of(m);
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
    return g.induced(g.all() & ~g.mask_of(s));
}

bool independent_mask(const Graph& g, VertexMask s) {
    bool ok = true;
    for_each_bit(s, [&](int v) {
        if (g.adjacency(v) & s) ok = false;
    });
    return ok;
}

bool edgeless_within(const Graph& g, VertexMask within) { return independent_mask(g, within); }

bool is_independent(const Graph& g, const VertexSet& s) { return independent_mask(g, g.mask_of(s)); }

std::vector<VertexMask> maximal_independent_masks(const Graph& g, VertexMask within) {
    std::vector<VertexMask> out;
    for_each_maximal_independent(g, within & g.all(), [&](VertexMask m) {
        out.push_back(m);
        return true;
    });
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for (VertexMask m : maximal_independent_masks(g, g.all())) out.push_back(g.labels_of(m));
    return out;
}

std::size_t independence_number(const Graph& g) {
    int best = 0;
    for_each_maximal_independent(g, g.all(), [&](VertexMask m) {
        best = std::max(best, popcount(m));
        return true;
    });
    return static_cast<std::size_t>(best);
}

std::size_t vertex_cover_number(const Graph& g) { return g.order() - independence_number(g); }

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    VertexMask m = g.mask_of(s);
    for (auto [a, b] : g.edges()) {
        if (!(m & bit(a)) && !(m & bit(b))) return false;
    }
    return true;
}

bool is_complete(const Graph& g) {
    for (std::size_t v = 0; v < g.order(); ++v) {
        int i = static_cast<int>(v);
        if ((g.adjacency(i) | bit(i)) != g.all()) return false;
    }
    return true;
}

bool is_totally_disconnected(const Graph& g) { return g.size() == 0; }

std::optional<std::size_t> girth(const Graph& g) {
    const int n = static_cast<int>(g.order());
    std::size_t best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for_each_bit(g.adjacency(u), [&](int w) {
                auto uw = static_cast<std::size_t>(w);
                auto uu = static_cast<std::size_t>(u);
                if (dist[uw] < 0) {
                    dist[uw] = dist[uu] + 1;
                    parent[uw] = u;
                    q.push(w);
                } else if (parent[uu] != w) {
                    auto len = static_cast<std::size_t>(dist[uu] + dist[uw] + 1);
                    if (best == 0 || len < best) best = len;
                }
            });
        }
    }
    if (best == 0) return std::nullopt;
    return best;
}

namespace {

// Simple paths from `start` through vertices above it; closes when `remaining` hits 0.
bool extend_cycle(const Graph& g, int start, int at, VertexMask used, std::size_t remaining) {
    if (remaining == 0) return g.adjacent(at, start);
    VertexMask next = g.adjacency(at) & ~used & ~low_bits(start + 1);
    bool found = false;
    for_each_bit(next, [&](int w) {
        if (!found && extend_cycle(g, start, w, used | bit(w), remaining - 1)) found = true;
    });
    return found;
}

}  // namespace

bool has_cycle_subgraph(const Graph& g, std::size_t n) {
    if (n < 3) throw InvalidInput("cycle length must be at least 3");
    if (n > g.order()) return false;
    for (int s = 0; s < static_cast<int>(g.order()); ++s) {
        if (extend_cycle(g, s, s, bit(s), n - 1)) return true;
    }
    return false;
}

bool is_chordal(const Graph& g) {
    const auto n = g.order();
    // Lex-BFS: each unvisited vertex carries the (descending) visit numbers of
    // its visited neighbours; the lexicographically largest label goes next.
    std::vector<std::vector<int>> label(n);
    std::vector<int> visit_order;
    VertexMask unvisited = g.all();
    for (std::size_t step = 0; step < n; ++step) {
        int pick = -1;
        for_each_bit(unvisited, [&](int v) {
            if (pick < 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(pick)]) pick = v;
        });
        unvisited &= ~bit(pick);
        visit_order.push_back(pick);
        const int number = static_cast<int>(n - step);
        for_each_bit(g.adjacency(pick) & unvisited,
                     [&](int w) { label[static_cast<std::size_t>(w)].push_back(number); });
    }
    // Reverse visit order is a PEO iff each vertex's neighbours visited
    // before it form a clique.
    VertexMask earlier = 0;
    for (int v : visit_order) {
        VertexMask back = g.adjacency(v) & earlier;
        bool clique = true;
        for_each_bit(back, [&](int u) {
            if (((g.adjacency(u) | bit(u)) & back) != back) clique = false;
        });
        if (!clique) return false;
        earlier |= bit(v);
    }
    return true;
}

Graph disjoint_relabel(const Graph& g, std::string_view tag) {
    std::vector<std::string> labels;
    labels.reserve(g.order());
    for (const auto& l : g.vertices()) labels.push_back(std::string(tag) + "." + l);
    return Graph::from_index_edges(std::move(labels), g.edges());
}

}  // namespace icx
