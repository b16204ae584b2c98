#include "icx/ops.hpp"

#include <unordered_set>

#include "icx/error.hpp"

namespace icx {

namespace {

void escape_into(std::string& out, std::string_view s) {
    for (char c : s) {
        if (c == '\\' || c == '(' || c == ')' || c == '|') out.push_back('\\');
        out.push_back(c);
    }
}

}  // namespace

std::string ProductLabel::str() const {
    std::string out = "(";
    escape_into(out, origin);
    out.push_back('|');
    escape_into(out, inner);
    out.push_back(')');
    return out;
}

std::optional<ProductLabel> ProductLabel::parse(std::string_view text) {
    if (text.size() < 3 || text.front() != '(' || text.back() != ')') return std::nullopt;
    ProductLabel out;
    std::string* field = &out.origin;
    bool seen_bar = false;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
        char c = text[i];
        if (c == '\\') {
            if (i + 2 >= text.size()) return std::nullopt;
            field->push_back(text[++i]);
        } else if (c == '|') {
            if (seen_bar) return std::nullopt;
            seen_bar = true;
            field = &out.inner;
        } else if (c == '(' || c == ')') {
            return std::nullopt;
        } else {
            field->push_back(c);
        }
    }
    if (!seen_bar) return std::nullopt;
    return out;
}

GraphFamily::GraphFamily(Graph base, std::vector<FamilyMember> members)
    : base_(std::move(base)), members_(std::move(members)) {
    if (members_.size() != base_.order()) {
        throw InvalidInput("family must assign exactly one graph to each base vertex");
    }
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& m = members_[i];
        const auto& x = base_.label(static_cast<int>(i));
        if (m.graph.empty()) throw InvalidInput("member graph of base vertex '" + x + "' is empty");
        if (m.root && !m.graph.contains(*m.root)) {
            throw InvalidInput("root '" + *m.root + "' of base vertex '" + x + "' is not a vertex of its graph");
        }
    }
}

GraphFamily::GraphFamily(Graph base, const std::map<std::string, FamilyMember>& assign)
    : GraphFamily(
          [&] {
              for (const auto& [x, _] : assign) {
                  if (!base.contains(x)) throw InvalidInput("assignment for '" + x + "' which is not a base vertex");
              }
              return base;
          }(),
          [&] {
              std::vector<FamilyMember> ordered;
              for (const auto& x : base.vertices()) {
                  auto it = assign.find(x);
                  if (it == assign.end()) throw InvalidInput("base vertex '" + x + "' has no assigned graph");
                  ordered.push_back(it->second);
              }
              return ordered;
          }()) {}

GraphFamily GraphFamily::uniform(Graph base, const Graph& h, std::optional<std::string> root) {
    std::vector<FamilyMember> members(base.order(), FamilyMember{h, root});
    return GraphFamily(std::move(base), std::move(members));
}

namespace {

bool labels_collide(const Graph& g, const Graph& h) {
    for (const auto& l : h.vertices()) {
        if (g.contains(l)) return true;
    }
    return false;
}

// Places g then h side by side; returns the union graph and h's index offset.
std::pair<std::vector<std::string>, std::vector<std::pair<int, int>>> side_by_side(const Graph& g,
                                                                                    const Graph& h) {
    const bool clash = labels_collide(g, h);
    const Graph left = clash ? disjoint_relabel(g, "L") : g;
    const Graph right = clash ? disjoint_relabel(h, "R") : h;
    std::vector<std::string> labels = left.vertices();
    labels.insert(labels.end(), right.vertices().begin(), right.vertices().end());
    std::vector<std::pair<int, int>> edges = left.edges();
    const int off = static_cast<int>(left.order());
    for (auto [a, b] : right.edges()) edges.emplace_back(a + off, b + off);
    return {std::move(labels), std::move(edges)};
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
    auto [labels, edges] = side_by_side(g, h);
    return Graph::from_index_edges(std::move(labels), edges);
}

Graph join(const Graph& g, const Graph& h) {
    auto [labels, edges] = side_by_side(g, h);
    const int n = static_cast<int>(g.order());
    const int m = static_cast<int>(h.order());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) edges.emplace_back(i, n + j);
    }
    return Graph::from_index_edges(std::move(labels), edges);
}

Graph rooted_product(const GraphFamily& f) {
    const Graph& base = f.base();
    std::vector<std::string> labels = base.vertices();
    std::vector<std::pair<int, int>> edges = base.edges();
    for (int x = 0; x < static_cast<int>(base.order()); ++x) {
        const auto& m = f.member(x);
        if (!m.root) throw InvalidInput("rooted product needs a root for base vertex '" + base.label(x) + "'");
        const int root = m.graph.index_of(*m.root);
        std::vector<int> where(m.graph.order());
        for (int y = 0; y < static_cast<int>(m.graph.order()); ++y) {
            if (y == root) {
                where[static_cast<std::size_t>(y)] = x;
            } else {
                where[static_cast<std::size_t>(y)] = static_cast<int>(labels.size());
                labels.push_back(pair_label(base.label(x), m.graph.label(y)));
            }
        }
        for (auto [a, b] : m.graph.edges()) {
            edges.emplace_back(where[static_cast<std::size_t>(a)], where[static_cast<std::size_t>(b)]);
        }
    }
    return Graph::from_index_edges(std::move(labels), edges);
}

Graph corona(const GraphFamily& f) {
    const Graph& base = f.base();
    std::vector<std::string> labels = base.vertices();
    std::vector<std::pair<int, int>> edges = base.edges();
    for (int x = 0; x < static_cast<int>(base.order()); ++x) {
        const Graph& h = f.member(x).graph;
        const int off = static_cast<int>(labels.size());
        for (const auto& y : h.vertices()) labels.push_back(pair_label(base.label(x), y));
        for (auto [a, b] : h.edges()) edges.emplace_back(a + off, b + off);
        for (int y = 0; y < static_cast<int>(h.order()); ++y) edges.emplace_back(x, off + y);
    }
    return Graph::from_index_edges(std::move(labels), edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int n = static_cast<int>(g.order());
    const int m = static_cast<int>(h.order());
    std::vector<std::string> labels;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < m; ++v) labels.push_back(pair_label(g.label(u), h.label(v)));
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (auto [a, b] : h.edges()) edges.emplace_back(u * m + a, u * m + b);
    }
    for (auto [a, b] : g.edges()) {
        for (int v = 0; v < m; ++v) edges.emplace_back(a * m + v, b * m + v);
    }
    return Graph::from_index_edges(std::move(labels), edges);
}

Graph lexicographic_product(const GraphFamily& f) {
    const Graph& base = f.base();
    std::vector<std::string> labels;
    std::vector<int> offset;
    for (int x = 0; x < static_cast<int>(base.order()); ++x) {
        offset.push_back(static_cast<int>(labels.size()));
        for (const auto& y : f.member(x).graph.vertices()) labels.push_back(pair_label(base.label(x), y));
    }
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < static_cast<int>(base.order()); ++x) {
        for (auto [a, b] : f.member(x).graph.edges()) {
            edges.emplace_back(offset[static_cast<std::size_t>(x)] + a, offset[static_cast<std::size_t>(x)] + b);
        }
    }
    for (auto [x, z] : base.edges()) {
        const auto nx = static_cast<int>(f.member(x).graph.order());
        const auto nz = static_cast<int>(f.member(z).graph.order());
        for (int a = 0; a < nx; ++a) {
            for (int b = 0; b < nz; ++b) {
                edges.emplace_back(offset[static_cast<std::size_t>(x)] + a, offset[static_cast<std::size_t>(z)] + b);
            }
        }
    }
    return Graph::from_index_edges(std::move(labels), edges);
}

GraphFamily corona_as_rooted_family(const GraphFamily& f) {
    std::vector<FamilyMember> members;
    for (const auto& m : f.members()) {
        std::string apex = "*";
        while (m.graph.contains(apex)) apex += "*";
        std::vector<std::string> labels{apex};
        labels.insert(labels.end(), m.graph.vertices().begin(), m.graph.vertices().end());
        std::vector<std::pair<int, int>> edges;
        for (int y = 0; y < static_cast<int>(m.graph.order()); ++y) edges.emplace_back(0, y + 1);
        for (auto [a, b] : m.graph.edges()) edges.emplace_back(a + 1, b + 1);
        members.push_back({Graph::from_index_edges(std::move(labels), edges), apex});
    }
    return GraphFamily(f.base(), std::move(members));
}

}  // namespace icx
