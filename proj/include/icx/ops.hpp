#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icx/graph.hpp"

namespace icx {

/**
 * Label of a vertex produced by a product-style operation: the base vertex it
 * came from and the vertex of the inner graph. Serialised as "(origin|inner)"
 * with '\\', '(', ')' and '|' escaped by a backslash, which keeps the encoding
 * injective under nesting.
 */
struct ProductLabel {
    std::string origin;
    std::string inner;

    std::string str() const;
    /// nullopt when `text` is not a well-formed serialised pair.
    static std::optional<ProductLabel> parse(std::string_view text);

    friend bool operator==(const ProductLabel&, const ProductLabel&) = default;
};

inline std::string pair_label(std::string_view origin, std::string_view inner) {
    return ProductLabel{std::string(origin), std::string(inner)}.str();
}

struct FamilyMember {
    Graph graph;
    std::optional<std::string> root;
};

/**
 * A base graph with one non-empty member graph per base vertex, optionally
 * rooted. Serves the rooted, corona and lexicographic products.
 */
class GraphFamily {
public:
    /// `members[i]` belongs to base vertex i. Throws InvalidInput on a size
    /// mismatch, an empty member, or a root that is not a member vertex.
    GraphFamily(Graph base, std::vector<FamilyMember> members);
    GraphFamily(Graph base, const std::map<std::string, FamilyMember>& assign);

    static GraphFamily uniform(Graph base, const Graph& h, std::optional<std::string> root = std::nullopt);

    const Graph& base() const { return base_; }
    const FamilyMember& member(int base_vertex) const { return members_.at(static_cast<std::size_t>(base_vertex)); }
    const FamilyMember& member(std::string_view base_label) const { return member(base_.index_of(base_label)); }
    const std::vector<FamilyMember>& members() const { return members_; }

private:
    Graph base_;
    std::vector<FamilyMember> members_;
};

/// Vertex sets are made disjoint first: colliding inputs become "L.*" / "R.*".
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Base vertex x is identified with the root of H_x; other member vertices
/// become "(x|y)". Throws InvalidInput when a member has no root.
Graph rooted_product(const GraphFamily& f);

/// Base plus every H_x (as "(x|y)"), with x joined to all of H_x.
Graph corona(const GraphFamily& f);

/// Vertices "(u|v)" in u-major order.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Vertices "(x|y)" for y in H_x; adjacent when x = x' and y ~ y' in H_x, or x ~ x' in the base.
Graph lexicographic_product(const GraphFamily& f);

/// The family {K_1 + H_x} rooted at the apex, whose rooted product is the corona.
GraphFamily corona_as_rooted_family(const GraphFamily& f);

}  // namespace icx
