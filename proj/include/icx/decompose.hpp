#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "icx/graph.hpp"

namespace icx {

/**
 * Certificate of vertex decomposability: either a totally disconnected leaf,
 * or a shedding vertex together with certificates for G \ x and G \ N[x].
 * Subtrees are shared when the decision procedure reuses a memoised result.
 */
struct VDWitness {
    std::string vertex;  // empty for a leaf
    std::shared_ptr<const VDWitness> minus;
    std::shared_ptr<const VDWitness> minus_closed;

    bool is_leaf() const { return !minus; }
};

struct VDVerdict {
    bool decomposable = false;
    std::shared_ptr<const VDWitness> witness;  // set iff decomposable
};

/// Every maximal independent set of G \ N[x] extends by some neighbour of x.
bool is_shedding_vertex(const Graph& g, std::string_view x);

/// Mask form on the induced subgraph g[within]; x must lie in `within`.
bool is_shedding_within(const Graph& g, VertexMask within, int x);

VertexSet shedding_vertices(const Graph& g);

/// Memoised over vertex subsets of g; candidates in ambient order.
VDVerdict is_vertex_decomposable(const Graph& g);

/// Replays a certificate against g, re-checking every shedding claim.
bool validate_witness(const Graph& g, const VDWitness& w);

}  // namespace icx
