#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icx/bits.hpp"
#include "icx/graph.hpp"

namespace icx {

/**
 * Simplicial complex given by its facets over an ordered ground set.
 *
 * Facets are stored as masks over the ground order, kept as an antichain and
 * sorted lexicographically. The complex {∅} is represented by the single
 * empty facet; a complex with no facet at all is rejected.
 */
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> ground, std::vector<VertexMask> facets);

    static SimplicialComplex from_labels(std::vector<std::string> ground,
                                         const std::vector<VertexSet>& facets);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<VertexMask>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    VertexSet facet_labels(std::size_t i) const;
    VertexSet labels_of(VertexMask m) const;
    VertexMask mask_of(const VertexSet& labels) const;

    /// Largest facet size minus one; -1 for {∅}.
    int dimension() const;
    bool contains_face(VertexMask face) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> ground_;
    std::vector<VertexMask> facets_;
};

/// A claimed shelling: positions into a complex's facet list.
struct ShellingOrder {
    std::vector<std::size_t> order;
    friend bool operator==(const ShellingOrder&, const ShellingOrder&) = default;
};

struct ShellingVerdict {
    bool accepted = false;
    /// Least violating pair (i, j), 1-based positions in the order with i < j;
    /// least means smallest j, then smallest i.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

SimplicialComplex independence_complex(const Graph& g);

bool is_pure(const SimplicialComplex& c);
bool is_unmixed(const Graph& g);

/// Throws InvalidInput when `ord` is not a permutation of the facet list.
ShellingVerdict verify_shelling(const SimplicialComplex& c, const ShellingOrder& ord);

/// Vertices v with candidate \ F = {v} for some placed facet F.
VertexMask single_step_vertices(std::span<const VertexMask> placed, VertexMask candidate);

/// Whether `candidate` may follow `placed` in a shelling.
bool can_append(std::span<const VertexMask> placed, VertexMask candidate);

/// Decides whether `candidate` may be appended after the placed facets.
using AppendRule = std::function<bool(std::span<const VertexMask> placed, VertexMask candidate)>;

struct SearchLimits {
    std::size_t facet_cap = 5000;
    /// Upper bound on visited search nodes; 0 disables it.
    std::size_t node_cap = 0;
};

enum class FacetSizes { Any, NonIncreasing };

/**
 * Complete backtracking over facet orders. A facet joins the order only if
 * `rule` accepts it against the facets already placed; failed placed-sets are
 * memoised. With FacetSizes::NonIncreasing only orders that never place a
 * facet before a larger one are explored. Returns the lexicographically least
 * accepted order under the facet list order. Throws ResourceLimit past either
 * cap.
 */
std::optional<ShellingOrder> search_order(const SimplicialComplex& c, const AppendRule& rule,
                                          SearchLimits limits = {}, FacetSizes sizes = FacetSizes::Any);

/// Least shelling among orders with non-increasing facet sizes.
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c, SearchLimits limits = {});

bool is_shellable(const Graph& g, SearchLimits limits = {});

}  // namespace icx
