#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icx/complex.hpp"
#include "icx/ops.hpp"

namespace icx {

/// Component shellings indexed by base vertex; entry x orders the facets of
/// the independence complex of H_x.
using ComponentShellings = std::vector<ShellingOrder>;

/// A shelling of every member via find_shelling, or nullopt if some member has none.
std::optional<ComponentShellings> find_component_shellings(const GraphFamily& f, SearchLimits limits = {});

/**
 * Sort key of a corona facet: for each base vertex off the facet's base part,
 * in increasing index, the pair (base index, rank of the chosen member facet
 * in that member's shelling).
 */
struct CoronaFacetKey {
    std::vector<std::pair<int, std::size_t>> complement;

    /// Elementwise comparison; when one key is a proper prefix of the other,
    /// the longer key sorts first.
    friend bool operator<(const CoronaFacetKey& a, const CoronaFacetKey& b);
    friend bool operator==(const CoronaFacetKey&, const CoronaFacetKey&) = default;
};

/**
 * Facet order of the corona built from component shellings. Indices refer to
 * the facet list of independence_complex(corona(f)). The result is not
 * re-verified here.
 *
 * Throws InvalidInput when a component order is not a shelling of its member.
 */
ShellingOrder corona_shelling(const GraphFamily& f, const ComponentShellings& components);

/// Keys of every corona facet, aligned with the facet list of the corona's complex.
std::vector<CoronaFacetKey> corona_facet_keys(const GraphFamily& f, const ComponentShellings& components);

/**
 * Checks that every pair F < F' of `ord` has u in F' \ F with F' \ F'' = {u}
 * for some F'' < F' and u in `complete_at`. Rejection names the first failing
 * pair as 1-based positions. Throws InvalidInput when `ord` is not a shelling.
 */
ShellingVerdict verify_shell2_hypothesis(const Graph& g, const ShellingOrder& ord, const VertexSet& complete_at);

/// Backtracking search for an order accepted by verify_shell2_hypothesis.
std::optional<ShellingOrder> find_shell2_shelling(const Graph& g, const VertexSet& complete_at,
                                                  SearchLimits limits = {});

/// Base vertices whose member graph is complete.
VertexSet complete_members(const GraphFamily& f);

/**
 * Facet order of the lexicographic product: by position of the associated
 * base facet in `base_order`, then lexicographically by member shelling
 * ranks along that base facet in increasing vertex order. Indices refer to
 * the facet list of independence_complex(lexicographic_product(f)).
 *
 * Throws InvalidInput when `base_order` fails the hypothesis for the
 * complete members or a component order is not a shelling.
 */
ShellingOrder lexicographic_shelling(const GraphFamily& f, const ShellingOrder& base_order,
                                     const ComponentShellings& components);

}  // namespace icx
