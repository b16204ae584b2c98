#include "icx/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "icx/error.hpp"

namespace icx {

namespace {

// Rank of each facet of a member complex within its verified shelling.
class MemberRanks {
public:
    MemberRanks(const Graph& h, const ShellingOrder& ord, const std::string& owner) {
        SimplicialComplex c = independence_complex(h);
        ShellingVerdict v;
        try {
            v = verify_shelling(c, ord);
        } catch (const InvalidInput& e) {
            throw InvalidInput("component order for '" + owner + "': " + e.what());
        }
        if (!v.accepted) throw InvalidInput("component order for '" + owner + "' is not a shelling");
        for (std::size_t pos = 0; pos < ord.order.size(); ++pos) rank_.emplace(c.facets()[ord.order[pos]], pos);
    }

    std::size_t rank(VertexMask facet) const {
        auto it = rank_.find(facet);
        if (it == rank_.end()) throw std::logic_error("product facet does not restrict to a member facet");
        return it->second;
    }

private:
    std::unordered_map<VertexMask, std::size_t> rank_;
};

std::vector<MemberRanks> member_ranks(const GraphFamily& f, const ComponentShellings& components) {
    if (components.size() != f.base().order()) {
        throw InvalidInput("expected one component order per base vertex");
    }
    std::vector<MemberRanks> out;
    for (int x = 0; x < static_cast<int>(f.base().order()); ++x) {
        const Graph& h = f.member(x).graph;
        if (h.empty()) throw InvalidInput("member graph of '" + f.base().label(x) + "' is empty");
        out.emplace_back(h, components[static_cast<std::size_t>(x)], f.base().label(x));
    }
    return out;
}

// Sorts facet indices by their keys and rejects duplicate keys.
template <class Key>
ShellingOrder order_by_keys(const std::vector<Key>& keys) {
    ShellingOrder out;
    out.order.resize(keys.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::sort(out.order.begin(), out.order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (std::size_t i = 1; i < out.order.size(); ++i) {
        if (keys[out.order[i - 1]] == keys[out.order[i]]) {
            throw std::logic_error("two facets share a sort key");
        }
    }
    return out;
}

bool admissible(std::span<const VertexMask> placed, VertexMask candidate, VertexMask allowed) {
    if (placed.empty()) return true;
    const VertexMask steps = single_step_vertices(placed, candidate) & allowed;
    for (VertexMask f : placed) {
        if (!((candidate & ~f) & steps)) return false;
    }
    return true;
}

}  // namespace

std::optional<ComponentShellings> find_component_shellings(const GraphFamily& f, SearchLimits limits) {
    ComponentShellings out;
    for (const auto& m : f.members()) {
        auto ord = find_shelling(independence_complex(m.graph), limits);
        if (!ord) return std::nullopt;
        out.push_back(std::move(*ord));
    }
    return out;
}

bool operator<(const CoronaFacetKey& a, const CoronaFacetKey& b) {
    const std::size_t common = std::min(a.complement.size(), b.complement.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a.complement[i] != b.complement[i]) return a.complement[i] < b.complement[i];
    }
    return a.complement.size() > b.complement.size();
}

std::vector<CoronaFacetKey> corona_facet_keys(const GraphFamily& f, const ComponentShellings& components) {
    const auto ranks = member_ranks(f, components);
    const Graph& base = f.base();
    const int n = static_cast<int>(base.order());
    std::vector<int> offset;
    int next = n;
    for (int x = 0; x < n; ++x) {
        offset.push_back(next);
        next += static_cast<int>(f.member(x).graph.order());
    }
    const SimplicialComplex c = independence_complex(corona(f));
    std::vector<CoronaFacetKey> keys;
    keys.reserve(c.facet_count());
    for (VertexMask k : c.facets()) {
        CoronaFacetKey key;
        for (int x = 0; x < n; ++x) {
            if (k & bit(x)) continue;
            const auto hn = static_cast<int>(f.member(x).graph.order());
            const VertexMask part = (k >> offset[static_cast<std::size_t>(x)]) & low_bits(hn);
            key.complement.emplace_back(x, ranks[static_cast<std::size_t>(x)].rank(part));
        }
        keys.push_back(std::move(key));
    }
    return keys;
}

ShellingOrder corona_shelling(const GraphFamily& f, const ComponentShellings& components) {
    return order_by_keys(corona_facet_keys(f, components));
}

ShellingVerdict verify_shell2_hypothesis(const Graph& g, const ShellingOrder& ord, const VertexSet& complete_at) {
    const SimplicialComplex c = independence_complex(g);
    if (!verify_shelling(c, ord).accepted) throw InvalidInput("order is not a shelling of the base complex");
    const VertexMask allowed = g.mask_of(complete_at);
    std::vector<VertexMask> seq;
    for (std::size_t idx : ord.order) seq.push_back(c.facets()[idx]);
    for (std::size_t j = 1; j < seq.size(); ++j) {
        const VertexMask steps = single_step_vertices(std::span(seq).first(j), seq[j]) & allowed;
        for (std::size_t i = 0; i < j; ++i) {
            if (!((seq[j] & ~seq[i]) & steps)) return {false, std::pair{i + 1, j + 1}};
        }
    }
    return {true, std::nullopt};
}

std::optional<ShellingOrder> find_shell2_shelling(const Graph& g, const VertexSet& complete_at, SearchLimits limits) {
    const VertexMask allowed = g.mask_of(complete_at);
    return search_order(
        independence_complex(g),
        [allowed](std::span<const VertexMask> placed, VertexMask candidate) {
            return admissible(placed, candidate, allowed);
        },
        limits);
}

VertexSet complete_members(const GraphFamily& f) {
    VertexSet out;
    for (int x = 0; x < static_cast<int>(f.base().order()); ++x) {
        if (is_complete(f.member(x).graph)) out.push_back(f.base().label(x));
    }
    return out;
}

ShellingOrder lexicographic_shelling(const GraphFamily& f, const ShellingOrder& base_order,
                                     const ComponentShellings& components) {
    const Graph& base = f.base();
    if (!verify_shell2_hypothesis(base, base_order, complete_members(f)).accepted) {
        throw InvalidInput("base order does not satisfy the hypothesis for the complete members");
    }
    const auto ranks = member_ranks(f, components);
    const SimplicialComplex bc = independence_complex(base);
    std::unordered_map<VertexMask, std::size_t> base_pos;
    for (std::size_t p = 0; p < base_order.order.size(); ++p) base_pos.emplace(bc.facets()[base_order.order[p]], p);

    const int n = static_cast<int>(base.order());
    std::vector<int> offset;
    int next = 0;
    for (int x = 0; x < n; ++x) {
        offset.push_back(next);
        next += static_cast<int>(f.member(x).graph.order());
    }
    const SimplicialComplex c = independence_complex(lexicographic_product(f));
    std::vector<std::vector<std::size_t>> keys;
    keys.reserve(c.facet_count());
    for (VertexMask k : c.facets()) {
        VertexMask support = 0;
        std::vector<std::size_t> tail;
        for (int x = 0; x < n; ++x) {
            const auto hn = static_cast<int>(f.member(x).graph.order());
            const VertexMask part = (k >> offset[static_cast<std::size_t>(x)]) & low_bits(hn);
            if (!part) continue;
            support |= bit(x);
            tail.push_back(ranks[static_cast<std::size_t>(x)].rank(part));
        }
        auto it = base_pos.find(support);
        if (it == base_pos.end()) throw std::logic_error("product facet is not associated to a base facet");
        std::vector<std::size_t> key{it->second};
        key.insert(key.end(), tail.begin(), tail.end());
        keys.push_back(std::move(key));
    }
    return order_by_keys(keys);
}

}  // namespace icx
