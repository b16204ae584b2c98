#include "icx/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "icx/error.hpp"

namespace icx {

SimplicialComplex::SimplicialComplex(std::vector<std::string> ground, std::vector<VertexMask> facets)
    : ground_(std::move(ground)), facets_(std::move(facets)) {
    if (ground_.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw ResourceLimit("complex ground set exceeds 64 vertices");
    }
    if (facets_.empty()) throw InvalidInput("a complex needs at least one facet (use {∅})");
    std::unordered_set<std::string> seen;
    for (const auto& g : ground_) {
        if (!seen.insert(g).second) throw InvalidInput("duplicate ground label '" + g + "'");
    }
    const VertexMask all = low_bits(static_cast<int>(ground_.size()));
    std::sort(facets_.begin(), facets_.end(), lex_less);
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (facets_[i] & ~all) throw InvalidInput("facet uses a vertex outside the ground set");
        if (i > 0 && facets_[i] == facets_[i - 1]) throw InvalidInput("repeated facet");
    }
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        for (std::size_t j = 0; j < facets_.size(); ++j) {
            if (i != j && (facets_[i] & facets_[j]) == facets_[i]) {
                std::string shown;
                for (const auto& l : labels_of(facets_[i])) shown += (shown.empty() ? "" : ",") + l;
                throw InvalidInput("facets must form an antichain: {" + shown + "} lies in another facet");
            }
        }
    }
}

SimplicialComplex SimplicialComplex::from_labels(std::vector<std::string> ground,
                                                 const std::vector<VertexSet>& facets) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < ground.size(); ++i) index.emplace(ground[i], static_cast<int>(i));
    std::vector<VertexMask> masks;
    for (const auto& f : facets) {
        VertexMask m = 0;
        for (const auto& l : f) {
            auto it = index.find(l);
            if (it == index.end()) throw InvalidInput("facet vertex '" + l + "' is not in the ground set");
            m |= bit(it->second);
        }
        masks.push_back(m);
    }
    return SimplicialComplex(std::move(ground), std::move(masks));
}

VertexSet SimplicialComplex::labels_of(VertexMask m) const {
    VertexSet out;
    for_each_bit(m, [&](int v) { out.push_back(ground_[static_cast<std::size_t>(v)]); });
    return out;
}

VertexSet SimplicialComplex::facet_labels(std::size_t i) const { return labels_of(facets_.at(i)); }

VertexMask SimplicialComplex::mask_of(const VertexSet& labels) const {
    VertexMask m = 0;
    for (const auto& l : labels) {
        auto it = std::find(ground_.begin(), ground_.end(), l);
        if (it == ground_.end()) throw InvalidInput("'" + l + "' is not in the ground set");
        m |= bit(static_cast<int>(it - ground_.begin()));
    }
    return m;
}

int SimplicialComplex::dimension() const {
    int best = 0;
    for (VertexMask f : facets_) best = std::max(best, popcount(f));
    return best - 1;
}

bool SimplicialComplex::contains_face(VertexMask face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexMask f) { return (face & f) == face; });
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex(g.vertices(), maximal_independent_masks(g, g.all()));
}

bool is_pure(const SimplicialComplex& c) {
    const int size = popcount(c.facets().front());
    return std::all_of(c.facets().begin(), c.facets().end(),
                       [&](VertexMask f) { return popcount(f) == size; });
}

bool is_unmixed(const Graph& g) { return is_pure(independence_complex(g)); }

VertexMask single_step_vertices(std::span<const VertexMask> placed, VertexMask candidate) {
    VertexMask reach = 0;
    for (VertexMask f : placed) {
        VertexMask d = candidate & ~f;
        if (d && !(d & (d - 1))) reach |= d;
    }
    return reach;
}

bool can_append(std::span<const VertexMask> placed, VertexMask candidate) {
    const VertexMask reach = single_step_vertices(placed, candidate);
    return std::all_of(placed.begin(), placed.end(),
                       [&](VertexMask f) { return (candidate & ~f & reach) != 0; });
}

ShellingVerdict verify_shelling(const SimplicialComplex& c, const ShellingOrder& ord) {
    const auto m = c.facet_count();
    if (ord.order.size() != m) throw InvalidInput("shelling order does not list every facet exactly once");
    std::vector<bool> used(m, false);
    for (auto i : ord.order) {
        if (i >= m || used[i]) throw InvalidInput("shelling order is not a permutation of the facets");
        used[i] = true;
    }
    std::vector<VertexMask> seq;
    seq.reserve(m);
    for (auto i : ord.order) seq.push_back(c.facets()[i]);
    for (std::size_t j = 1; j < m; ++j) {
        std::span<const VertexMask> before(seq.data(), j);
        const VertexMask reach = single_step_vertices(before, seq[j]);
        for (std::size_t i = 0; i < j; ++i) {
            if (!(seq[j] & ~seq[i] & reach)) return {false, std::make_pair(i + 1, j + 1)};
        }
    }
    return {true, std::nullopt};
}

namespace {

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

class OrderSearch {
public:
    OrderSearch(const SimplicialComplex& c, const AppendRule& rule, SearchLimits limits, FacetSizes sizes)
        : facets_(c.facets()), rule_(rule), limits_(limits), placed_bits_((facets_.size() + 63) / 64, 0) {
        if (sizes == FacetSizes::NonIncreasing) {
            remaining_.assign(kMaxVertices + 1, 0);
            for (VertexMask f : facets_) ++remaining_[static_cast<std::size_t>(popcount(f))];
        }
    }

    std::optional<ShellingOrder> run() {
        if (!descend()) return std::nullopt;
        return ShellingOrder{order_};
    }

private:
    bool descend() {
        if (order_.size() == facets_.size()) return true;
        if (limits_.node_cap && ++nodes_ > limits_.node_cap) {
            throw ResourceLimit("shelling search exceeded " + std::to_string(limits_.node_cap) + " nodes");
        }
        if (failed_.count(placed_bits_)) return false;
        const int size = largest_remaining();
        for (std::size_t c = 0; c < facets_.size(); ++c) {
            if (placed_bits_[c / 64] & (std::uint64_t{1} << (c % 64))) continue;
            if (size >= 0 && popcount(facets_[c]) != size) continue;
            if (!rule_(placed_, facets_[c])) continue;
            push(c);
            if (descend()) return true;
            pop(c);
        }
        failed_.insert(placed_bits_);
        return false;
    }

    // Size every next facet must have, or -1 when sizes are unconstrained.
    int largest_remaining() const {
        for (int k = static_cast<int>(remaining_.size()) - 1; k >= 0; --k) {
            if (remaining_[static_cast<std::size_t>(k)]) return k;
        }
        return -1;
    }

    void push(std::size_t c) {
        if (!remaining_.empty()) --remaining_[static_cast<std::size_t>(popcount(facets_[c]))];
        placed_bits_[c / 64] |= std::uint64_t{1} << (c % 64);
        placed_.push_back(facets_[c]);
        order_.push_back(c);
    }

    void pop(std::size_t c) {
        if (!remaining_.empty()) ++remaining_[static_cast<std::size_t>(popcount(facets_[c]))];
        placed_bits_[c / 64] &= ~(std::uint64_t{1} << (c % 64));
        placed_.pop_back();
        order_.pop_back();
    }

    const std::vector<VertexMask>& facets_;
    const AppendRule& rule_;
    SearchLimits limits_;
    std::vector<std::uint64_t> placed_bits_;
    std::vector<VertexMask> placed_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> remaining_;
    std::unordered_set<std::vector<std::uint64_t>, WordsHash> failed_;
    std::size_t nodes_ = 0;
};

}  // namespace

std::optional<ShellingOrder> search_order(const SimplicialComplex& c, const AppendRule& rule,
                                          SearchLimits limits, FacetSizes sizes) {
    if (c.facet_count() > limits.facet_cap) {
        throw ResourceLimit("complex has " + std::to_string(c.facet_count()) + " facets; cap is " +
                            std::to_string(limits.facet_cap));
    }
    return OrderSearch(c, rule, limits, sizes).run();
}

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c, SearchLimits limits) {
    return search_order(c, can_append, limits, FacetSizes::NonIncreasing);
}

bool is_shellable(const Graph& g, SearchLimits limits) {
    return find_shelling(independence_complex(g), limits).has_value();
}

}  // namespace icx
