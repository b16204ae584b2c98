#include "icx/decompose.hpp"

#include <unordered_map>

namespace icx {

bool is_shedding_within(const Graph& g, VertexMask within, int x) {
    const VertexMask open = g.adjacency(x) & within;
    const VertexMask rest = within & ~open & ~bit(x);
    if (rest == 0) return open != 0;
    return for_each_maximal_independent(g, rest, [&](VertexMask s) {
        VertexMask extenders = open;
        while (extenders) {
            int y = lowest(extenders);
            extenders &= extenders - 1;
            if (!(g.adjacency(y) & s)) return true;
        }
        return false;
    });
}

bool is_shedding_vertex(const Graph& g, std::string_view x) {
    return is_shedding_within(g, g.all(), g.index_of(x));
}

VertexSet shedding_vertices(const Graph& g) {
    VertexMask found = 0;
    for_each_bit(g.all(), [&](int v) {
        if (is_shedding_within(g, g.all(), v)) found |= bit(v);
    });
    return g.labels_of(found);
}

namespace {

class Decomposer {
public:
    explicit Decomposer(const Graph& g) : g_(g) {}

    std::shared_ptr<const VDWitness> solve(VertexMask within) {
        if (auto it = memo_.find(within); it != memo_.end()) return it->second;
        std::shared_ptr<const VDWitness> result;
        if (edgeless_within(g_, within)) {
            result = leaf();
        } else {
            VertexMask candidates = within;
            while (candidates && !result) {
                int x = lowest(candidates);
                candidates &= candidates - 1;
                if (!is_shedding_within(g_, within, x)) continue;
                auto a = solve(within & ~bit(x));
                if (!a) continue;
                auto b = solve(within & ~(g_.adjacency(x) | bit(x)));
                if (!b) continue;
                auto node = std::make_shared<VDWitness>();
                node->vertex = g_.label(x);
                node->minus = std::move(a);
                node->minus_closed = std::move(b);
                result = std::move(node);
            }
        }
        memo_.emplace(within, result);
        return result;
    }

private:
    std::shared_ptr<const VDWitness> leaf() {
        if (!leaf_) leaf_ = std::make_shared<VDWitness>();
        return leaf_;
    }

    const Graph& g_;
    std::unordered_map<VertexMask, std::shared_ptr<const VDWitness>> memo_;
    std::shared_ptr<const VDWitness> leaf_;
};

bool replay(const Graph& g, VertexMask within, const VDWitness& w) {
    if (w.is_leaf()) return edgeless_within(g, within);
    auto x = g.find(w.vertex);
    if (!x || !(within & bit(*x)) || !w.minus_closed) return false;
    if (!is_shedding_within(g, within, *x)) return false;
    return replay(g, within & ~bit(*x), *w.minus) &&
           replay(g, within & ~(g.adjacency(*x) | bit(*x)), *w.minus_closed);
}

}  // namespace

VDVerdict is_vertex_decomposable(const Graph& g) {
    auto w = Decomposer(g).solve(g.all());
    return {w != nullptr, std::move(w)};
}

bool validate_witness(const Graph& g, const VDWitness& w) { return replay(g, g.all(), w); }

}  // namespace icx
