#pragma once

#include <algorithm>
#include <vector>

#include "icx/bits.hpp"
#include "icx/complex.hpp"
#include "icx/generate.hpp"
#include "oracle/oracle.hpp"

namespace testing {

inline oracle::Set to_set(icx::VertexMask m) {
    oracle::Set s;
    icx::for_each_bit(m, [&](int i) { s.insert(i); });
    return s;
}

inline std::vector<oracle::Set> facet_sets(const icx::SimplicialComplex& c) {
    std::vector<oracle::Set> out;
    for (auto f : c.facets()) out.push_back(to_set(f));
    return out;
}

inline std::vector<oracle::Set> sorted(std::vector<oracle::Set> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// `count` G(n, p) graphs with n in [lo, hi] and p in {0.3, 0.5, 0.7}.
inline std::vector<icx::Graph> random_graphs(std::uint64_t seed, int count, int lo, int hi) {
    icx::Rng rng(seed);
    std::vector<icx::Graph> out;
    const double ps[] = {0.3, 0.5, 0.7};
    for (int i = 0; i < count; ++i) {
        const int n = rng.between(lo, hi);
        out.push_back(icx::random_gnp(n, ps[rng.below(3)], rng));
    }
    return out;
}

}  // namespace testing
