#pragma once

#include <bit>
#include <cstdint>

namespace icx {

/// Subset of the vertices of one graph (or of the ground set of one complex),
/// bit i standing for the i-th element in ambient order.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(int i) { return VertexMask{1} << i; }

inline constexpr VertexMask low_bits(int n) {
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

inline int lowest(VertexMask m) { return std::countr_zero(m); }

/// Visits set bits in increasing order.
template <class Fn>
void for_each_bit(VertexMask m, Fn&& fn) {
    while (m) {
        fn(std::countr_zero(m));
        m &= m - 1;
    }
}

/// Lexicographic comparison of the sorted index sequences of two subsets,
/// a proper prefix sorting first. This is the facet/face order used
/// throughout the library.
inline bool lex_less(VertexMask a, VertexMask b) {
    while (a && b) {
        int x = lowest(a), y = lowest(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

/// Packs the bits of `m` selected by `keep` into the low positions.
inline VertexMask compress(VertexMask m, VertexMask keep) {
    VertexMask out = 0;
    int k = 0;
    for_each_bit(keep, [&](int i) {
        if (m & bit(i)) out |= bit(k);
        ++k;
    });
    return out;
}

}  // namespace icx
