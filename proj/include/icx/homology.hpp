#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "icx/complex.hpp"
#include "icx/graph.hpp"

namespace icx {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced Betti numbers over the rationals; entries[0] is degree -1.
struct BettiVector {
    std::vector<std::size_t> entries;

    std::size_t at(int degree) const { return entries.at(static_cast<std::size_t>(degree + 1)); }
    /// Largest degree stored, i.e. the dimension of the complex.
    int top_degree() const { return static_cast<int>(entries.size()) - 2; }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Faces grouped by cardinality: faces[k] holds every face with k vertices,
/// each group sorted by mask value. faces[0] is {∅}.
using FacesBySize = std::vector<std::vector<VertexMask>>;

FacesBySize all_faces(const SimplicialComplex& c);

/// Faces of the independence complex of g restricted to `within`.
FacesBySize independent_sets_by_size(const Graph& g, VertexMask within);

/// Σ (-1)^i f_i over i = -1 .. dim, taken from face counts alone.
long long reduced_euler_characteristic(const FacesBySize& faces);

/// Link of a face; throws InvalidInput when sigma is not a face. The ground of
/// the result is the set of vertices appearing in its faces.
SimplicialComplex link(const SimplicialComplex& c, VertexMask sigma);
SimplicialComplex link(const SimplicialComplex& c, const VertexSet& sigma);

BettiVector reduced_betti(const SimplicialComplex& c);
BettiVector reduced_betti(const FacesBySize& faces);

/**
 * Rank of the boundary map from k-vertex faces to (k-1)-vertex faces over Q.
 *
 * Sparse fraction-free column reduction on 64-bit integers; a column that
 * would overflow triggers a rerun of the whole matrix on arbitrary-precision
 * integers. `cleared` marks columns known to reduce to zero (optional).
 */
std::size_t boundary_rank(const std::vector<VertexMask>& rows, const std::vector<VertexMask>& cols,
                          const std::vector<bool>* cleared = nullptr,
                          std::vector<bool>* pivot_rows = nullptr);

/// Dense signed boundary matrix, rows indexed by `rows`, columns by `cols`.
std::vector<std::vector<BigInt>> boundary_matrix(const std::vector<VertexMask>& rows,
                                                 const std::vector<VertexMask>& cols);

/// Rank over Q by dense fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(std::vector<std::vector<BigInt>> m);

struct CMWitness {
    VertexSet face;
    int degree = 0;
};

struct CMVerdict {
    bool cohen_macaulay = false;
    /// Least failing face in lexicographic order and the lowest degree below
    /// the link dimension with nonzero reduced homology.
    std::optional<CMWitness> witness;
};

struct CMLimits {
    std::size_t face_cap = 500000;
};

/// Reisner criterion on the independence complex of g, over Q.
CMVerdict is_cohen_macaulay(const Graph& g, CMLimits limits = {});

/// Reisner criterion on an arbitrary complex, computing links from facets.
CMVerdict is_cohen_macaulay(const SimplicialComplex& c, CMLimits limits = {});

}  // namespace icx
