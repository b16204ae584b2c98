#include "icx/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "icx/error.hpp"

namespace icx {

// ---------------------------------------------------------------------------
// Faces

FacesBySize all_faces(const SimplicialComplex& c) {
    const int top = c.dimension() + 1;
    FacesBySize faces(static_cast<std::size_t>(top + 1));
    for (VertexMask f : c.facets()) {
        // Every subset of f, by Gosper-free submask enumeration.
        VertexMask sub = f;
        while (true) {
            faces[static_cast<std::size_t>(popcount(sub))].push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    for (auto& group : faces) {
        std::sort(group.begin(), group.end());
        group.erase(std::unique(group.begin(), group.end()), group.end());
    }
    return faces;
}

namespace {

void collect_independent(const Graph& g, VertexMask face, VertexMask allowed, FacesBySize& out) {
    const auto size = static_cast<std::size_t>(popcount(face));
    if (out.size() <= size) out.resize(size + 1);
    out[size].push_back(face);
    while (allowed) {
        int v = lowest(allowed);
        allowed &= allowed - 1;
        collect_independent(g, face | bit(v), allowed & ~g.adjacency(v), out);
    }
}

}  // namespace

FacesBySize independent_sets_by_size(const Graph& g, VertexMask within) {
    FacesBySize faces;
    collect_independent(g, 0, within & g.all(), faces);
    for (auto& group : faces) std::sort(group.begin(), group.end());
    return faces;
}

long long reduced_euler_characteristic(const FacesBySize& faces) {
    long long chi = 0;
    for (std::size_t k = 0; k < faces.size(); ++k) {
        // k vertices means dimension k - 1; sign (-1)^(k-1).
        const auto n = static_cast<long long>(faces[k].size());
        chi += (k % 2 == 1) ? n : -n;
    }
    return chi;
}

SimplicialComplex link(const SimplicialComplex& c, VertexMask sigma) {
    std::vector<VertexMask> rest;
    VertexMask support = 0;
    for (VertexMask f : c.facets()) {
        if ((f & sigma) == sigma) {
            rest.push_back(f & ~sigma);
            support |= f & ~sigma;
        }
    }
    if (rest.empty()) throw InvalidInput("link requested for a set that is not a face");
    std::vector<std::string> ground;
    for_each_bit(support, [&](int v) { ground.push_back(c.ground()[static_cast<std::size_t>(v)]); });
    for (auto& f : rest) f = compress(f, support);
    return SimplicialComplex(std::move(ground), std::move(rest));
}

SimplicialComplex link(const SimplicialComplex& c, const VertexSet& sigma) {
    return link(c, c.mask_of(sigma));
}

// ---------------------------------------------------------------------------
// Ranks

namespace {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

inline std::int64_t abs_value(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
}
inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class Int>
struct Entry {
    std::int32_t row;
    Int value;
};

template <class Int>
using Column = std::vector<Entry<Int>>;

template <class Int>
Column<Int> make_column(const std::vector<VertexMask>& rows, VertexMask face) {
    Column<Int> col;
    int t = 0;
    for_each_bit(face, [&](int v) {
        VertexMask facet = face & ~bit(v);
        auto it = std::lower_bound(rows.begin(), rows.end(), facet);
        col.push_back({static_cast<std::int32_t>(it - rows.begin()), Int(t % 2 == 0 ? 1 : -1)});
        ++t;
    });
    std::sort(col.begin(), col.end(), [](const Entry<Int>& a, const Entry<Int>& b) { return a.row < b.row; });
    return col;
}

// target := s * target - q * other, dropping zeros.
template <class Int>
void combine(Column<Int>& target, const Int& s, const Int& q, const Column<Int>& other) {
    Column<Int> out;
    out.reserve(target.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < other.size()) {
        if (j == other.size() || (i < target.size() && target[i].row < other[j].row)) {
            out.push_back({target[i].row, mul(s, target[i].value)});
            ++i;
        } else if (i == target.size() || other[j].row < target[i].row) {
            out.push_back({other[j].row, sub(Int(0), mul(q, other[j].value))});
            ++j;
        } else {
            Int v = sub(mul(s, target[i].value), mul(q, other[j].value));
            if (v != 0) out.push_back({target[i].row, v});
            ++i;
            ++j;
        }
    }
    target.swap(out);
}

template <class Int>
void make_primitive(Column<Int>& col) {
    Int g(0);
    for (const auto& e : col) {
        g = gcd_of(g, abs_value(e.value));
        if (g == 1) return;
    }
    if (g > 1) {
        for (auto& e : col) e.value /= g;
    }
}

template <class Int>
std::size_t reduce_columns(const std::vector<VertexMask>& rows, const std::vector<VertexMask>& cols,
                           const std::vector<bool>* cleared, std::vector<bool>* pivot_rows) {
    std::vector<std::int32_t> owner(rows.size(), -1);
    std::vector<Column<Int>> reduced(cols.size());
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cleared && (*cleared)[j]) continue;
        Column<Int> col = make_column<Int>(rows, cols[j]);
        while (!col.empty()) {
            const auto low = col.back().row;
            const auto k = owner[static_cast<std::size_t>(low)];
            if (k < 0) {
                owner[static_cast<std::size_t>(low)] = static_cast<std::int32_t>(j);
                reduced[j] = std::move(col);
                ++rank;
                break;
            }
            const Int a = col.back().value;
            const Int b = reduced[static_cast<std::size_t>(k)].back().value;
            if (a % b == 0) {
                combine(col, Int(1), Int(a / b), reduced[static_cast<std::size_t>(k)]);
            } else {
                combine(col, b, a, reduced[static_cast<std::size_t>(k)]);
                make_primitive(col);
            }
        }
    }
    if (pivot_rows) {
        pivot_rows->assign(rows.size(), false);
        for (std::size_t r = 0; r < rows.size(); ++r) (*pivot_rows)[r] = owner[r] >= 0;
    }
    return rank;
}

}  // namespace

std::size_t boundary_rank(const std::vector<VertexMask>& rows, const std::vector<VertexMask>& cols,
                          const std::vector<bool>* cleared, std::vector<bool>* pivot_rows) {
    try {
        return reduce_columns<std::int64_t>(rows, cols, cleared, pivot_rows);
    } catch (const Overflow&) {
        return reduce_columns<BigInt>(rows, cols, cleared, pivot_rows);
    }
}

std::vector<std::vector<BigInt>> boundary_matrix(const std::vector<VertexMask>& rows,
                                                 const std::vector<VertexMask>& cols) {
    std::vector<std::vector<BigInt>> m(rows.size(), std::vector<BigInt>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& e : make_column<std::int64_t>(rows, cols[j])) {
            m[static_cast<std::size_t>(e.row)][j] = e.value;
        }
    }
    return m;
}

std::size_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t nrows = m.size();
    if (nrows == 0) return 0;
    const std::size_t ncols = m.front().size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t p = rank;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Betti numbers

BettiVector reduced_betti(const FacesBySize& faces) {
    // faces.size() - 1 is the largest face size, i.e. dim + 1.
    const std::size_t top = faces.size() - 1;
    // rank[k] = rank of the boundary from k-vertex faces to (k-1)-vertex faces.
    std::vector<std::size_t> rank(top + 2, 0);
    std::vector<bool> cleared;
    for (std::size_t k = top; k >= 1; --k) {
        std::vector<bool> pivots;
        const std::vector<bool>* clear = (k < top) ? &cleared : nullptr;
        rank[k] = boundary_rank(faces[k - 1], faces[k], clear, &pivots);
        cleared = std::move(pivots);
    }
    BettiVector b;
    b.entries.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        b.entries[k] = faces[k].size() - rank[k] - rank[k + 1];
    }
    return b;
}

BettiVector reduced_betti(const SimplicialComplex& c) { return reduced_betti(all_faces(c)); }

// ---------------------------------------------------------------------------
// Reisner criterion

namespace {

/// Lowest degree i < dim with nonzero reduced homology, if any.
std::optional<int> first_low_homology(const FacesBySize& faces) {
    const BettiVector b = reduced_betti(faces);
    const int dim = b.top_degree();
    for (int i = -1; i < dim; ++i) {
        if (b.at(i) != 0) return i;
    }
    return std::nullopt;
}

std::size_t count_independent(const Graph& g, VertexMask allowed, std::size_t cap, std::size_t so_far) {
    std::size_t n = so_far + 1;
    if (n > cap) return n;
    while (allowed && n <= cap) {
        int v = lowest(allowed);
        allowed &= allowed - 1;
        n = count_independent(g, allowed & ~g.adjacency(v), cap, n);
    }
    return n;
}

class GraphReisner {
public:
    explicit GraphReisner(const Graph& g) : g_(g) {}

    std::optional<CMWitness> run() {
        std::optional<CMWitness> found;
        visit(0, g_.all(), found);
        return found;
    }

private:
    // Faces in lexicographic preorder: a face, then its extensions by larger vertices.
    bool visit(VertexMask face, VertexMask allowed, std::optional<CMWitness>& found) {
        VertexMask closed = face;
        for_each_bit(face, [&](int v) { closed |= g_.adjacency(v); });
        const VertexMask rest = g_.all() & ~closed;
        auto it = cache_.find(rest);
        if (it == cache_.end()) {
            it = cache_.emplace(rest, first_low_homology(independent_sets_by_size(g_, rest))).first;
        }
        if (it->second) {
            found = CMWitness{g_.labels_of(face), *it->second};
            return false;
        }
        while (allowed) {
            int v = lowest(allowed);
            allowed &= allowed - 1;
            if (!visit(face | bit(v), allowed & ~g_.adjacency(v), found)) return false;
        }
        return true;
    }

    const Graph& g_;
    std::unordered_map<VertexMask, std::optional<int>> cache_;
};

}  // namespace

CMVerdict is_cohen_macaulay(const Graph& g, CMLimits limits) {
    if (count_independent(g, g.all(), limits.face_cap, 0) > limits.face_cap) {
        throw ResourceLimit("independence complex has more than " + std::to_string(limits.face_cap) + " faces");
    }
    auto witness = GraphReisner(g).run();
    return {!witness.has_value(), std::move(witness)};
}

CMVerdict is_cohen_macaulay(const SimplicialComplex& c, CMLimits limits) {
    FacesBySize faces = all_faces(c);
    std::vector<VertexMask> ordered;
    for (const auto& group : faces) ordered.insert(ordered.end(), group.begin(), group.end());
    if (ordered.size() > limits.face_cap) {
        throw ResourceLimit("complex has more than " + std::to_string(limits.face_cap) + " faces");
    }
    std::sort(ordered.begin(), ordered.end(), lex_less);
    for (VertexMask sigma : ordered) {
        if (auto deg = first_low_homology(all_faces(link(c, sigma)))) {
            return {false, CMWitness{c.labels_of(sigma), *deg}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace icx
