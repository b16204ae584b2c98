#pragma once

// Slow reference implementations written straight from the definitions.
// They share no algorithmic code with the library: subsets are enumerated
// exhaustively, orders by permutation, ranks over exact rationals.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "icx/graph.hpp"

namespace oracle {

using Set = std::set<int>;

/// Adjacency matrix copy of a graph.
struct Adj {
    int n = 0;
    std::vector<std::vector<bool>> m;
    explicit Adj(const icx::Graph& g);
};

bool independent(const Adj& a, const Set& s);

/// Maximal independent sets by filtering all 2^n subsets, as index sets.
std::vector<Set> maximal_independent_sets(const Adj& a, const Set& within);
std::vector<Set> maximal_independent_sets(const icx::Graph& g);

/// No independent set of G \ N[x] is maximal independent in G \ x.
bool is_shedding(const Adj& a, const Set& within, int x);

/// Memo-free recursion trying shedding vertices in a random order.
bool vertex_decomposable(const icx::Graph& g, std::mt19937_64& rng);

/// Tries every facet order, abandoning a prefix once it breaks the condition.
bool shellable_by_permutation(const std::vector<Set>& facets);

/// The literal condition: for all i < j some v in F_j \ F_i and l < j with F_j \ F_l = {v}.
bool is_shelling(const std::vector<Set>& ordered);

/// No induced cycle of length at least 4.
bool chordal(const icx::Graph& g);

/// Some n-cycle subgraph exists; tries all vertex sequences.
bool has_cycle(const icx::Graph& g, int n);

/// Reduced Betti numbers b_{-1}, b_0, ... of the independence complex of g[within]
/// over the rationals, entries up to the complex dimension.
std::vector<std::size_t> reduced_betti(const Adj& a, const Set& within);

/// Reisner criterion with links G \ N[sigma] and oracle homology.
bool cohen_macaulay(const icx::Graph& g);

/// Rank of an integer matrix by Gaussian elimination over exact rationals.
std::size_t rational_rank(const std::vector<std::vector<long long>>& m);

}  // namespace oracle
