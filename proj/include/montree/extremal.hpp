#pragma once

#include "montree/counting.hpp"
#include "montree/graph.hpp"
#include "montree/tree.hpp"

#include <cstdint>
#include <vector>

namespace montree {

// Canonical form for n <= 8: the lexicographically minimal upper-triangle
// adjacency bitstring (read column by column) over all vertex permutations.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class with n vertices and m edges,
// ordered by canonical code. n <= 8.
std::vector<Graph> enumerate_graphs(int n, int m);

struct SearchResult {
    int n = 0, m = 0;
    std::string pattern;
    BigInt minimum;
    std::size_t class_count = 0;
    std::vector<Graph> minimizers;
    Rational bound;  // n (d)_t at the shared average degree
    Rational margin; // minimum - bound
    bool clique_union_admissible = false;
    bool clique_union_is_minimizer = false;
};

// Exact minimum of |Mon(T, G)| over all isomorphism classes at fixed (n, m).
SearchResult find_min_mon(int n, int m, const RootedTree& t);

struct ForestCompareReport {
    int k = 0, n = 0, d = 0;
    BigInt clique_union_count; // F into (n/(d+1)) K_{d+1}
    BigInt bipartite_count;    // F into K_{d/2, n-d/2}
    bool bipartite_strictly_smaller = false;
};

// F = k disjoint edges; requires d even and (d+1) | n.
ForestCompareReport forest_counterexample_check(int k, int n, int d);

struct SplitMinReport {
    int k = 0, n = 0, m = 0;
    int a = -1; // |A| of the split construction realizing (n, m)
    BigInt split_count;
    BigInt minimum;
    std::size_t class_count = 0;
    bool split_is_minimizer = false;
};

// Builds the split graph (A complete to everything, rest independent) at
// (n, m) and checks exhaustively whether it minimizes |Mon(F_k, .)|.
SplitMinReport split_graph_min_check(int k, int n, int m);

} // namespace montree
