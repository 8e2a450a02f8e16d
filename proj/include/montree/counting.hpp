#pragma once

#include "montree/graph.hpp"
#include "montree/numeric.hpp"
#include "montree/tree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace montree {

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

// |Hom(T,G)| by the leaf-elimination dynamic program over the BFS order.
BigInt count_hom_tree(const RootedTree& t, const Graph& g);

// |Mon(T,G)| by depth-first backtracking over the BFS order.
BigInt count_injective(const RootedTree& t, const Graph& g,
                       std::uint64_t node_budget = kDefaultNodeBudget);

// Walks of length t; count_walks(g, t) == count_hom_tree(path_t, g).
BigInt count_walks(const Graph& g, int t);

// Non-backtracking walks of length t: consecutive edges must differ.
BigInt count_nb_walks(const Graph& g, int t);

// |Mon(F,G)| for a forest given by its components; components must land on
// pairwise disjoint vertex sets. Empty forest counts 1.
BigInt count_forest(const std::vector<RootedTree>& forest, const Graph& g,
                    std::uint64_t node_budget = kDefaultNodeBudget);

enum class EqualityClass {
    clique_union_of_size_d_plus_1,
    d_regular,
    other,
    not_applicable,
};

std::string to_string(EqualityClass c);

struct CountReport {
    BigInt mon_count;
    BigInt hom_count;
    Rational bound;     // n (d)_t
    bool holds = false; // mon_count >= bound, exact comparison
    bool equality = false;
    EqualityClass equality_classification = EqualityClass::not_applicable;
};

// Checks mon >= n(d)_t and classifies equality cases: diameter >= 3 tests
// for a union of equal cliques of size d+1, diameter 2 tests for
// d-regularity.
CountReport main_bound_check(const RootedTree& t, const Graph& g,
                             std::uint64_t node_budget = kDefaultNodeBudget);

struct AdversaryBound {
    Rational value; // n (d - t(t-1))^t
    bool vacuous;   // base d - t(t-1) <= 0
};

AdversaryBound adversary_lower_bound(const Graph& g, int t);

struct BipartiteBoundReport {
    int a = 0, b = 0; // part sizes of G
    long e = 0;       // edge count
    int t1 = 0, t2 = 0;
    Rational value;            // a (e/a)_{t2} (e/b)_{t1-1} + b (e/a)_{t1-1} (e/b)_{t2}
    Rational value_swapped;    // same with t1 and t2 exchanged
    bool swapped_defined = false; // needs t2 >= 1
};

// The bipartite refinement of the bound; the tree-part assignment is
// ambiguous in general, so both orientations are evaluated.
BipartiteBoundReport bipartite_bound(const Graph& g, const RootedTree& t);

} // namespace montree
