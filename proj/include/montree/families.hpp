#pragma once

#include "montree/graph.hpp"

#include <string>
#include <string_view>

namespace montree {

Graph make_clique_union(int k, int s);        // k disjoint copies of K_s
Graph make_complete_bipartite(int a, int b);  // part A = [0,a), part B = [a,a+b)
Graph make_cycle(int n);
Graph make_path_graph(int n);                 // n vertices, n-1 edges
Graph make_split_graph(int a, int n);         // A=[0,a) complete to everything, rest independent

enum class FamilyKind { clique_union, complete_bipartite, cycle, path, explicit_edges };

struct GraphFamilySpec {
    FamilyKind kind;
    int k = 0, s = 0; // clique_union
    int a = 0, b = 0; // complete_bipartite
    int n = 0;        // cycle / path
    std::string path_arg; // explicit edge-list file
};

// "clique_union:k=3,s=4" | "complete_bipartite:a=2,b=3" | "cycle:n=5" |
// "path:n=4" | "file:PATH"
GraphFamilySpec parse_graph_family(std::string_view spec);
Graph make_graph(const GraphFamilySpec& spec);

} // namespace montree
