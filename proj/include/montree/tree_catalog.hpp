#pragma once

#include "montree/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace montree {

// One representative per unlabeled isomorphism class, in canonical-code
// order. vertex_count must be in [1, 10].
std::vector<RootedTree> enumerate_trees(int vertex_count);

// AHU canonical encoding of a free tree given by its edges (rooted at the
// centroid; minimum of both rootings when there are two centroids).
std::string tree_canonical_code(int vertex_count, const std::vector<Edge>& edges);

struct TreeFamilySpec {
    enum class Kind { path, star, catalog, explicit_edges } kind;
    int t = 0;        // path: number of edges
    int leaves = 0;   // star
    int n = 0, index = 0; // catalog
    std::string path_arg; // file
};

// "path:t=3" | "star:leaves=4" | "catalog:n=6,index=2" | "file:PATH"
TreeFamilySpec parse_tree_family(std::string_view spec);
RootedTree make_tree(const TreeFamilySpec& spec);

} // namespace montree
