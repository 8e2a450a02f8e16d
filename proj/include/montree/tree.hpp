#pragma once

#include "montree/graph.hpp"

#include <utility>
#include <vector>

namespace montree {

// Tree with a fixed breadth-first ordering (x_0, ..., x_t) where x_0 is a
// leaf (the lowest-labelled one). Immutable. Indices below are BFS indices;
// original input labels are kept for reporting.
class RootedTree {
public:
    static RootedTree from_edges(const std::vector<Edge>& edges);
    static RootedTree single_vertex(int label = 0);

    int edge_count() const { return t_; }                      // t
    int vertex_count() const { return t_ + 1; }
    int ancestor(int i) const { return ancestor_[i]; }         // a(i), 1 <= i <= t
    const std::vector<int>& children(int i) const { return children_[i]; }
    int depth(int i) const { return depth_[i]; }
    int original_label(int i) const { return original_label_[i]; }
    int diameter() const { return diameter_; }

    // (t1, t2): sizes of the bipartition classes, t1 the class of x_0.
    std::pair<int, int> bipartition_sizes() const { return {t1_, t2_}; }

    // BFS indices on the tree path from x_0 to x_j, inclusive.
    std::vector<int> root_path(int j) const;

    // True iff x_j has no child with index <= k, i.e. x_j is a leaf of T^k.
    bool is_leaf_in_prefix(int j, int k) const;

private:
    int t_ = 0;
    std::vector<int> ancestor_;       // ancestor_[0] unused (-1)
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
    std::vector<int> original_label_;
    int diameter_ = 0;
    int t1_ = 1, t2_ = 0;
};

Graph tree_as_graph(const RootedTree& t); // on BFS indices

} // namespace montree
