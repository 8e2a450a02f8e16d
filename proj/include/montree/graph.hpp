#pragma once

#include "montree/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace montree {

using Edge = std::pair<int, int>;

// Simple undirected graph, immutable after construction. Vertices are
// 0..n-1; adjacency lists are sorted; loops and parallel edges are rejected.
class Graph {
public:
    Graph() = default;
    static Graph from_edges(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        if (n_ <= 64) return (mask_[u] >> v) & 1u;
        return has_edge_slow(u, v);
    }

    // Bit mask of N(v), only valid when vertex_count() <= 64.
    std::uint64_t neighbor_mask(int v) const { return mask_[v]; }

    Rational average_degree() const {
        if (n_ == 0) return 0;
        return Rational(2 * edge_count(), n_);
    }
    int min_degree() const;
    int max_degree() const;
    bool is_regular() const;

private:
    bool has_edge_slow(int u, int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> mask_; // empty when n_ > 64
};

// Parses an edge-list document: lines "u v", '#' comments and blank lines
// ignored, optional header line "n=N" to declare isolated vertices.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

std::vector<std::vector<int>> connected_components(const Graph& g);

// True iff every component is a clique and all components have the same
// order s with s - 1 equal to the (then necessarily integral) average degree.
bool is_clique_union_of_equal_cliques(const Graph& g);

// Two-coloring per component; the side containing the smallest vertex of
// each component goes to part A. nullopt when an odd cycle exists.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

} // namespace montree
