#pragma once

#include "montree/graph.hpp"

#include <vector>

namespace montree {

struct PruneStep {
    int vertex;            // original vertex id
    int degree_at_deletion;
    int n_before, m_before;
    int n_after, m_after;
};

struct PruneResult {
    Graph pruned;               // on compacted ids
    std::vector<int> kept_ids;  // compacted id -> original id
    std::vector<PruneStep> steps;
};

// Repeatedly deletes a vertex of degree strictly below a quarter of the
// current average degree (lowest degree first, ties by id), until the
// minimum degree reaches d/4 or the graph is empty.
PruneResult min_degree_prune(const Graph& g);

} // namespace montree
