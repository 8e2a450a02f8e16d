#include "montree/prune.hpp"

#include <algorithm>

namespace montree {

PruneResult min_degree_prune(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    int live_n = n;
    long live_m = g.edge_count();

    PruneResult out;
    while (live_n > 0) {
        // deg(victim) < d/4 = 2m/(4n) = m/(2n), compared exactly:
        // deg * 2n < m
        int victim = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (static_cast<long>(deg[v]) * 2 * live_n < live_m &&
                (victim < 0 || deg[v] < deg[victim]))
                victim = v;
        }
        if (victim < 0) break;

        PruneStep step;
        step.vertex = victim;
        step.degree_at_deletion = deg[victim];
        step.n_before = live_n;
        step.m_before = static_cast<int>(live_m);
        alive[victim] = false;
        for (int w : g.neighbors(victim))
            if (alive[w]) --deg[w];
        live_n -= 1;
        live_m -= step.degree_at_deletion;
        step.n_after = live_n;
        step.m_after = static_cast<int>(live_m);
        out.steps.push_back(step);
    }

    std::vector<int> new_id(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            new_id[v] = static_cast<int>(out.kept_ids.size());
            out.kept_ids.push_back(v);
        }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (alive[u] && alive[v])
            edges.emplace_back(new_id[u], new_id[v]);
    out.pruned = Graph::from_edges(live_n, edges);
    return out;
}

} // namespace montree
