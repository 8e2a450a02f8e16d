#include "montree/tree.hpp"
#include "montree/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace montree {

namespace {

// BFS distances inside an adjacency-list forest/graph.
std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

RootedTree RootedTree::single_vertex(int label) {
    RootedTree t;
    t.t_ = 0;
    t.ancestor_ = {-1};
    t.children_ = {{}};
    t.depth_ = {0};
    t.original_label_ = {label};
    t.diameter_ = 0;
    t.t1_ = 1;
    t.t2_ = 0;
    return t;
}

RootedTree RootedTree::from_edges(const std::vector<Edge>& edges) {
    if (edges.empty())
        throw InputError("tree: no edges; use a single-vertex tree explicitly");

    // compact arbitrary labels, remembering the originals in sorted order
    std::set<int> labels;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0)
            throw InputError("tree: negative vertex label");
        labels.insert(u);
        labels.insert(v);
    }
    std::vector<int> label_of(labels.begin(), labels.end());
    std::map<int, int> index_of;
    for (std::size_t i = 0; i < label_of.size(); ++i)
        index_of[label_of[i]] = static_cast<int>(i);

    const int n = static_cast<int>(label_of.size());
    if (static_cast<int>(edges.size()) != n - 1)
        throw InputError("tree: edge count is not vertex count minus one");

    std::vector<std::vector<int>> adj(n);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        int a = index_of[u], b = index_of[v];
        if (a == b)
            throw InputError("tree: loop edge");
        Edge key{std::min(a, b), std::max(a, b)};
        if (!seen.insert(key).second)
            throw InputError("tree: duplicate edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nbrs : adj)
        std::sort(nbrs.begin(), nbrs.end());

    auto dist0 = bfs_dist(adj, 0);
    for (int v = 0; v < n; ++v)
        if (dist0[v] < 0)
            throw InputError("tree: input is not connected");

    // root at the lowest-labelled leaf; labels were sorted, so the first
    // compact index of degree 1 is it
    int root = -1;
    for (int v = 0; v < n && root < 0; ++v)
        if (adj[v].size() == 1) root = v;
    // n >= 2 and acyclic, so a leaf exists

    RootedTree t;
    t.t_ = n - 1;
    t.ancestor_.assign(n, -1);
    t.children_.assign(n, {});
    t.depth_.assign(n, 0);
    t.original_label_.assign(n, 0);

    std::vector<int> order;
    std::vector<int> bfs_index(n, -1);
    std::queue<int> q;
    q.push(root);
    bfs_index[root] = 0;
    order.push_back(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u]) { // ascending label order
            if (bfs_index[w] >= 0) continue;
            bfs_index[w] = static_cast<int>(order.size());
            order.push_back(w);
            t.ancestor_[bfs_index[w]] = bfs_index[u];
            t.depth_[bfs_index[w]] = t.depth_[bfs_index[u]] + 1;
            t.children_[bfs_index[u]].push_back(bfs_index[w]);
            q.push(w);
        }
    }
    for (int i = 0; i < n; ++i)
        t.original_label_[i] = label_of[order[i]];
    for (int i = 1; i < n; ++i)
        if (t.ancestor_[i] >= i)
            throw InternalError("tree: BFS order violated");

    int diam = 0;
    for (int v = 0; v < n; ++v) {
        auto d = bfs_dist(adj, v);
        diam = std::max(diam, *std::max_element(d.begin(), d.end()));
    }
    t.diameter_ = diam;

    t.t1_ = t.t2_ = 0;
    for (int i = 0; i < n; ++i)
        (t.depth_[i] % 2 == 0 ? t.t1_ : t.t2_)++;
    return t;
}

std::vector<int> RootedTree::root_path(int j) const {
    std::vector<int> path;
    for (int cur = j;; cur = ancestor_[cur]) {
        path.push_back(cur);
        if (cur == 0) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool RootedTree::is_leaf_in_prefix(int j, int k) const {
    for (int c : children_[j])
        if (c <= k) return false;
    return true;
}

Graph tree_as_graph(const RootedTree& t) {
    std::vector<Edge> edges;
    for (int i = 1; i <= t.edge_count(); ++i)
        edges.emplace_back(t.ancestor(i), i);
    return Graph::from_edges(t.vertex_count(), edges);
}

} // namespace montree
