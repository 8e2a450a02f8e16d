#include "montree/graph.hpp"
#include "montree/errors.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <string>

namespace montree {

Graph Graph::from_edges(int vertex_count, const std::vector<Edge>& edges) {
    if (vertex_count < 0)
        throw InputError("graph: negative vertex count");
    Graph g;
    g.n_ = vertex_count;
    g.adj_.assign(vertex_count, {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InputError("graph: edge endpoint out of range");
        if (u == v)
            throw InputError("graph: loop edge at vertex " + std::to_string(u));
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw InputError("graph: duplicate edge " + std::to_string(key.first) + " " +
                             std::to_string(key.second));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.edges_.push_back(key);
    }
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    if (vertex_count <= 64) {
        g.mask_.assign(vertex_count, 0);
        for (auto [u, v] : g.edges_) {
            g.mask_[u] |= std::uint64_t(1) << v;
            g.mask_[v] |= std::uint64_t(1) << u;
        }
    }
    return g;
}

bool Graph::has_edge_slow(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::min_degree() const {
    int out = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v)
        out = std::min(out, degree(v));
    return out;
}

int Graph::max_degree() const {
    int out = 0;
    for (int v = 0; v < n_; ++v)
        out = std::max(out, degree(v));
    return out;
}

bool Graph::is_regular() const {
    return n_ == 0 || min_degree() == max_degree();
}

Graph load_graph(std::string_view text) {
    std::vector<Edge> edges;
    int declared_n = -1;
    int max_id = -1;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first.rfind("n=", 0) == 0) {
            try {
                declared_n = std::stoi(first.substr(2));
            } catch (const std::exception&) {
                throw InputError("edge list line " + std::to_string(line_no) + ": bad header");
            }
            std::string rest;
            if (ls >> rest)
                throw InputError("edge list line " + std::to_string(line_no) +
                                 ": trailing tokens after header");
            continue;
        }
        int u, v;
        std::string extra;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw InputError("edge list line " + std::to_string(line_no) + ": malformed");
        }
        if (!(ls >> v) || (ls >> extra) || u < 0 || v < 0)
            throw InputError("edge list line " + std::to_string(line_no) + ": malformed");
        if (u == v)
            throw InputError("edge list line " + std::to_string(line_no) + ": loop edge");
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    int n = max_id + 1;
    if (declared_n >= 0) {
        if (declared_n < n)
            throw InputError("edge list: header n=" + std::to_string(declared_n) +
                             " smaller than max vertex id " + std::to_string(max_id));
        n = declared_n;
    }
    return Graph::from_edges(n, edges); // duplicate edges rejected there
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out[id].push_back(u);
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
    }
    return out;
}

bool is_clique_union_of_equal_cliques(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto comps = connected_components(g);
    std::size_t order = comps.front().size();
    for (const auto& c : comps) {
        if (c.size() != order) return false;
        for (int v : c)
            if (g.degree(v) != static_cast<int>(order) - 1) return false;
    }
    // all components are (order-1)-regular and connected of size order,
    // hence cliques; the average degree is order-1 automatically
    return g.average_degree() == Rational(static_cast<int>(order) - 1);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<int> a, b;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (side[v] == 0 ? a : b).push_back(v);
    return std::make_pair(std::move(a), std::move(b));
}

} // namespace montree
