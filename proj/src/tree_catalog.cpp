#include "montree/tree_catalog.hpp"
#include "montree/errors.hpp"
#include "montree/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace montree {

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::string encode_rooted(const std::vector<std::vector<int>>& adj, int root, int parent) {
    std::vector<std::string> parts;
    for (int w : adj[root])
        if (w != parent) parts.push_back(encode_rooted(adj, w, root));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> size(n, 0), best;
    int best_weight = n + 1;
    std::function<void(int, int)> dfs_size = [&](int u, int p) {
        size[u] = 1;
        for (int w : adj[u])
            if (w != p) {
                dfs_size(w, u);
                size[u] += size[w];
            }
    };
    dfs_size(0, -1);
    std::function<void(int, int)> dfs_cent = [&](int u, int p) {
        int weight = n - size[u];
        for (int w : adj[u])
            if (w != p) {
                weight = std::max(weight, size[w]);
                dfs_cent(w, u);
            }
        if (weight < best_weight) {
            best_weight = weight;
            best = {u};
        } else if (weight == best_weight) {
            best.push_back(u);
        }
    };
    dfs_cent(0, -1);
    return best;
}

} // namespace

std::string tree_canonical_code(int vertex_count, const std::vector<Edge>& edges) {
    if (vertex_count == 1) return "()";
    auto adj = adjacency(vertex_count, edges);
    std::string code;
    for (int c : centroids(adj)) {
        auto e = encode_rooted(adj, c, -1);
        if (code.empty() || e < code) code = e;
    }
    return code;
}

std::vector<RootedTree> enumerate_trees(int vertex_count) {
    if (vertex_count < 1 || vertex_count > 10)
        throw InputError("enumerate_trees: vertex count must be in [1, 10]");

    // grow the catalog one vertex at a time: every k-vertex class arises by
    // attaching a leaf to some (k-1)-vertex class
    std::map<std::string, std::vector<Edge>> classes;
    classes.emplace(tree_canonical_code(1, {}), std::vector<Edge>{});
    for (int k = 2; k <= vertex_count; ++k) {
        std::map<std::string, std::vector<Edge>> next;
        for (const auto& [code, edges] : classes) {
            for (int attach = 0; attach < k - 1; ++attach) {
                auto grown = edges;
                grown.emplace_back(attach, k - 1);
                next.emplace(tree_canonical_code(k, grown), grown);
            }
        }
        classes = std::move(next);
    }

    std::vector<RootedTree> out;
    for (const auto& [code, edges] : classes) {
        if (vertex_count == 1)
            out.push_back(RootedTree::single_vertex());
        else
            out.push_back(RootedTree::from_edges(edges));
    }
    return out;
}

TreeFamilySpec parse_tree_family(std::string_view spec) {
    auto colon = spec.find(':');
    std::string head{spec.substr(0, colon)};
    std::string args = colon == std::string_view::npos ? "" : std::string(spec.substr(colon + 1));
    auto kv = [&]() {
        std::map<std::string, int> out;
        std::istringstream in(args);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw InputError("tree spec: expected key=value, got '" + item + "'");
            try {
                out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw InputError("tree spec: non-integer value in '" + item + "'");
            }
        }
        return out;
    };
    TreeFamilySpec out{};
    if (head == "path") {
        auto m = kv();
        if (!m.count("t")) throw InputError("tree spec: path needs t=");
        out.kind = TreeFamilySpec::Kind::path;
        out.t = m["t"];
        if (out.t < 0) throw InputError("tree spec: path t must be >= 0");
    } else if (head == "star") {
        auto m = kv();
        if (!m.count("leaves")) throw InputError("tree spec: star needs leaves=");
        out.kind = TreeFamilySpec::Kind::star;
        out.leaves = m["leaves"];
        if (out.leaves < 1) throw InputError("tree spec: star needs at least 1 leaf");
    } else if (head == "catalog") {
        auto m = kv();
        if (!m.count("n") || !m.count("index"))
            throw InputError("tree spec: catalog needs n= and index=");
        out.kind = TreeFamilySpec::Kind::catalog;
        out.n = m["n"];
        out.index = m["index"];
    } else if (head == "file") {
        out.kind = TreeFamilySpec::Kind::explicit_edges;
        out.path_arg = args;
        if (out.path_arg.empty()) throw InputError("tree spec: file: needs a path");
    } else {
        throw InputError("tree spec: unknown kind '" + head + "'");
    }
    return out;
}

RootedTree make_tree(const TreeFamilySpec& spec) {
    switch (spec.kind) {
    case TreeFamilySpec::Kind::path: {
        if (spec.t == 0) return RootedTree::single_vertex();
        std::vector<Edge> edges;
        for (int i = 0; i < spec.t; ++i)
            edges.emplace_back(i, i + 1);
        return RootedTree::from_edges(edges);
    }
    case TreeFamilySpec::Kind::star: {
        std::vector<Edge> edges;
        for (int i = 1; i <= spec.leaves; ++i)
            edges.emplace_back(0, i);
        return RootedTree::from_edges(edges);
    }
    case TreeFamilySpec::Kind::catalog: {
        auto all = enumerate_trees(spec.n);
        if (spec.index < 0 || spec.index >= static_cast<int>(all.size()))
            throw InputError("tree spec: catalog index out of range (have " +
                             std::to_string(all.size()) + " classes)");
        return all[spec.index];
    }
    case TreeFamilySpec::Kind::explicit_edges: {
        std::ifstream in(spec.path_arg);
        if (!in) throw IoError("cannot read tree file: " + spec.path_arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        Graph g = load_graph(buf.str());
        if (g.edge_count() == 0 && g.vertex_count() == 1)
            return RootedTree::single_vertex();
        return RootedTree::from_edges(g.edges());
    }
    }
    throw InputError("tree spec: unreachable kind");
}

} // namespace montree
