#include "montree/families.hpp"
#include "montree/errors.hpp"

#include <map>
#include <sstream>

namespace montree {

Graph make_clique_union(int k, int s) {
    if (k <= 0 || s <= 0)
        throw InputError("clique_union: k and s must be positive");
    std::vector<Edge> edges;
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                edges.emplace_back(c * s + i, c * s + j);
    return Graph::from_edges(k * s, edges);
}

Graph make_complete_bipartite(int a, int b) {
    if (a <= 0 || b <= 0)
        throw InputError("complete_bipartite: part sizes must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

Graph make_cycle(int n) {
    if (n < 3)
        throw InputError("cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph make_path_graph(int n) {
    if (n <= 0)
        throw InputError("path: need at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph make_split_graph(int a, int n) {
    if (a < 0 || a > n)
        throw InputError("split_graph: need 0 <= a <= n");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

namespace {

std::map<std::string, std::string> parse_kv(std::string_view args) {
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(args)};
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("family spec: expected key=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int need_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw InputError("family spec: missing parameter '" + key + "'");
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw InputError("family spec: parameter '" + key + "' is not an integer");
    }
}

} // namespace

GraphFamilySpec parse_graph_family(std::string_view spec) {
    auto colon = spec.find(':');
    std::string head{spec.substr(0, colon)};
    std::string args = colon == std::string_view::npos ? "" : std::string(spec.substr(colon + 1));
    GraphFamilySpec out{};
    if (head == "clique_union") {
        auto kv = parse_kv(args);
        out.kind = FamilyKind::clique_union;
        out.k = need_int(kv, "k");
        out.s = need_int(kv, "s");
    } else if (head == "complete_bipartite") {
        auto kv = parse_kv(args);
        out.kind = FamilyKind::complete_bipartite;
        out.a = need_int(kv, "a");
        out.b = need_int(kv, "b");
    } else if (head == "cycle") {
        out.kind = FamilyKind::cycle;
        out.n = need_int(parse_kv(args), "n");
    } else if (head == "path") {
        out.kind = FamilyKind::path;
        out.n = need_int(parse_kv(args), "n");
    } else if (head == "file") {
        out.kind = FamilyKind::explicit_edges;
        out.path_arg = args;
        if (out.path_arg.empty())
            throw InputError("family spec: file: needs a path");
    } else {
        throw InputError("family spec: unknown family '" + head + "'");
    }
    return out;
}

Graph make_graph(const GraphFamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::clique_union: return make_clique_union(spec.k, spec.s);
    case FamilyKind::complete_bipartite: return make_complete_bipartite(spec.a, spec.b);
    case FamilyKind::cycle: return make_cycle(spec.n);
    case FamilyKind::path: return make_path_graph(spec.n);
    case FamilyKind::explicit_edges: return load_graph_file(spec.path_arg);
    }
    throw InputError("family spec: unreachable kind");
}

} // namespace montree
