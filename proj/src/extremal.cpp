#include "montree/extremal.hpp"
#include "montree/errors.hpp"
#include "montree/families.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace montree {

namespace {

// upper-triangle pair index, column by column: (0,1),(0,2),(1,2),(0,3),...
inline int pair_index(int i, int j) { // i < j
    return j * (j - 1) / 2 + i;
}

struct MaskGraph {
    int n;
    std::array<std::uint8_t, 8> rows; // adjacency masks

    static MaskGraph from_edge_mask(int n, std::uint64_t edges) {
        MaskGraph g{n, {}};
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((edges >> pair_index(i, j)) & 1u) {
                    g.rows[i] |= std::uint8_t(1) << j;
                    g.rows[j] |= std::uint8_t(1) << i;
                }
        return g;
    }

    bool adj(int u, int v) const { return (rows[u] >> v) & 1u; }
};

// Minimal code via frontier search: keep every partial permutation that
// realizes the minimal column-block prefix, extend one vertex at a time.
std::uint64_t canonical_code_masks(const MaskGraph& g) {
    const int n = g.n;
    struct Partial {
        std::array<std::uint8_t, 8> perm; // new index -> original vertex
        std::uint8_t used;
    };
    std::vector<Partial> frontier;
    for (int v = 0; v < n; ++v)
        frontier.push_back({{std::uint8_t(v)}, std::uint8_t(1u << v)});
    std::uint64_t code = 0;
    for (int k = 1; k < n; ++k) {
        std::uint32_t best = UINT32_MAX;
        std::vector<Partial> next;
        for (const auto& p : frontier) {
            for (int c = 0; c < n; ++c) {
                if ((p.used >> c) & 1u) continue;
                std::uint32_t block = 0;
                for (int i = 0; i < k; ++i)
                    if (g.adj(p.perm[i], c)) block |= std::uint32_t(1) << i;
                if (block > best) continue;
                if (block < best) {
                    best = block;
                    next.clear();
                }
                Partial q = p;
                q.perm[k] = std::uint8_t(c);
                q.used |= std::uint8_t(1u << c);
                next.push_back(q);
            }
        }
        frontier = std::move(next);
        code |= static_cast<std::uint64_t>(best) << pair_index(0, k);
    }
    return code;
}

std::uint64_t edge_mask_of(const Graph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges())
        mask |= std::uint64_t(1) << pair_index(std::min(u, v), std::max(u, v));
    return mask;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1u)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// classes by edge count, grown one edge at a time from the empty graph
const std::vector<std::uint64_t>& class_layer(int n, int m) {
    static std::map<std::pair<int, int>, std::vector<std::uint64_t>> memo;
    auto key = std::make_pair(n, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::uint64_t> out;
    if (m == 0) {
        out.push_back(0);
    } else {
        const int max_pairs = n * (n - 1) / 2;
        std::vector<std::uint64_t> canon;
        for (std::uint64_t base : class_layer(n, m - 1)) {
            for (int p = 0; p < max_pairs; ++p) {
                if ((base >> p) & 1u) continue;
                std::uint64_t grown = base | (std::uint64_t(1) << p);
                canon.push_back(canonical_code_masks(MaskGraph::from_edge_mask(n, grown)));
            }
        }
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        out = std::move(canon);
    }
    return memo.emplace(key, std::move(out)).first->second;
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.vertex_count() > 8)
        throw InputError("canonical_code: only supported for n <= 8");
    return canonical_code_masks(MaskGraph::from_edge_mask(g.vertex_count(), edge_mask_of(g)));
}

std::vector<Graph> enumerate_graphs(int n, int m) {
    if (n < 1 || n > 8)
        throw InputError("enumerate_graphs: n must be in [1, 8]");
    if (m < 0 || m > n * (n - 1) / 2)
        throw InputError("enumerate_graphs: m out of range");
    std::vector<Graph> out;
    for (std::uint64_t code : class_layer(n, m))
        out.push_back(graph_from_edge_mask(n, code));
    return out;
}

SearchResult find_min_mon(int n, int m, const RootedTree& t) {
    SearchResult res;
    res.n = n;
    res.m = m;
    res.pattern = "tree_t=" + std::to_string(t.edge_count());
    auto classes = enumerate_graphs(n, m);
    res.class_count = classes.size();

    std::vector<std::uint64_t> min_codes;
    bool first = true;
    for (const auto& g : classes) {
        BigInt cnt = count_injective(t, g);
        if (first || cnt < res.minimum) {
            res.minimum = cnt;
            res.minimizers.clear();
            min_codes.clear();
            first = false;
        }
        if (cnt == res.minimum) {
            res.minimizers.push_back(g);
            min_codes.push_back(canonical_code(g));
        }
    }

    Rational d(2 * m, n);
    res.bound = Rational(n) * falling_factorial(d, static_cast<unsigned>(t.edge_count()));
    res.margin = Rational(res.minimum) - res.bound;

    if (n > 0 && denominator(d) == 1) {
        int di = static_cast<int>(numerator(d));
        if (di >= 0 && n % (di + 1) == 0) {
            res.clique_union_admissible = true;
            std::uint64_t cu = canonical_code(make_clique_union(n / (di + 1), di + 1));
            res.clique_union_is_minimizer =
                std::find(min_codes.begin(), min_codes.end(), cu) != min_codes.end();
        }
    }
    return res;
}

ForestCompareReport forest_counterexample_check(int k, int n, int d) {
    if (k < 0 || n < 1 || d < 1)
        throw InputError("forest_counterexample_check: bad parameters");
    if (d % 2 != 0)
        throw InputError("forest_counterexample_check: d must be even for K_{d/2, n-d/2}");
    if (n % (d + 1) != 0)
        throw InputError("forest_counterexample_check: (d+1) must divide n");
    if (n - d / 2 < 1)
        throw InputError("forest_counterexample_check: bipartite part would be empty");

    std::vector<RootedTree> forest;
    for (int c = 0; c < k; ++c)
        forest.push_back(RootedTree::from_edges({{0, 1}}));

    ForestCompareReport rep;
    rep.k = k;
    rep.n = n;
    rep.d = d;
    rep.clique_union_count = count_forest(forest, make_clique_union(n / (d + 1), d + 1));
    rep.bipartite_count = count_forest(forest, make_complete_bipartite(d / 2, n - d / 2));
    rep.bipartite_strictly_smaller = rep.bipartite_count < rep.clique_union_count;
    return rep;
}

SplitMinReport split_graph_min_check(int k, int n, int m) {
    if (n < 1 || n > 8)
        throw InputError("split_graph_min_check: n must be in [1, 8]");
    SplitMinReport rep;
    rep.k = k;
    rep.n = n;
    rep.m = m;
    for (int a = 0; a <= n; ++a)
        if (a * (a - 1) / 2 + a * (n - a) == m) {
            rep.a = a;
            break;
        }
    if (rep.a < 0)
        throw InputError("split_graph_min_check: no split graph realizes this (n, m)");

    std::vector<RootedTree> forest;
    for (int c = 0; c < k; ++c)
        forest.push_back(RootedTree::from_edges({{0, 1}}));

    rep.split_count = count_forest(forest, make_split_graph(rep.a, n));
    bool first = true;
    for (const auto& g : enumerate_graphs(n, m)) {
        ++rep.class_count;
        BigInt cnt = count_forest(forest, g);
        if (first || cnt < rep.minimum) {
            rep.minimum = cnt;
            first = false;
        }
    }
    rep.split_is_minimizer = rep.split_count == rep.minimum;
    return rep;
}

} // namespace montree
