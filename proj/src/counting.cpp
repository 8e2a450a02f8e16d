#include "montree/counting.hpp"
#include "montree/errors.hpp"

#include <algorithm>

namespace montree {

BigInt count_hom_tree(const RootedTree& t, const Graph& g) {
    const int n = g.vertex_count();
    const int tn = t.vertex_count();
    // table[i][w] = homomorphisms of the subtree rooted at x_i with x_i -> w
    std::vector<std::vector<BigInt>> table(tn);
    for (int i = tn - 1; i >= 0; --i) {
        table[i].assign(n, 1);
        for (int c : t.children(i)) {
            for (int w = 0; w < n; ++w) {
                BigInt sum = 0;
                for (int w2 : g.neighbors(w))
                    sum += table[c][w2];
                table[i][w] *= sum;
            }
        }
        for (int c : t.children(i))
            table[c].clear();
    }
    BigInt total = 0;
    for (int w = 0; w < n; ++w)
        total += table[0][w];
    return total;
}

namespace {

struct InjectiveCounter {
    const RootedTree& tree;
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> image;
    std::vector<bool> used;

    BigInt run() {
        image.assign(tree.vertex_count(), -1);
        used.assign(g.vertex_count(), false);
        BigInt total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            image[0] = v;
            used[v] = true;
            total += extend(1);
            used[v] = false;
        }
        return total;
    }

    BigInt extend(int i) {
        if (++nodes > budget)
            throw ResourceError("count_injective: node budget exceeded");
        if (i > tree.edge_count())
            return 1;
        BigInt total = 0;
        for (int w : g.neighbors(image[tree.ancestor(i)])) {
            if (used[w]) continue;
            image[i] = w;
            used[w] = true;
            total += extend(i + 1);
            used[w] = false;
        }
        return total;
    }
};

} // namespace

BigInt count_injective(const RootedTree& t, const Graph& g, std::uint64_t node_budget) {
    InjectiveCounter counter{t, g, node_budget, 0, {}, {}};
    return counter.run();
}

BigInt count_walks(const Graph& g, int t) {
    if (t < 0) throw InputError("count_walks: negative length");
    const int n = g.vertex_count();
    std::vector<BigInt> cur(n, 1);
    for (int step = 0; step < t; ++step) {
        std::vector<BigInt> next(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v))
                next[v] += cur[w];
        cur = std::move(next);
    }
    BigInt total = 0;
    for (int v = 0; v < n; ++v)
        total += cur[v];
    return total;
}

BigInt count_nb_walks(const Graph& g, int t) {
    if (t < 0) throw InputError("count_nb_walks: negative length");
    if (t == 0) return g.vertex_count();
    // state = oriented edge (u -> v); the next edge {v, w} must differ from
    // {u, v}, which in a simple graph means w != u
    const int m = g.edge_count();
    std::vector<int> head(2 * m), tail(2 * m);
    std::vector<std::vector<int>> out_arcs(g.vertex_count());
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        tail[2 * e] = u;
        head[2 * e] = v;
        tail[2 * e + 1] = v;
        head[2 * e + 1] = u;
        out_arcs[u].push_back(2 * e);
        out_arcs[v].push_back(2 * e + 1);
    }
    std::vector<BigInt> cur(2 * m, 1);
    for (int step = 1; step < t; ++step) {
        std::vector<BigInt> next(2 * m, 0);
        for (int a = 0; a < 2 * m; ++a) {
            for (int b : out_arcs[head[a]])
                if (head[b] != tail[a])
                    next[a] += cur[b];
        }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (int a = 0; a < 2 * m; ++a)
        total += cur[a];
    return total;
}

BigInt count_forest(const std::vector<RootedTree>& forest, const Graph& g,
                    std::uint64_t node_budget) {
    // backtracking across components with a shared used-set
    struct ForestCounter {
        const std::vector<RootedTree>& forest;
        const Graph& g;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        std::vector<int> image;
        std::vector<bool> used;

        BigInt component(std::size_t c, int i) {
            if (++nodes > budget)
                throw ResourceError("count_forest: node budget exceeded");
            const RootedTree& t = forest[c];
            if (i > t.edge_count())
                return next_component(c + 1);
            BigInt total = 0;
            for (int w : g.neighbors(image[t.ancestor(i)])) {
                if (used[w]) continue;
                image[i] = w;
                used[w] = true;
                total += component(c, i + 1);
                used[w] = false;
            }
            return total;
        }

        BigInt next_component(std::size_t c) {
            if (c == forest.size())
                return 1;
            image.assign(forest[c].vertex_count(), -1);
            BigInt total = 0;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (used[v]) continue;
                image[0] = v;
                used[v] = true;
                total += component(c, 1);
                used[v] = false;
            }
            return total;
        }
    };
    ForestCounter counter{forest, g, node_budget, 0, {}, {}};
    counter.used.assign(g.vertex_count(), false);
    return counter.next_component(0);
}

std::string to_string(EqualityClass c) {
    switch (c) {
    case EqualityClass::clique_union_of_size_d_plus_1: return "clique_union_of_size_d_plus_1";
    case EqualityClass::d_regular: return "d_regular";
    case EqualityClass::other: return "other";
    case EqualityClass::not_applicable: return "not_applicable";
    }
    return "?";
}

CountReport main_bound_check(const RootedTree& t, const Graph& g, std::uint64_t node_budget) {
    CountReport r;
    r.mon_count = count_injective(t, g, node_budget);
    r.hom_count = count_hom_tree(t, g);
    r.bound = Rational(g.vertex_count()) *
              falling_factorial(g.average_degree(), static_cast<unsigned>(t.edge_count()));
    r.holds = Rational(r.mon_count) >= r.bound;
    r.equality = Rational(r.mon_count) == r.bound;
    if (!r.equality) {
        r.equality_classification = EqualityClass::not_applicable;
    } else if (t.diameter() >= 3) {
        r.equality_classification = is_clique_union_of_equal_cliques(g)
                                        ? EqualityClass::clique_union_of_size_d_plus_1
                                        : EqualityClass::other;
    } else if (t.diameter() == 2) {
        r.equality_classification =
            g.is_regular() ? EqualityClass::d_regular : EqualityClass::other;
    } else {
        // an edge or a point: every graph attains equality, the dichotomy
        // says nothing
        r.equality_classification = EqualityClass::not_applicable;
    }
    return r;
}

AdversaryBound adversary_lower_bound(const Graph& g, int t) {
    if (t <= 0) throw InputError("adversary_lower_bound: t must be positive");
    Rational base = g.average_degree() - t * (t - 1);
    AdversaryBound out;
    out.vacuous = base <= 0;
    Rational power = 1;
    for (int j = 0; j < t; ++j)
        power *= base;
    out.value = Rational(g.vertex_count()) * power;
    return out;
}

BipartiteBoundReport bipartite_bound(const Graph& g, const RootedTree& t) {
    auto parts = bipartition(g);
    if (!parts)
        throw InputError("bipartite_bound: graph is not bipartite");
    BipartiteBoundReport r;
    r.a = static_cast<int>(parts->first.size());
    r.b = static_cast<int>(parts->second.size());
    r.e = g.edge_count();
    auto [t1, t2] = t.bipartition_sizes();
    r.t1 = t1;
    r.t2 = t2;
    if (r.a == 0 || r.b == 0) {
        if (g.edge_count() > 0)
            throw InternalError("bipartite_bound: empty part with edges");
        // edgeless graph: both terms degenerate; report 0s except the t=0 case
        r.value = t.edge_count() == 0 ? Rational(g.vertex_count()) : Rational(0);
        r.value_swapped = r.value;
        r.swapped_defined = t.edge_count() == 0;
        return r;
    }
    Rational ea(r.e, r.a), eb(r.e, r.b);
    auto formula = [&](int tt1, int tt2) {
        return Rational(r.a) * falling_factorial(ea, tt2) * falling_factorial(eb, tt1 - 1) +
               Rational(r.b) * falling_factorial(ea, tt1 - 1) * falling_factorial(eb, tt2);
    };
    r.value = formula(t1, t2);
    r.swapped_defined = t2 >= 1;
    r.value_swapped = r.swapped_defined ? formula(t2, t1) : r.value;
    return r;
}

} // namespace montree
