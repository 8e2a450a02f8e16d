#include "montree/families.hpp"
#include "montree/prune.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace montree;

namespace {

// step-by-step reference simulation, recomputed from scratch every round
std::vector<int> simulate_deletions(Graph g) {
    std::vector<int> alive(g.vertex_count());
    std::iota(alive.begin(), alive.end(), 0);
    std::vector<Edge> edges = g.edges();
    std::vector<int> deleted;
    for (;;) {
        int n = static_cast<int>(alive.size());
        if (n == 0) break;
        long m = static_cast<long>(edges.size());
        int victim = -1, victim_deg = -1;
        for (int v : alive) {
            int deg = 0;
            for (auto [a, b] : edges)
                if (a == v || b == v) ++deg;
            if (Rational(deg) < Rational(2 * m, n) / 4 &&
                (victim < 0 || deg < victim_deg)) {
                victim = v;
                victim_deg = deg;
            }
        }
        if (victim < 0) break;
        deleted.push_back(victim);
        alive.erase(std::find(alive.begin(), alive.end(), victim));
        std::erase_if(edges, [&](const Edge& e) { return e.first == victim || e.second == victim; });
    }
    return deleted;
}

} // namespace

TEST_CASE("regular graphs are untouched") {
    auto res = min_degree_prune(make_clique_union(2, 4));
    CHECK(res.steps.empty());
    CHECK(res.pruned.vertex_count() == 8);
}

TEST_CASE("star K_{1,9}: no vertex below d/4") {
    auto res = min_degree_prune(make_complete_bipartite(1, 9));
    CHECK(res.steps.empty()); // threshold 9/20 < 1
}

TEST_CASE("K_5 with one pendant survives") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            edges.emplace_back(i, j);
    edges.emplace_back(0, 5);
    auto res = min_degree_prune(Graph::from_edges(6, edges));
    CHECK(res.steps.empty()); // d = 11/3, threshold 11/12 < 1
}

TEST_CASE("K_8 with a pendant chain prunes the chain") {
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            edges.emplace_back(i, j);
    edges.emplace_back(0, 8);
    edges.emplace_back(8, 9);
    edges.emplace_back(9, 10);
    Graph g = Graph::from_edges(11, edges);
    auto res = min_degree_prune(g);
    auto expected = simulate_deletions(g);
    REQUIRE(res.steps.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(res.steps[i].vertex == expected[i]);
    CHECK(res.pruned.vertex_count() == 8);
    CHECK(res.pruned.edge_count() == 28);
}

TEST_CASE("prune matches the reference simulation on random graphs") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(uniform_below(rng, 9));
        Graph g = oracles::random_gnp(rng, n, 0.25 + 0.5 * uniform_unit(rng));
        auto res = min_degree_prune(g);
        auto expected = simulate_deletions(g);
        REQUIRE(res.steps.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(res.steps[i].vertex == expected[i]);

        // postcondition: empty, or min degree >= d/4 exactly
        const Graph& h = res.pruned;
        if (h.vertex_count() > 0)
            CHECK(Rational(h.min_degree()) >= h.average_degree() / 4);
        // trace bookkeeping is self-consistent
        for (const auto& s : res.steps) {
            CHECK(s.n_after == s.n_before - 1);
            CHECK(s.m_after == s.m_before - s.degree_at_deletion);
            CHECK(Rational(s.degree_at_deletion) < Rational(2 * s.m_before, s.n_before) / 4);
        }
    }
}

TEST_CASE("each deletion step improves n(d)_t in the dense regime") {
    Rng rng(37);
    for (int t : {2, 3}) {
        int done = 0;
        while (done < 25) {
            int n = 6 + static_cast<int>(uniform_below(rng, 7));
            Graph g = oracles::random_gnp(rng, n, 0.55 + 0.4 * uniform_unit(rng));
            if (g.average_degree() < t) continue;
            ++done;
            auto res = min_degree_prune(g);
            for (const auto& s : res.steps) {
                Rational d_before(2 * s.m_before, s.n_before);
                Rational d_after(2 * s.m_after, s.n_after == 0 ? 1 : s.n_after);
                CHECK(Rational(s.n_after) * falling_factorial(d_after, t) >=
                      Rational(s.n_before) * falling_factorial(d_before, t));
            }
        }
    }
}
