#include "montree/distribution.hpp"
#include "montree/errors.hpp"
#include "montree/families.hpp"
#include "montree/tree_catalog.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace montree;

namespace {

RootedTree path_tree(int t) {
    return make_tree(parse_tree_family("path:t=" + std::to_string(t)));
}
RootedTree star_tree(int leaves) {
    return make_tree(parse_tree_family("star:leaves=" + std::to_string(leaves)));
}

std::vector<int> ancestors_of(const RootedTree& t) {
    std::vector<int> anc(t.vertex_count(), -1);
    for (int i = 1; i <= t.edge_count(); ++i)
        anc[i] = t.ancestor(i);
    return anc;
}

} // namespace

TEST_CASE("edge into K_2: two embeddings of mass one half") {
    auto dist = ExactDistribution::build(path_tree(1), make_clique_union(1, 2));
    REQUIRE(dist.level(1).size() == 2);
    for (const auto& e : dist.level(1))
        CHECK(e.prob == Rational(1, 2));
    CHECK(dist.failure_mass() == 0);
}

TEST_CASE("P2 into K4: uniform over 24 embeddings") {
    auto dist = ExactDistribution::build(path_tree(2), make_clique_union(1, 4));
    REQUIRE(dist.level(2).size() == 24);
    for (const auto& e : dist.level(2))
        CHECK(e.prob == Rational(1, 24));
    CHECK(dist.failure_mass() == 0);
    CHECK(dist.level_mass(2) == 1);
}

TEST_CASE("star into a path graph dead-ends") {
    auto dist = ExactDistribution::build(star_tree(3), make_path_graph(4));
    CHECK(dist.failure_mass() > 0);
    CHECK(dist.level(3).empty()); // no vertex has three distinct neighbors

    bool saw_dead_end = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        if (sample_greedy(star_tree(3), make_path_graph(4), seed).dead_end)
            saw_dead_end = true;
    CHECK(saw_dead_end);
}

TEST_CASE("clique unions never dead-end for t <= s-1") {
    for (int s = 3; s <= 6; ++s)
        for (const auto& t : enumerate_trees(s)) {
            auto dist = ExactDistribution::build(t, make_clique_union(2, s));
            CHECK(dist.failure_mass() == 0);
        }
}

TEST_CASE("probability conservation and level-0 marginals on random instances") {
    Rng rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        int tk = 2 + static_cast<int>(uniform_below(rng, 4));
        int n = 3 + static_cast<int>(uniform_below(rng, 5));
        Graph g = oracles::random_gnp(rng, n, 0.5);
        if (g.edge_count() == 0) continue;
        RootedTree t = RootedTree::from_edges(oracles::random_tree_edges(rng, tk));
        auto dist = ExactDistribution::build(t, g);

        // total mass splits exactly between survivors and dead ends
        CHECK(dist.level_mass(dist.top_level()) + dist.failure_mass() == 1);
        // every level: current mass + failures so far = 1
        for (int i = 0; i <= dist.top_level(); ++i)
            CHECK(dist.level_mass(i) + dist.failure_mass_through(i) == 1);

        for (int v = 0; v < n; ++v) {
            Rational marginal = 0;
            for (const auto& e : dist.level(0))
                if (e.images[0] == v) marginal += e.prob;
            CHECK(marginal == Rational(g.degree(v), 2 * g.edge_count()));
        }

        // restriction consistency: parents split exactly among children
        for (int i = 1; i <= dist.top_level(); ++i) {
            std::vector<Rational> child_sum(dist.level(i - 1).size(), Rational(0));
            for (const auto& e : dist.level(i))
                child_sum[e.parent] += e.prob;
            for (std::size_t k = 0; k < dist.level(i - 1).size(); ++k) {
                const auto& parent = dist.level(i - 1)[k];
                bool extendable = false;
                for (int w : g.neighbors(parent.images[t.ancestor(i)]))
                    if (std::find(parent.images.begin(), parent.images.end(), w) ==
                        parent.images.end())
                        extendable = true;
                if (extendable)
                    CHECK(child_sum[k] == parent.prob);
            }
        }

        // every stored probability matches the direct product formula
        auto anc = ancestors_of(t);
        for (const auto& e : dist.level(dist.top_level()))
            CHECK(e.prob == oracles::embedding_probability(anc, e.images, g));
    }
}

TEST_CASE("gamma probabilities") {
    Graph g = make_clique_union(1, 4);
    RootedTree t = path_tree(2);
    auto dist = ExactDistribution::build(t, g);

    for (int u = 0; u < 4; ++u)
        CHECK(dist.probability(GammaSelector::from(1, u)) == Rational(1, 4));

    Rational pair_total = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            pair_total += dist.probability(GammaSelector::pair_uv(1, u, v));
    CHECK(pair_total == 1 - dist.failure_mass());

    // path vs reversed path agree on the complete graph
    auto p = dist.probability(GammaSelector::along(1, {0, 1}));
    auto pr = dist.probability(GammaSelector::along(1, {1, 0}));
    CHECK(p == pr);
    CHECK(p > 0);

    CHECK_THROWS_AS(dist.probability(GammaSelector::along(1, {0, 1, 2})), InputError);
    CHECK_THROWS_AS(dist.probability(GammaSelector::to(2, 0)), InputError);
}

TEST_CASE("completeness filters partition each gamma set") {
    Rng rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracles::random_gnp_min_degree(rng, 7, 0.7, 4);
        RootedTree t = RootedTree::from_edges(oracles::random_tree_edges(rng, 5));
        auto dist = ExactDistribution::build(t, g);
        for (int i = 0; i < t.edge_count(); ++i)
            for (int u = 0; u < 7; ++u)
                for (int v = 0; v < 7; ++v) {
                    auto all = dist.probability(GammaSelector::pair_uv(i, u, v));
                    auto nc = dist.probability(
                        GammaSelector::pair_uv(i, u, v, CompletenessFilter::non_complete));
                    auto c = dist.probability(
                        GammaSelector::pair_uv(i, u, v, CompletenessFilter::complete_only));
                    CHECK(all == nc + c);
                }
    }
}

TEST_CASE("completeness classification") {
    Graph c5 = make_cycle(5);
    // trees whose x_0 -> anchor chain is shorter than 3 are always complete:
    // the required edges are tree edges
    RootedTree p3 = path_tree(3);
    PartialEmbedding lvl2{{0, 1, 2}};
    CHECK(classify_complete(p3, c5, lvl2));
    PartialEmbedding lvl1{{0, 1}};
    CHECK(classify_complete(p3, c5, lvl1)); // anchor a(2) = 1, vacuous

    // P4 at level 3: anchor x_3, interior x_1 must see gamma_3
    RootedTree p4 = path_tree(4);
    PartialEmbedding walk{{0, 1, 2, 3}};
    CHECK_FALSE(classify_complete(p4, c5, walk)); // {1,3} not an edge of C5

    Graph k5 = make_clique_union(1, 5);
    CHECK(classify_complete(p4, k5, walk)); // cliques are always complete
}

TEST_CASE("sampler matches the exact law in total variation") {
    Graph g = make_cycle(5);
    RootedTree t = path_tree(2);
    auto dist = ExactDistribution::build(t, g);
    REQUIRE(dist.level(2).size() <= 200);

    const int draws = 100000;
    std::map<std::vector<int>, long> freq;
    long dead = 0;
    for (int s = 0; s < draws; ++s) {
        auto res = sample_greedy(t, g, 1000 + s);
        if (res.dead_end)
            ++dead;
        else
            ++freq[res.embedding.images];
    }
    double tv = 0.0;
    for (const auto& e : dist.level(2)) {
        double emp = static_cast<double>(freq[e.images]) / draws;
        tv += std::abs(emp - to_double(e.prob));
    }
    tv += std::abs(static_cast<double>(dead) / draws - to_double(dist.failure_mass()));
    CHECK(tv / 2 <= 0.02);
}

TEST_CASE("sampler is deterministic per seed") {
    Graph g = make_clique_union(2, 5);
    RootedTree t = path_tree(3);
    auto a = sample_greedy(t, g, 12345);
    auto b = sample_greedy(t, g, 12345);
    CHECK(a.embedding.images == b.embedding.images);
    CHECK(a.dead_end == b.dead_end);
}

TEST_CASE("embedding budget is enforced") {
    CHECK_THROWS_AS(ExactDistribution::build(path_tree(3), make_clique_union(1, 8), 50),
                    ResourceError);
    CHECK_THROWS_AS(ExactDistribution::build(path_tree(1), load_graph("n=2\n")), InputError);
}
