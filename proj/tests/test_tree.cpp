#include "montree/errors.hpp"
#include "montree/tree.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace montree;

TEST_CASE("path 0-1-2 keeps its natural order") {
    RootedTree t = RootedTree::from_edges({{0, 1}, {1, 2}});
    CHECK(t.edge_count() == 2);
    CHECK(t.original_label(0) == 0);
    CHECK(t.original_label(1) == 1);
    CHECK(t.original_label(2) == 2);
    CHECK(t.ancestor(1) == 0);
    CHECK(t.ancestor(2) == 1);
    CHECK(t.diameter() == 2);
}

TEST_CASE("star roots at a leaf, never the center") {
    RootedTree t = RootedTree::from_edges({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(t.original_label(0) == 1); // lowest-id leaf
    CHECK(t.original_label(1) == 0); // the center comes second
    CHECK(t.ancestor(1) == 0);
    CHECK(t.ancestor(2) == 1);
    CHECK(t.ancestor(3) == 1);
    CHECK(t.ancestor(4) == 1);
    CHECK(t.diameter() == 2);
}

TEST_CASE("spider 0-1-2-3 with 1-4") {
    RootedTree t = RootedTree::from_edges({{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    CHECK(t.diameter() == 3);
    auto [t1, t2] = t.bipartition_sizes();
    CHECK(t1 + t2 == 5);
    CHECK(t1 == 3);
    CHECK(t2 == 2);
    CHECK(t.original_label(0) == 0);
    CHECK(t.ancestor(1) == 0);
    // BFS from 0: 1, then {2, 4} in label order, then 3
    CHECK(t.original_label(2) == 2);
    CHECK(t.original_label(3) == 4);
    CHECK(t.original_label(4) == 3);
    CHECK(t.ancestor(4) == 2);
}

TEST_CASE("rejects cycles and disconnected input") {
    CHECK_THROWS_AS(RootedTree::from_edges({{0, 1}, {1, 2}, {2, 0}}), InputError);
    CHECK_THROWS_AS(RootedTree::from_edges({{0, 1}, {2, 3}}), InputError);
    // n-1 edges but disconnected (so there is a cycle elsewhere)
    CHECK_THROWS_AS(RootedTree::from_edges({{0, 1}, {2, 3}, {3, 4}, {4, 2}}), InputError);
    CHECK_THROWS_AS(RootedTree::from_edges({{0, 1}, {0, 1}}), InputError);
}

TEST_CASE("BFS order properties on random trees") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int k = 2 + static_cast<int>(uniform_below(rng, 8));
        auto edges = oracles::random_tree_edges(rng, k);
        RootedTree t = RootedTree::from_edges(edges);
        for (int i = 1; i <= t.edge_count(); ++i)
            CHECK(t.ancestor(i) < i);
        // x_0 is a leaf: exactly one child
        CHECK(t.children(0).size() == 1);
        auto [t1, t2] = t.bipartition_sizes();
        CHECK(t1 + t2 == k);
        CHECK(t.diameter() == oracles::brute_tree_diameter(k, edges));

        // stability: rebuilding gives the identical ordering
        RootedTree t2nd = RootedTree::from_edges(edges);
        for (int i = 0; i < t.vertex_count(); ++i)
            CHECK(t.original_label(i) == t2nd.original_label(i));
    }
}

TEST_CASE("root path follows the ancestor chain") {
    RootedTree t = RootedTree::from_edges({{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    auto path = t.root_path(4); // x_4 = original 3, chain 0 -> 1 -> 2 -> 4
    REQUIRE(path.size() == 4);
    CHECK(path[0] == 0);
    CHECK(path[3] == 4);

    CHECK(t.is_leaf_in_prefix(2, 2));
    CHECK_FALSE(t.is_leaf_in_prefix(2, 4));
    CHECK(t.is_leaf_in_prefix(3, 4));
}

TEST_CASE("single vertex tree") {
    RootedTree t = RootedTree::single_vertex();
    CHECK(t.edge_count() == 0);
    CHECK(t.vertex_count() == 1);
    CHECK(t.diameter() == 0);
    CHECK(t.bipartition_sizes().first == 1);
}

TEST_CASE("arbitrary labels are compacted but remembered") {
    RootedTree t = RootedTree::from_edges({{10, 20}, {20, 30}});
    CHECK(t.vertex_count() == 3);
    CHECK(t.original_label(0) == 10);
    CHECK(t.original_label(2) == 30);
}
