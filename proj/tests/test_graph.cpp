#include "montree/errors.hpp"
#include "montree/families.hpp"
#include "montree/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace montree;

TEST_CASE("load_graph parses a path on 3 vertices") {
    Graph g = load_graph("0 1\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.average_degree() == Rational(4, 3));
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("load_graph rejects duplicates, loops and malformed lines") {
    CHECK_THROWS_AS(load_graph("0 1\n0 1"), InputError);
    CHECK_THROWS_AS(load_graph("0 1\n1 0"), InputError);
    CHECK_THROWS_AS(load_graph("0 0"), InputError);
    CHECK_THROWS_WITH_AS(load_graph("0 1\nbogus"), doctest::Contains("line 2"), InputError);
    CHECK_THROWS_WITH_AS(load_graph("0 1\n2"), doctest::Contains("line 2"), InputError);
}

TEST_CASE("load_graph header declares isolated vertices") {
    Graph g = load_graph("n=5\n0 1\n# comment\n\n1 2");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(4) == 0);
    CHECK_THROWS_AS(load_graph("n=2\n0 3"), InputError);
}

TEST_CASE("clique union generator") {
    Graph g1 = make_clique_union(1, 2);
    CHECK(g1.vertex_count() == 2);
    CHECK(g1.edge_count() == 1);

    Graph g = make_clique_union(3, 4);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 18);
    CHECK(g.average_degree() == Rational(3));
    CHECK(g.min_degree() == 3);

    CHECK(make_clique_union(2, 5).average_degree() == Rational(4));
    CHECK_THROWS_AS(make_clique_union(0, 3), InputError);
}

TEST_CASE("complete bipartite generator") {
    CHECK(make_complete_bipartite(1, 1).edge_count() == 1);

    Graph g = make_complete_bipartite(2, 3);
    CHECK(g.edge_count() == 6);
    CHECK(g.average_degree() == Rational(12, 5));

    Graph h = make_complete_bipartite(2, 8);
    CHECK(h.average_degree() == Rational(16, 5));
    int eights = 0, twos = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) == 8) ++eights;
        if (h.degree(v) == 2) ++twos;
    }
    CHECK(eights == 2);
    CHECK(twos == 8);
}

TEST_CASE("handshake identity on random graphs") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(uniform_below(rng, 9));
        Graph g = oracles::random_gnp(rng, n, 0.4);
        long sum = 0;
        for (int v = 0; v < n; ++v)
            sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
        CHECK(g.average_degree() * n == Rational(2 * g.edge_count()));
    }
}

TEST_CASE("clique-union recognizer") {
    CHECK(is_clique_union_of_equal_cliques(make_clique_union(3, 4)));
    CHECK(is_clique_union_of_equal_cliques(make_clique_union(1, 5)));
    CHECK(is_clique_union_of_equal_cliques(make_clique_union(4, 2)));
    CHECK_FALSE(is_clique_union_of_equal_cliques(make_complete_bipartite(2, 2)));
    // equal-size components that are not cliques
    CHECK_FALSE(is_clique_union_of_equal_cliques(load_graph("0 1\n1 2\n2 3\n4 5\n5 6\n6 7")));
    // cliques of different sizes
    CHECK_FALSE(is_clique_union_of_equal_cliques(load_graph("n=5\n0 1\n2 3\n3 4\n2 4")));
}

TEST_CASE("bipartition finds parts and rejects odd cycles") {
    auto parts = bipartition(make_complete_bipartite(2, 6));
    REQUIRE(parts.has_value());
    CHECK(parts->first.size() == 2);
    CHECK(parts->second.size() == 6);
    CHECK_FALSE(bipartition(make_cycle(5)).has_value());
    CHECK(bipartition(make_cycle(6)).has_value());
}

TEST_CASE("family spec parsing") {
    Graph g = make_graph(parse_graph_family("clique_union:k=3,s=4"));
    CHECK(g.vertex_count() == 12);
    CHECK(make_graph(parse_graph_family("cycle:n=5")).edge_count() == 5);
    CHECK(make_graph(parse_graph_family("path:n=4")).edge_count() == 3);
    CHECK(make_graph(parse_graph_family("complete_bipartite:a=2,b=6")).edge_count() == 12);
    CHECK_THROWS_AS(parse_graph_family("torus:n=3"), InputError);
    CHECK_THROWS_AS(parse_graph_family("clique_union:k=3"), InputError);
    CHECK_THROWS_AS(make_graph(parse_graph_family("file:/does/not/exist")), IoError);
}

TEST_CASE("split graph degrees") {
    Graph g = make_split_graph(3, 12);
    CHECK(g.edge_count() == 3 + 3 * 9); // C(3,2) + 3*9
    CHECK(g.degree(0) == 11);
    CHECK(g.degree(11) == 3);
}
