#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <threeev/graph.hpp>

#include <sstream>

using namespace threeev;

TEST_CASE("petersen") {
    auto g = build_petersen();
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.connected());
    // triangle-free
    for (int v = 0; v < 10; ++v) CHECK(g.closed_walks3_at(v) == 0);
}

TEST_CASE("petersen cone") {
    auto g = build_cone(build_petersen());
    CHECK(g.order() == 11);
    CHECK(g.edge_count() == 25);
    CHECK(g.degree(10) == 10);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
    // apex triangles = edges of the Petersen graph
    CHECK(g.closed_walks3_at(10) == 30);
    CHECK(g.closed_walks3_at(0) == 6);
}

TEST_CASE("fano graph") {
    auto g = build_fano();
    CHECK(g.order() == 14);
    CHECK(g.edge_count() == 49);
    int deg4 = 0, deg10 = 0;
    for (int v = 0; v < 14; ++v) {
        if (g.degree(v) == 4) ++deg4;
        if (g.degree(v) == 10) ++deg10;
    }
    CHECK(deg4 == 7);
    CHECK(deg10 == 7);
    // outer vertex: 4 inner neighbours forming a clique, 6 triangles
    CHECK(g.closed_walks3_at(0) == 12);
}

TEST_CASE("complete bipartite") {
    auto g = build_complete_bipartite(3, 2);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(g.connected());
    CHECK_THROWS_AS(build_complete_bipartite(0, 2), std::invalid_argument);
    // star is a cone over an empty graph
    auto star = build_complete_bipartite(1, 6);
    CHECK(star.degree(0) == 6);
}

TEST_CASE("valency partition and equitability") {
    auto cone = build_cone(build_petersen());
    auto parts = valency_partition(cone);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 10);
    CHECK(parts[1].size() == 1);
    auto eq = is_equitable(cone, parts);
    CHECK(eq.equitable);
    CHECK(eq.quotient == std::vector<std::vector<i64>>{{3, 1}, {10, 0}});

    auto fano = build_fano();
    auto feq = is_equitable(fano, valency_partition(fano));
    CHECK(feq.equitable);
    CHECK(feq.quotient == std::vector<std::vector<i64>>{{0, 4}, {4, 6}});

    // P4's valency partition happens to be equitable; P5's is not (the middle
    // vertex sees two degree-2 neighbours, its neighbours only one)
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(is_equitable(p4, valency_partition(p4)).equitable);
    Graph p5(5);
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1);
    CHECK_FALSE(is_equitable(p5, valency_partition(p5)).equitable);
}

TEST_CASE("file format round trip") {
    auto g = build_fano();
    std::stringstream ss;
    write_graph(ss, g);
    auto h = read_graph(ss);
    CHECK(h.order() == g.order());
    CHECK(h.edges() == g.edges());
    CHECK(edges_hash(h) == edges_hash(g));
}

TEST_CASE("loader rejects malformed input") {
    {
        std::stringstream ss("3 1\n0 0\n");
        CHECK_THROWS_AS(read_graph(ss), std::invalid_argument);  // loop
    }
    {
        std::stringstream ss("3 2\n0 1\n0 1\n");
        CHECK_THROWS_AS(read_graph(ss), std::invalid_argument);  // duplicate
    }
    {
        std::stringstream ss("3 2\n0 1\n");
        CHECK_THROWS_AS(read_graph(ss), std::invalid_argument);  // truncated
    }
    {
        std::stringstream ss("2 1\n0 5\n");
        CHECK_THROWS_AS(read_graph(ss), std::invalid_argument);  // out of range
    }
}

TEST_CASE("common neighbours and adjacency") {
    auto g = build_petersen();
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            CHECK(g.common_neighbors(u, v) == (g.adjacent(u, v) ? 0 : 1));
}
