#include <doctest.h>

#include <algorithm>

#include "alphagraph/generators.hpp"
#include "alphagraph/graph.hpp"
#include "alphagraph/reference.hpp"

using namespace alphagraph;

TEST_CASE("parsing accepts the smallest connected graph") {
    Graph g = Graph::parse("2 1\n0 1");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("parsing builds a five-cycle") {
    Graph g = Graph::parse("5 5\n0 1\n1 2\n2 3\n3 4\n4 0");
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("header consistency is enforced") {
    CHECK_NOTHROW(Graph::parse("4 5\n0 1\n1 2\n2 3\n3 0\n0 2\n"));
    CHECK_THROWS_AS(Graph::parse("4 5\n0 1\n1 2\n2 3\n3 0\n"), GraphFormatError);
}

TEST_CASE("distinct diagnostics for the malformed cases") {
    CHECK_THROWS_AS(Graph::parse("not a graph"), GraphFormatError);
    CHECK_THROWS_AS(Graph::parse("3 1\n1 1"), GraphFormatError);           // loop
    CHECK_THROWS_AS(Graph::parse("3 2\n0 1\n1 0"), GraphFormatError);      // duplicate
    CHECK_THROWS_AS(Graph::parse("3 3\n0 1\n1 2\n0 5"), GraphFormatError); // range
    CHECK_THROWS_AS(Graph::parse("4 1\n0 1"), DisconnectedGraphError);
}

TEST_CASE("bfs distances on the named small graphs") {
    Graph p5 = gen_named("p5").graph;
    DistanceRow row = bfs(p5, 0);
    CHECK(row.dist == std::vector<Dist>{0, 1, 2, 3, 4});

    Graph c6 = gen_named("c6").graph;
    row = bfs(c6, 0);
    CHECK(row.dist == std::vector<Dist>{0, 1, 2, 3, 2, 1});
}

TEST_CASE("bfs parent tie-break picks the minimum id") {
    Graph c5 = gen_named("c5").graph;
    DistanceRow row = bfs(c5, 0);
    CHECK(row.parent[2] == 1);
    CHECK(row.parent[0] == 0);
}

TEST_CASE("canonical paths") {
    Graph p5 = gen_named("p5").graph;
    CHECK(canonical_path(p5, 0, 4) == std::vector<Vertex>{0, 1, 2, 3, 4});
    Graph c5 = gen_named("c5").graph;
    CHECK(canonical_path(c5, 0, 2) == std::vector<Vertex>{0, 1, 2});
    CHECK(canonical_path(c5, 3, 3) == std::vector<Vertex>{3});
}

TEST_CASE("intervals and slices") {
    Graph c6 = gen_named("c6").graph;
    CHECK(interval(c6, 0, 3) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK(slice(c6, 0, 3, 1) == std::vector<Vertex>{1, 5});

    Graph c5 = gen_named("c5").graph;
    CHECK(interval(c5, 0, 2) == std::vector<Vertex>{0, 1, 2});

    Graph p5 = gen_named("p5").graph;
    CHECK(slice(p5, 0, 4, 2) == std::vector<Vertex>{2});
    CHECK_THROWS_AS(slice(p5, 0, 4, 5), std::out_of_range);
    CHECK_THROWS_AS(slice(p5, 0, 4, -1), std::out_of_range);
}

TEST_CASE("random graphs: distances symmetric, paths canonical, intervals cover") {
    for (int t = 0; t < 12; ++t) {
        Rng r(Rng::split(90210, t));
        Vertex n = 5 + static_cast<Vertex>(r.below(40));
        Graph g = gen_gnp_connected(n, r.next(), 0.12).graph;
        DistanceMatrix dm(g);

        for (int q = 0; q < 10; ++q) {
            Vertex a = static_cast<Vertex>(r.below(n));
            Vertex b = static_cast<Vertex>(r.below(n));
            Vertex c = static_cast<Vertex>(r.below(n));
            CHECK(dm.at(a, b) == dm.at(b, a));
            CHECK(dm.at(a, c) <= dm.at(a, b) + dm.at(b, c));

            auto path = canonical_path(g, a, b);
            REQUIRE(static_cast<Dist>(path.size()) == dm.at(a, b) + 1);
            for (std::size_t j = 0; j + 1 < path.size(); ++j) {
                CHECK(g.has_edge(path[j], path[j + 1]));
                CHECK(dm.at(a, path[j]) == static_cast<Dist>(j));
            }
            auto between = interval(g, a, b);
            for (Vertex p : path)
                CHECK(std::binary_search(between.begin(), between.end(), p));
        }
    }
}

TEST_CASE("parallel distance matrix agrees with the serial reference") {
    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(5150, t));
        Graph g = gen_gnp_connected(6 + static_cast<Vertex>(r.below(30)), r.next(), 0.15).graph;
        DistanceMatrix dm(g);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            auto row = ref::frontier_distances(g, v);
            for (Vertex u = 0; u < g.num_vertices(); ++u) CHECK(dm.at(v, u) == row[u]);
        }
    }
}

TEST_CASE("edge-list round trip is canonical") {
    Graph g = gen_chordal(40, 7, 3).graph;
    Graph back = Graph::parse(g.to_edge_list_text());
    CHECK(g == back);
}

TEST_CASE("bfs invocation counter moves") {
    Graph g = gen_named("c6").graph;
    reset_bfs_invocations();
    (void)bfs(g, 0);
    (void)multi_source_dist(g, std::vector<Vertex>{0, 1});
    CHECK(bfs_invocations() == 2);
}
