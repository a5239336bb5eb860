#include <doctest.h>

#include <set>

#include "alphagraph/classifier.hpp"
#include "alphagraph/generators.hpp"

using namespace alphagraph;

TEST_CASE("identical specs give byte-identical graphs") {
    GenSpec spec;
    spec.cls = "chordal";
    spec.n = 120;
    spec.seed = 424242;
    spec.max_attach = 4;
    CHECK(generate(spec).graph.to_edge_list_text() == generate(spec).graph.to_edge_list_text());

    spec.cls = "gnp_connected";
    spec.edge_prob = 0.14;
    CHECK(generate(spec).graph.to_edge_list_text() == generate(spec).graph.to_edge_list_text());

    // Different seeds actually vary.
    GenSpec other = spec;
    other.seed = 424243;
    CHECK(generate(spec).graph.to_edge_list_text() != generate(other).graph.to_edge_list_text());
}

TEST_CASE("chordal growth emits a valid elimination order") {
    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(222, t));
        GenResult res = gen_chordal(60, r.next(), 4);
        const Graph& g = res.graph;
        REQUIRE(res.elimination_order.size() == static_cast<std::size_t>(g.num_vertices()));
        // Later vertices eliminated first; at each step the remaining
        // neighborhood must be a clique.
        std::set<Vertex> gone;
        for (Vertex v : res.elimination_order) {
            std::vector<Vertex> kept;
            for (Vertex w : g.neighbors(v))
                if (!gone.count(w)) kept.push_back(w);
            for (std::size_t i = 0; i < kept.size(); ++i)
                for (std::size_t j = i + 1; j < kept.size(); ++j)
                    CHECK(g.has_edge(kept[i], kept[j]));
            gone.insert(v);
        }
    }
}

TEST_CASE("tiny chordal graphs are what they should be") {
    CHECK(gen_chordal(1, 9, 3).graph.num_vertices() == 1);
    GenResult res = gen_chordal(3, 5, 2);
    CHECK(res.graph.num_vertices() == 3);
    CHECK((res.graph.num_edges() == 2 || res.graph.num_edges() == 3));
}

TEST_CASE("distance-hereditary special mixes") {
    Graph tree = gen_distance_hereditary(30, 8, {1, 0, 0}).graph;
    CHECK(tree.num_edges() == tree.num_vertices() - 1);

    Graph complete = gen_distance_hereditary(8, 8, {0, 1, 0}).graph;
    CHECK(complete.num_edges() == 8 * 7 / 2);

    CHECK_THROWS_AS(gen_distance_hereditary(5, 1, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("ptolemaic samples verify their class") {
    for (int t = 0; t < 5; ++t) {
        Rng r(Rng::split(333, t));
        GenResult res = gen_ptolemaic(40, r.next());
        CHECK(alpha_index(res.graph) == 0);
    }
}

TEST_CASE("fixed named graphs") {
    CHECK(gen_named("c5").graph.num_edges() == 5);
    CHECK(gen_named("p5").graph.num_edges() == 4);
    CHECK(gen_named("k4").graph.num_edges() == 6);
    CHECK(gen_named("diamond").graph.num_edges() == 5);
    CHECK_THROWS_AS(gen_named("heptagon"), std::invalid_argument);
    CHECK_THROWS_AS(gen_named("w6pp", "/nonexistent/w6pp.edges"), PatternUnavailable);
}

TEST_CASE("grids, cycles, paths, gnp") {
    Graph grid = gen_grid(3, 4).graph;
    CHECK(grid.num_vertices() == 12);
    CHECK(grid.num_edges() == 3 * 3 + 2 * 4);

    CHECK(gen_cycle(6).graph.num_edges() == 6);
    CHECK(gen_path(6).graph.num_edges() == 5);

    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(444, t));
        Graph g = gen_gnp_connected(30, r.next(), 0.05).graph;
        CHECK(g.num_vertices() == 30);  // connectivity is enforced by construction
    }
}
