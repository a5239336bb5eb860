#include <doctest.h>

#include "alphagraph/classifier.hpp"
#include "alphagraph/generators.hpp"
#include "alphagraph/reference.hpp"

using namespace alphagraph;

TEST_CASE("alpha index of the named graphs, frozen against the quadruple scan") {
    Graph k4 = gen_named("k4").graph;
    Graph c5 = gen_named("c5").graph;
    Graph c6 = gen_named("c6").graph;
    Graph c4 = gen_named("c4").graph;

    CHECK(ref::alpha_index_bruteforce(k4) == 0);
    CHECK(ref::alpha_index_bruteforce(c5) == 1);
    // On the six-cycle the worst gluing is u=4, v=0, w=1, x=3: two shortest
    // paths of lengths 2 and 3 meet at the edge 01 while d(4,3) = 1.
    CHECK(ref::alpha_index_bruteforce(c6) == 4);

    CHECK(alpha_index(k4) == 0);
    CHECK(alpha_index(c5) == 1);
    CHECK(alpha_index(c6) == 4);
    CHECK(alpha_index(c4) == 2);
}

TEST_CASE("edge scan equals the quadruple scan on random graphs") {
    for (int t = 0; t < 10; ++t) {
        Rng r(Rng::split(1001, t));
        Graph g = gen_gnp_connected(6 + static_cast<Vertex>(r.below(18)), r.next(), 0.2).graph;
        CHECK(alpha_index(g) == ref::alpha_index_bruteforce(g));
    }
}

TEST_CASE("interval thinness, frozen against direct enumeration") {
    Graph tree = gen_distance_hereditary(25, 5, {1, 0, 0}).graph;
    CHECK(ref::interval_thinness_bruteforce(tree) == 0);
    CHECK(interval_thinness(tree) == 0);

    Graph c4 = gen_named("c4").graph;
    CHECK(ref::interval_thinness_bruteforce(c4) == 2);
    CHECK(interval_thinness(c4) == 2);

    Graph c6 = gen_named("c6").graph;
    CHECK(ref::interval_thinness_bruteforce(c6) == 2);
    CHECK(interval_thinness(c6) == 2);
}

TEST_CASE("thinness never exceeds alpha plus one") {
    for (int t = 0; t < 12; ++t) {
        Rng r(Rng::split(2002, t));
        Graph g = gen_gnp_connected(5 + static_cast<Vertex>(r.below(25)), r.next(), 0.18).graph;
        DistanceMatrix dm(g);
        CHECK(interval_thinness(g, dm) <= alpha_index(g, dm) + 1);
    }
}

TEST_CASE("disk convexity matches the literal scan") {
    Graph c5 = gen_named("c5").graph;
    CHECK(ref::disks_convex_bruteforce(c5));
    CHECK(disks_convex(c5));

    Graph c6 = gen_named("c6").graph;
    CHECK_FALSE(ref::disks_convex_bruteforce(c6));
    CHECK_FALSE(disks_convex(c6));
    DistanceMatrix dm(c6);
    auto witness = disks_convex_witness(c6, dm);
    REQUIRE(witness.has_value());
    auto [x, y, v, z] = *witness;
    CHECK(dm.at(x, v) + dm.at(v, y) == dm.at(x, y));
    CHECK(dm.at(v, z) > std::max(dm.at(x, z), dm.at(y, z)));

    Graph tree = gen_distance_hereditary(20, 11, {1, 0, 0}).graph;
    CHECK(disks_convex(tree));

    for (int t = 0; t < 8; ++t) {
        Rng r(Rng::split(3003, t));
        Graph g = gen_gnp_connected(5 + static_cast<Vertex>(r.below(16)), r.next(), 0.25).graph;
        CHECK(disks_convex(g) == ref::disks_convex_bruteforce(g));
    }
}

TEST_CASE("degree-k convexity") {
    Graph c6 = gen_named("c6").graph;
    CHECK(dk_convex(c6, {2}, 0));
    CHECK(dk_convex(c6, {0, 1, 2, 3, 4, 5}, 0));
    CHECK_FALSE(dk_convex(c6, {0, 3}, 2));
    CHECK(dk_convex(c6, {0, 3}, 4));  // no pair reaches distance 4

    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(4004, t));
        Graph g = gen_gnp_connected(12, r.next(), 0.2).graph;
        std::vector<Vertex> set;
        for (Vertex v = 0; v < 12; ++v)
            if (r.below(2)) set.push_back(v);
        if (set.empty()) set.push_back(0);
        Dist k = static_cast<Dist>(r.below(4)) - 1;
        CHECK(dk_convex(g, set, k) == ref::dk_convex_bruteforce(g, set, k));
    }
}

TEST_CASE("isometric embedding search") {
    Graph k4 = gen_named("k4").graph;
    Graph c3 = Graph::parse("3 3\n0 1\n1 2\n2 0");
    CHECK(find_isometric(c3, k4).has_value());

    Graph c4 = gen_named("c4").graph;
    Graph c5 = gen_named("c5").graph;
    CHECK_FALSE(find_isometric(c4, c5).has_value());

    Graph p3 = Graph::parse("3 2\n0 1\n1 2");
    Graph p5 = gen_named("p5").graph;
    auto embedding = find_isometric(p3, p5);
    REQUIRE(embedding.has_value());
    CHECK(*embedding == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("isometric embeddings preserve every pairwise distance") {
    Graph c6 = gen_named("c6").graph;
    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(6006, t));
        Graph host = gen_gnp_connected(14, r.next(), 0.3).graph;
        auto embedding = find_isometric(c6, host);
        if (!embedding.has_value()) continue;
        DistanceMatrix dp(c6), dh(host);
        for (Vertex a = 0; a < 6; ++a)
            for (Vertex b = 0; b < 6; ++b)
                CHECK(dh.at((*embedding)[a], (*embedding)[b]) == dp.at(a, b));
    }
}

TEST_CASE("triangle condition") {
    CHECK_FALSE(ref::triangle_condition_bruteforce(gen_named("c5").graph));
    CHECK_FALSE(triangle_condition(gen_named("c5").graph));
    CHECK(triangle_condition(gen_named("k4").graph));
    for (int t = 0; t < 8; ++t) {
        Rng r(Rng::split(7007, t));
        Graph g = gen_chordal(40, r.next(), 3).graph;
        CHECK(triangle_condition(g));
    }
}

TEST_CASE("class containments, small corpora") {
    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(8008, t));
        CHECK(alpha_index(gen_chordal(50, r.next(), 3).graph) <= 1);
        CHECK(alpha_index(gen_distance_hereditary(40, r.next(), {1, 1, 1}).graph) <= 2);
        CHECK(alpha_index(gen_ptolemaic(30, r.next()).graph) == 0);
    }
}

TEST_CASE("universal vertex over a four-cycle raises the index") {
    // Cone over C4: adding an apex to a graph with an induced C4.
    Graph coned = Graph::parse("5 8\n0 1\n1 2\n2 3\n3 0\n4 0\n4 1\n4 2\n4 3");
    CHECK(alpha_index(coned) >= 2);

    // Cone over a four-cycle-free graph stays at most one.
    Graph path_cone = Graph::parse("4 5\n0 1\n1 2\n3 0\n3 1\n3 2");
    CHECK(alpha_index(path_cone) <= 1);
}

TEST_CASE("classifier profile ties the pieces together") {
    MetricProfile profile = classify(gen_named("c5").graph);
    CHECK(profile.alpha_index == 1);
    CHECK(profile.thinness <= 2);
    CHECK(profile.disks_convex);
    CHECK_FALSE(profile.triangle_condition);
    CHECK_FALSE(profile.alpha1_by_characterization.has_value());
}
