#include <doctest.h>

#include <algorithm>

#include "alphagraph/center_search.hpp"
#include "alphagraph/generators.hpp"
#include "alphagraph/oracle.hpp"

using namespace alphagraph;

TEST_CASE("the pentagon edge has no gate for the opposite vertex") {
    Graph c5 = gen_named("c5").graph;
    GateMap gm = compute_gates(c5, {0, 1});
    CHECK(gm.dist_to_target[3] == 2);
    CHECK(gm.candidate[3] == 2);  // propagation still nominates the min-id side
    CHECK_FALSE(verified_gate(c5, gm, 3));
}

TEST_CASE("path gates verify everywhere") {
    Graph p5 = gen_named("p5").graph;
    GateMap gm = compute_gates(p5, {0});
    for (Vertex v = 0; v < 5; ++v) CHECK(verified_gate(p5, gm, v));
    CHECK(gm.candidate[4] == 1);
}

TEST_CASE("chordal neighborhood gates always verify") {
    for (int t = 0; t < 8; ++t) {
        Rng r(Rng::split(12021, t));
        Graph g = gen_chordal(60, r.next(), 3).graph;
        DistanceMatrix dm(g);
        Vertex x = static_cast<Vertex>(r.below(60));
        std::vector<Vertex> ball{x};
        for (Vertex w : g.neighbors(x)) ball.push_back(w);
        GateMap gm = compute_gates(g, ball);
        for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(verified_gate(g, gm, v, dm));
    }
}

TEST_CASE("distance-two gates on the pentagon") {
    Graph c5 = gen_named("c5").graph;
    D2GateMap d2 = compute_d2_gates(c5, {0, 1});
    CHECK(d2.dist_to_clique[3] == 2);
    CHECK(d2.gate[3] == 3);
    CHECK(d2.j_set[3] == std::vector<Vertex>{2, 4});
    CHECK(d2.p_value[3] == 2);

    // A vertex next to the clique is its own gate.
    CHECK(d2.gate[2] == 2);
    CHECK(d2.j_set[2] == std::vector<Vertex>{2});

    CHECK_THROWS_AS(compute_d2_gates(c5, {0, 2}), std::invalid_argument);
}

TEST_CASE("triangle flags against the scan order") {
    Graph k3 = Graph::parse("3 3\n0 1\n1 2\n2 0");
    auto flags = flags_adjacent_to_earlier(k3, {0, 1, 2});
    CHECK(flags == std::vector<bool>{false, true, true});

    Graph c5 = gen_named("c5").graph;
    auto none = flags_adjacent_to_earlier(c5, {2, 4});
    CHECK(none == std::vector<bool>{false, false});

    Graph diamond = gen_named("diamond").graph;  // chord 0-2
    auto chord = flags_adjacent_to_earlier(diamond, {0, 2});
    CHECK(chord == std::vector<bool>{false, true});
}

TEST_CASE("distance-two gate projections agree with the metric projection") {
    for (int t = 0; t < 8; ++t) {
        Rng r(Rng::split(13031, t));
        Graph g = gen_chordal(60, r.next(), 4).graph;
        DistanceMatrix dm(g);
        Vertex a = static_cast<Vertex>(r.below(60));
        std::vector<Vertex> clique{a};
        for (Vertex w : g.neighbors(a)) {
            bool joined = true;
            for (Vertex c : clique)
                if (!g.has_edge(w, c)) joined = false;
            if (joined) clique.push_back(w);
            if (clique.size() == 4) break;
        }
        std::sort(clique.begin(), clique.end());
        D2GateMap d2 = compute_d2_gates(g, clique);
        auto proj = [&](Vertex v) {
            Dist best = -1;
            for (Vertex c : clique)
                if (best < 0 || dm.at(v, c) < best) best = dm.at(v, c);
            std::vector<Vertex> out;
            for (Vertex c : clique)
                if (dm.at(v, c) == best) out.push_back(c);
            return out;
        };
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (d2.dist_to_clique[v] < 2) continue;
            CHECK(proj(v) == proj(d2.gate[v]));
            CHECK(d2.dist_to_clique[d2.gate[v]] == 2);
        }
    }
}

TEST_CASE("descend step on the path") {
    Graph p5 = gen_named("p5").graph;
    DescendOutcome from_end = descend_rad2(p5, 0);
    CHECK(from_end.improved);
    CHECK(from_end.better == 1);

    DescendOutcome from_center = descend_rad2(p5, 2);
    CHECK_FALSE(from_center.improved);
}

TEST_CASE("descend step always improves from high eccentricity on chordal samples") {
    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(14041, t));
        Graph g = gen_chordal(70, r.next(), 3).graph;
        EccReport ecc = exact_eccentricities(g);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            DescendOutcome out = descend_rad2(g, v);
            if (ecc.ecc[v] >= ecc.radius + 2) {
                CHECK(out.improved);
            }
            if (out.improved) CHECK(ecc.ecc[out.better] < ecc.ecc[v]);
        }
    }
}

TEST_CASE("local minimum step on fixed graphs") {
    Graph k2 = Graph::parse("2 1\n0 1");
    CHECK_FALSE(local_min_step(k2, 0).improved);

    Graph p5 = gen_named("p5").graph;
    LocalSearchOutcome out = local_min_step(p5, 1);
    CHECK(out.improved);
    CHECK(out.better == 2);
}

TEST_CASE("local minimum step agrees with the neighbor scan on alpha_1 corpora") {
    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(15051, t));
        Graph g = gen_chordal(60, r.next(), 3).graph;
        EccReport ecc = exact_eccentricities(g);
        for (GateMode mode : {GateMode::DistanceTwo, GateMode::Direct}) {
            for (int q = 0; q < 10; ++q) {
                Vertex v = static_cast<Vertex>(r.below(60));
                LocalSearchOutcome out = local_min_step(g, v, mode);
                bool any_better = false;
                for (Vertex w : g.neighbors(v))
                    if (ecc.ecc[w] < ecc.ecc[v]) any_better = true;
                CHECK(out.improved == any_better);
                if (out.improved) CHECK(ecc.ecc[out.better] == ecc.ecc[v] - 1);
                CHECK_FALSE(out.fallback_used);
            }
        }
    }
}

TEST_CASE("rad-plus-one landing spot") {
    Graph p5 = gen_named("p5").graph;
    Vertex x = find_rad_plus_1(p5);
    CHECK((x == 1 || x == 2 || x == 3));

    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(16061, t));
        Graph g = gen_chordal(90, r.next(), 3).graph;
        EccReport ecc = exact_eccentricities(g);
        CHECK(ecc.ecc[find_rad_plus_1(g)] <= ecc.radius + 1);
    }
}

TEST_CASE("exact central vertex on fixed graphs") {
    CHECK(find_central_alpha1(gen_named("p5").graph) == 2);
    Graph c5 = gen_named("c5").graph;
    Vertex c = find_central_alpha1(c5);
    CHECK(c >= 0);
    CHECK(c < 5);  // every vertex is central

    CHECK(find_central_alpha1_delta(gen_named("p5").graph) == 2);
    Graph star = Graph::parse("4 3\n0 1\n0 2\n0 3");
    CHECK(find_central_alpha1_delta(star) == 0);
}

TEST_CASE("central vertex searches return true centers on chordal corpora") {
    for (int t = 0; t < 8; ++t) {
        Rng r(Rng::split(17071, t));
        Graph g = gen_chordal(120, r.next(), 4).graph;
        EccReport ecc = exact_eccentricities(g);

        CenterSearchTrace trace;
        Vertex c1 = find_central_alpha1(g, &trace);
        CHECK(ecc.ecc[c1] == ecc.radius);

        std::int64_t last = -1;
        for (const auto& it : trace.iterations) {
            if (it.candidate_count <= 0) continue;
            if (last >= 0) CHECK(it.candidate_count < last);
            last = it.candidate_count;
        }

        reset_bfs_invocations();
        Vertex c2 = find_central_alpha1_delta(g);
        std::uint64_t sweeps = bfs_invocations();
        CHECK(ecc.ecc[c2] == ecc.radius);
        CHECK(sweeps <= 60);
    }
}

TEST_CASE("delta search trace exposes its probes") {
    Graph g = gen_chordal(200, 99, 3).graph;
    DeltaSearchTrace trace;
    Vertex c = find_central_alpha1_delta(g, &trace);
    CHECK(trace.result == c);
    CHECK(trace.local_min >= 0);
}
