#include "alphagraph/verify.hpp"

#include <algorithm>
#include <set>

#include "alphagraph/approx.hpp"
#include "alphagraph/center_search.hpp"
#include "alphagraph/classifier.hpp"
#include "alphagraph/oracle.hpp"
#include "alphagraph/reference.hpp"

namespace alphagraph::verify {

namespace {

using Corpus = std::vector<GenResult>;

// Violation bookkeeping for parallel per-sample loops: slot per sample,
// folded in index order so notes stay deterministic.
struct Tally {
    std::vector<long> cases, viols;
    std::vector<std::string> notes;

    explicit Tally(std::size_t slots) : cases(slots, 0), viols(slots, 0), notes(slots) {}

    void expect(std::size_t slot, bool ok, const std::string& detail) {
        ++cases[slot];
        if (!ok) {
            ++viols[slot];
            if (notes[slot].empty()) notes[slot] = detail;
        }
    }

    CheckResult fold(std::string name) const {
        CheckResult out;
        out.name = std::move(name);
        for (std::size_t i = 0; i < cases.size(); ++i) {
            out.cases += cases[i];
            out.violations += viols[i];
            if (out.note.empty() && !notes[i].empty())
                out.note = "sample " + std::to_string(i) + ": " + notes[i];
        }
        return out;
    }
};

std::string vstr(Vertex v) { return std::to_string(v); }

Corpus chordal_corpus(std::uint64_t seed, int count, Vertex nmin, Vertex nmax) {
    Corpus out;
    for (int k = 0; k < count; ++k) {
        Rng r(Rng::split(seed, k));
        Vertex n = nmin + static_cast<Vertex>(r.below(nmax - nmin + 1));
        int attach = 2 + static_cast<int>(r.below(4));
        out.push_back(gen_chordal(n, r.next(), attach));
    }
    return out;
}

Corpus dh_corpus(std::uint64_t seed, int count, Vertex nmin, Vertex nmax) {
    Corpus out;
    for (int k = 0; k < count; ++k) {
        Rng r(Rng::split(seed, k) ^ 0x5bd1e995u);
        Vertex n = nmin + static_cast<Vertex>(r.below(nmax - nmin + 1));
        std::array<int, 3> mixes[4] = {{1, 1, 1}, {3, 1, 1}, {1, 2, 1}, {2, 1, 2}};
        out.push_back(gen_distance_hereditary(n, r.next(), mixes[r.below(4)]));
    }
    return out;
}

Corpus ptolemaic_corpus(std::uint64_t seed, int count, Vertex nmin, Vertex nmax) {
    Corpus out;
    for (int k = 0; k < count; ++k) {
        Rng r(Rng::split(seed, k) ^ 0x27d4eb2fu);
        Vertex n = nmin + static_cast<Vertex>(r.below(nmax - nmin + 1));
        out.push_back(gen_ptolemaic(n, r.next()));
    }
    return out;
}

Corpus mixed_corpus(std::uint64_t seed, int count, Vertex nmin, Vertex nmax) {
    Corpus out;
    for (int k = 0; k < count; ++k) {
        Rng r(Rng::split(seed, k) ^ 0x85ebca6bu);
        Vertex n = nmin + static_cast<Vertex>(r.below(nmax - nmin + 1));
        switch (k % 6) {
            case 0:
                out.push_back(gen_gnp_connected(n, r.next(), 0.06 + 0.07 * r.below(5)));
                break;
            case 1:
                out.push_back(gen_chordal(n, r.next(), 2 + static_cast<int>(r.below(3))));
                break;
            case 2:
                out.push_back(gen_distance_hereditary(n, r.next(), {1, 1, 1}));
                break;
            case 3: {
                Vertex rows = 2 + static_cast<Vertex>(r.below(4));
                Vertex cols = std::max<Vertex>(2, n / rows);
                out.push_back(gen_grid(rows, cols));
                break;
            }
            case 4:
                out.push_back(gen_cycle(std::max<Vertex>(3, n)));
                break;
            default:
                out.push_back(gen_gnp_connected(n, r.next(), 0.25 + 0.1 * r.below(4)));
                break;
        }
    }
    return out;
}

std::vector<Vertex> projection(const DistanceMatrix& dm, Vertex v, const std::vector<Vertex>& set) {
    Dist best = -1;
    for (Vertex a : set)
        if (best < 0 || dm.at(v, a) < best) best = dm.at(v, a);
    std::vector<Vertex> proj;
    for (Vertex a : set)
        if (dm.at(v, a) == best) proj.push_back(a);
    return proj;
}

Dist dist_to_set(const DistanceMatrix& dm, Vertex v, const std::vector<Vertex>& set) {
    Dist best = -1;
    for (Vertex a : set)
        if (best < 0 || dm.at(v, a) < best) best = dm.at(v, a);
    return best;
}

std::vector<Vertex> random_clique(const Graph& g, Rng& rng, std::size_t cap = 5) {
    Vertex a = static_cast<Vertex>(rng.below(g.num_vertices()));
    std::vector<Vertex> clique{a};
    std::vector<Vertex> pool(g.neighbors(a).begin(), g.neighbors(a).end());
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.below(i)]);
    for (Vertex w : pool) {
        if (clique.size() >= cap) break;
        bool joined = true;
        for (Vertex c : clique)
            if (!g.has_edge(w, c)) {
                joined = false;
                break;
            }
        if (joined) clique.push_back(w);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

// Shortest path from v to a nearest center vertex that never gains
// eccentricity and spends at most `budget` level edges, the level edge (if
// any) having an end adjacent to the target.
bool decreasing_path_exists(const Graph& g, const DistanceMatrix& dm,
                            const std::vector<Dist>& ecc, Vertex v,
                            const std::vector<Vertex>& proj, int budget) {
    for (Vertex x : proj) {
        const Dist dvx = dm.at(v, x);
        // ok[u][b]: can reach x from u along the shortest-path lattice with
        // b level edges still available. Transitions move one hop closer.
        std::vector<std::array<signed char, 2>> memo(
            g.num_vertices(), std::array<signed char, 2>{-1, -1});
        auto walk = [&](auto&& self, Vertex u, int left) -> bool {
            if (u == x) return true;
            signed char& slot = memo[u][left];
            if (slot >= 0) return slot == 1;
            bool good = false;
            for (Vertex w : g.neighbors(u)) {
                if (dm.at(v, w) != dm.at(v, u) + 1 || dm.at(w, x) != dm.at(u, x) - 1) continue;
                if (ecc[w] < ecc[u]) {
                    if (self(self, w, left)) {
                        good = true;
                        break;
                    }
                } else if (ecc[w] == ecc[u] && left > 0) {
                    bool touches = (w == x) || g.has_edge(u, x) || g.has_edge(w, x);
                    if (touches && self(self, w, left - 1)) {
                        good = true;
                        break;
                    }
                }
            }
            slot = good ? 1 : 0;
            return good;
        };
        (void)dvx;
        if (walk(walk, v, budget)) return true;
    }
    return false;
}

}  // namespace

long SuiteResult::violations() const {
    long total = 0;
    for (const auto& c : checks) total += c.violations;
    return total;
}

bool SuiteResult::ok() const { return violations() == 0; }

CheckResult check_core_primitives(std::uint64_t seed, int count, Vertex nmax) {
    Corpus corpus = mixed_corpus(seed, count, 4, nmax);
    Tally tally(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        const Graph& g = corpus[s].graph;
        const Vertex n = g.num_vertices();
        Rng r(Rng::split(seed ^ 0xC0FFEEull, s));

        auto par = exact_eccentricities(g);
        auto serial = ref::eccentricities(g);
        tally.expect(s, par.ecc == serial, "parallel and serial eccentricities disagree");
        tally.expect(s, par.radius <= par.diameter && par.diameter <= 2 * par.radius,
                     "radius/diameter ordering broken");

        for (int t = 0; t < 8; ++t) {
            Vertex a = static_cast<Vertex>(r.below(n));
            Vertex b = static_cast<Vertex>(r.below(n));
            Vertex c = static_cast<Vertex>(r.below(n));
            DistanceRow ra = bfs(g, a);
            DistanceRow rb = bfs(g, b);
            tally.expect(s, ra.dist[b] == rb.dist[a], "distance not symmetric");
            tally.expect(s, ra.dist[c] <= ra.dist[b] + rb.dist[c], "triangle inequality broken");

            auto path = canonical_path(g, a, b);
            bool fine = static_cast<Dist>(path.size()) == ra.dist[b] + 1 && path.front() == a &&
                        path.back() == b;
            for (std::size_t j = 0; fine && j + 1 < path.size(); ++j)
                fine = g.has_edge(path[j], path[j + 1]) &&
                       ra.dist[path[j]] == static_cast<Dist>(j);
            tally.expect(s, fine, "canonical path malformed");

            auto between = interval(g, a, b);
            bool covered = std::binary_search(between.begin(), between.end(), a) &&
                           std::binary_search(between.begin(), between.end(), b);
            for (Vertex p : path)
                covered = covered && std::binary_search(between.begin(), between.end(), p);
            tally.expect(s, covered, "interval misses endpoints or path vertices");
        }
    }
    return tally.fold("core-primitives");
}

CheckResult check_classifier_sanity(std::uint64_t seed, int count, Vertex nmax) {
    Tally fixed(1);
    fixed.expect(0, alpha_index(gen_named("c5").graph) == 1, "alpha(c5) != 1");
    // The quadruple scan fixes alpha(c6) at 4 (worst gluing u=4,v=0,w=1,x=3);
    // any smaller value would break the disk-convexity degree elsewhere.
    fixed.expect(0, alpha_index(gen_named("c6").graph) == 4, "alpha(c6) != 4");
    fixed.expect(0, alpha_index(gen_named("c4").graph) == 2, "alpha(c4) != 2");
    fixed.expect(0, alpha_index(gen_named("k4").graph) == 0, "alpha(k4) != 0");
    for (Vertex n = 5; n <= 8; ++n) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        fixed.expect(0, alpha_index(Graph::from_edges(n, std::move(edges))) == 0,
                     "alpha(K_" + vstr(n) + ") != 0");
    }
    for (int t = 0; t < 6; ++t) {
        Rng r(Rng::split(seed ^ 0x7ee5ull, t));
        auto tree = gen_distance_hereditary(5 + static_cast<Vertex>(r.below(40)), r.next(),
                                            {1, 0, 0});
        fixed.expect(0, alpha_index(tree.graph) == 0, "alpha(random tree) != 0");
    }

    Corpus corpus = mixed_corpus(seed, count, 4, nmax);
    Tally tally(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        const Graph& g = corpus[s].graph;
        DistanceMatrix dm(g);
        Dist alpha = alpha_index(g, dm);
        Dist thin = interval_thinness(g, dm);
        tally.expect(s, thin <= alpha + 1,
                     "thinness " + vstr(thin) + " exceeds alpha+1 with alpha " + vstr(alpha));
    }
    CheckResult out = tally.fold("classifier-sanity");
    CheckResult head = fixed.fold("");
    out.cases += head.cases;
    out.violations += head.violations;
    if (out.note.empty()) out.note = head.note;
    return out;
}

CheckResult check_class_containment(std::uint64_t seed, int count) {
    Corpus chordal = chordal_corpus(seed, count, 8, 200);
    Corpus dh = dh_corpus(seed, count, 8, 150);
    Corpus ptolemaic = ptolemaic_corpus(seed, count, 8, 100);
    Tally tally(chordal.size() + dh.size() + ptolemaic.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < chordal.size() + dh.size() + ptolemaic.size(); ++s) {
        if (s < chordal.size()) {
            Dist a = alpha_index(chordal[s].graph);
            tally.expect(s, a <= 1, "chordal sample measured alpha " + vstr(a));
        } else if (s < chordal.size() + dh.size()) {
            Dist a = alpha_index(dh[s - chordal.size()].graph);
            tally.expect(s, a <= 2, "distance-hereditary sample measured alpha " + vstr(a));
        } else {
            Dist a = alpha_index(ptolemaic[s - chordal.size() - dh.size()].graph);
            tally.expect(s, a == 0, "ptolemaic sample measured alpha " + vstr(a));
        }
    }
    return tally.fold("class-containment");
}

std::vector<CheckResult> check_center_structure(std::uint64_t seed, int count, Vertex nmax) {
    Corpus corpus = mixed_corpus(seed, count, 5, nmax);
    Tally diam_center(corpus.size());
    Tally convexity(corpus.size());
    Tally alpha1_center(corpus.size());
    Tally spread(corpus.size());
    Tally locality_tally(corpus.size());
    Tally dist_center(corpus.size());
    Tally interval_ecc(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        const Graph& g = corpus[s].graph;
        const Vertex n = g.num_vertices();
        DistanceMatrix dm(g);
        const Dist i = alpha_index(g, dm);
        EccReport ecc = exact_eccentricities(g);
        CenterInfo info = center_info(g);
        Rng r(Rng::split(seed ^ 0xD15C5ull, s));

        diam_center.expect(s, info.diam_of_center <= 3 * i + 2,
                           "diam(center) " + vstr(info.diam_of_center) + " > 3i+2 at i " +
                               vstr(i));
        convexity.expect(s, dk_convex(g, ecc.center, 2 * i - 1, dm),
                         "center not d^(2i-1)-convex at i " + vstr(i));
        for (int t = 0; t < 5; ++t) {
            Vertex v = static_cast<Vertex>(r.below(n));
            Dist radius = static_cast<Dist>(r.below(ecc.ecc[v] + 1));
            std::vector<Vertex> disk;
            for (Vertex u = 0; u < n; ++u)
                if (dm.at(v, u) <= radius) disk.push_back(u);
            convexity.expect(s, dk_convex(g, disk, 2 * i - 1, dm),
                             "disk around " + vstr(v) + " radius " + vstr(radius) +
                                 " not d^(2i-1)-convex at i " + vstr(i));
        }
        if (i <= 1) {
            alpha1_center.expect(s, info.diam_of_center <= 3,
                                 "alpha<=1 sample with diam(center) " +
                                     vstr(info.diam_of_center));
            alpha1_center.expect(s, info.rad_of_center <= 2,
                                 "alpha<=1 sample with rad(center) " + vstr(info.rad_of_center));
            spread.expect(s, ecc.diameter >= 2 * ecc.radius - 2, "diam < 2rad-2 on alpha<=1");
        }
        spread.expect(s, ecc.diameter >= 2 * ecc.radius - i - 1, "diam < 2rad-i-1");

        for (Vertex v = 0; v < n; ++v) {
            if (ecc.ecc[v] > ecc.radius) {
                Locality loc = locality(g, v, ecc);
                locality_tally.expect(s, loc.value <= i + 1,
                                      "locality " + vstr(loc.value) + " > i+1 at vertex " +
                                          vstr(v));
            }
            Dist to_center = dist_to_set(dm, v, ecc.center);
            Dist k = ecc.ecc[v] - ecc.radius;
            dist_center.expect(s, to_center <= k + i, "d(v,C) > k+i at vertex " + vstr(v));
            dist_center.expect(s,
                               ecc.ecc[v] >= to_center + ecc.radius - i &&
                                   ecc.ecc[v] <= to_center + ecc.radius,
                               "eccentricity outside dist-to-center window at " + vstr(v));
        }

        // Exhaustive interval eccentricity bounds on the smaller samples.
        if (n <= 120) {
            bool fine = true;
            std::string why;
            for (Vertex x = 0; x < n && fine; ++x)
                for (Vertex y = x; y < n && fine; ++y) {
                    const Dist dxy = dm.at(x, y);
                    const Dist emax = std::max(ecc.ecc[x], ecc.ecc[y]);
                    for (Vertex z = 0; z < n; ++z) {
                        if (dm.at(x, z) + dm.at(z, y) != dxy) continue;
                        if (ecc.ecc[z] > emax + (3 * i) / 2 + 1) {
                            fine = false;
                            why = "interval vertex above max+3i/2+1";
                            break;
                        }
                        const Dist dx = dm.at(x, z), dy = dm.at(z, y);
                        if (dxy >= 4 * i + 2 && dx >= 2 * i + 1 && dy >= 2 * i + 1 &&
                            ecc.ecc[z] > emax) {
                            fine = false;
                            why = "deep interval vertex above max";
                            break;
                        }
                        if (dxy > 4 * i + 3 && dx > 2 * i + 1 && dy > 2 * i + 1 &&
                            ecc.ecc[z] >= emax) {
                            fine = false;
                            why = "deepest interval vertex not strictly below max";
                            break;
                        }
                    }
                }
            interval_ecc.expect(s, fine, why);
        }
    }
    return {diam_center.fold("center-diameter"),     convexity.fold("disk-convexity-degree"),
            alpha1_center.fold("alpha1-center"),     spread.fold("radius-diameter-spread"),
            locality_tally.fold("locality-general"), dist_center.fold("distance-to-center"),
            interval_ecc.fold("interval-eccentricity")};
}

std::vector<CheckResult> check_radius_diameter_approx(std::uint64_t seed, int count,
                                                      Vertex nmax_large) {
    Corpus corpus = mixed_corpus(seed, count, 6, 250);
    std::vector<Dist> alpha_of(corpus.size(), -1);  // -1: measure
    {
        Corpus big_chordal = chordal_corpus(seed ^ 0xB16ull, 8, nmax_large / 2, nmax_large);
        Corpus big_dh = dh_corpus(seed ^ 0xB17ull, 6, 300, 800);
        for (auto& gr : big_chordal) {
            corpus.push_back(std::move(gr));
            alpha_of.push_back(1);  // containment checked separately on small samples
        }
        for (auto& gr : big_dh) {
            corpus.push_back(std::move(gr));
            alpha_of.push_back(2);
        }
    }

    Tally mdp_bounds(corpus.size());
    Tally slice_vertex(corpus.size());
    Tally pair_length(corpus.size());
    Tally sweep_bounds(corpus.size());
    Tally center_locus(corpus.size());
    Tally iteration_cap(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        const Graph& g = corpus[s].graph;
        const Dist i = alpha_of[s] >= 0 ? alpha_of[s] : alpha_index(g);
        EccReport ecc = exact_eccentricities(g);
        CenterInfo info = center_info(g);
        const Dist rad = ecc.radius, diam = ecc.diameter;

        SweepTrace trace = mutually_distant_pair(g, 0);
        const Vertex x = trace.pair_a, y = trace.pair_b;
        const Dist dxy = trace.pair_distance;
        Vertex cm = middle_vertex(g, x, y);

        mdp_bounds.expect(s, ecc.ecc[cm] <= rad + 2 * i + 1,
                          "mdp middle ecc " + vstr(ecc.ecc[cm]) + " > rad+2i+1");
        mdp_bounds.expect(s, ecc.ecc[cm] <= (dxy + 1) / 2 + 2 * i + 1,
                          "mdp middle ecc above ceil(d/2)+2i+1");
        pair_length.expect(s, dxy >= 2 * rad - 4 * i - 3, "mdp pair shorter than 2rad-4i-3");
        pair_length.expect(s, dxy >= diam - 3 * i - 2, "mdp pair shorter than diam-3i-2");
        iteration_cap.expect(s,
                             static_cast<Dist>(trace.distances.size()) <= 3 * i + 4,
                             "sweep took more than 3i+4 improvements");

        DistanceRow from_x = bfs(g, x);
        DistanceRow from_y = bfs(g, y);
        bool some_low = false;
        for (Vertex z = 0; z < g.num_vertices(); ++z)
            if (from_x.dist[z] == dxy / 2 && from_x.dist[z] + from_y.dist[z] == dxy &&
                ecc.ecc[z] <= rad + i)
                some_low = true;
        slice_vertex.expect(s, some_low, "middle slice has no vertex within rad+i");

        Vertex s1 = bfs(g, 0).min_id_furthest();
        DistanceRow from_s1 = bfs(g, s1);
        Vertex s2 = from_s1.min_id_furthest();
        sweep_bounds.expect(s, from_s1.eccentricity() >= diam - 3 * i - 2,
                            "first sweep vertex below diam-3i-2");
        sweep_bounds.expect(
            s, from_s1.eccentricity() >= 2 * rad - 2 * i - info.diam_of_center,
            "first sweep vertex below 2rad-2i-diam(center)");
        Vertex cs = middle_vertex(g, s1, s2);
        sweep_bounds.expect(s, ecc.ecc[cs] <= rad + (9 * i + 5) / 2,
                            "sweep middle above rad+(9i+5)/2");
        sweep_bounds.expect(s, ecc.ecc[cs] <= (from_s1.dist[s2] + 1) / 2 + 5 * i + 3,
                            "sweep middle above ceil(d/2)+5i+3");

        DistanceRow from_cm = bfs(g, cm);
        DistanceRow from_cs = bfs(g, cs);
        for (Vertex u : ecc.center) {
            center_locus.expect(s, from_cm.dist[u] <= 4 * i + 3,
                                "central vertex outside D(mdp middle, 4i+3)");
            center_locus.expect(s, from_cs.dist[u] <= (9 * i + 5) / 2,
                                "central vertex outside D(sweep middle, (9i+5)/2)");
        }
    }
    return {mdp_bounds.fold("mdp-middle-radius"), slice_vertex.fold("middle-slice-vertex"),
            pair_length.fold("mdp-pair-length"),  sweep_bounds.fold("double-sweep-bounds"),
            center_locus.fold("center-localization"),
            iteration_cap.fold("sweep-iteration-cap")};
}

std::vector<CheckResult> check_all_ecc_approx(std::uint64_t seed, int count) {
    Corpus corpus = mixed_corpus(seed, count, 6, 250);
    std::vector<Dist> alpha_of(corpus.size(), -1);
    {
        Corpus big_chordal = chordal_corpus(seed ^ 0xEA7ull, 6, 300, 1000);
        Corpus big_dh = dh_corpus(seed ^ 0xEA8ull, 4, 200, 500);
        for (auto& gr : big_chordal) {
            corpus.push_back(std::move(gr));
            alpha_of.push_back(1);
        }
        for (auto& gr : big_dh) {
            corpus.push_back(std::move(gr));
            alpha_of.push_back(2);
        }
        for (int t = 0; t < 4; ++t) {
            Rng r(Rng::split(seed ^ 0xEA9ull, t));
            corpus.push_back(
                gen_distance_hereditary(10 + static_cast<Vertex>(r.below(150)), r.next(),
                                        {1, 0, 0}));
            alpha_of.push_back(0);  // trees
        }
    }

    Tally hat_bounds(corpus.size());
    Tally tree_bounds(corpus.size());
    Tally tree_formula(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        const Graph& g = corpus[s].graph;
        const Dist i = alpha_of[s] >= 0 ? alpha_of[s] : alpha_index(g);
        EccReport ecc = exact_eccentricities(g);

        SweepTrace trace = mutually_distant_pair(g, 0);
        ApproxEccReport hat = ecc_lower_bounds(g, trace.pair_a, trace.pair_b);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            Dist gap = ecc.ecc[v] - hat.lower[v];
            hat_bounds.expect(s, gap >= 0 && gap <= 3 * i + 2,
                              "pair estimate off by " + vstr(gap) + " at vertex " + vstr(v));
        }

        SpanningTree t_mdp = build_ecc_tree(g, TreeStrategy::MdpMiddle);
        SpanningTree t_sweep = build_ecc_tree(g, TreeStrategy::SweepMiddle);
        const bool is_tree = g.num_edges() == g.num_vertices() - 1;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            Dist d1 = t_mdp.tree_ecc[v] - ecc.ecc[v];
            Dist d2 = t_sweep.tree_ecc[v] - ecc.ecc[v];
            tree_bounds.expect(s, d1 >= 0 && d1 <= 4 * i + 3,
                               "mdp-root tree deficit " + vstr(d1) + " at " + vstr(v));
            tree_bounds.expect(s, d2 >= 0 && d2 <= 7 * i + 5,
                               "sweep-root tree deficit " + vstr(d2) + " at " + vstr(v));
            if (is_tree) tree_bounds.expect(s, d1 == 0, "tree input gained eccentricity");
        }

        auto brute = ref::tree_eccentricities_bruteforce(t_mdp.as_graph());
        tree_formula.expect(s, brute == t_mdp.tree_ecc,
                            "tree formula disagrees with per-vertex sweeps");
    }
    return {hat_bounds.fold("pair-lower-bounds"), tree_bounds.fold("tree-deficits"),
            tree_formula.fold("tree-formula")};
}

std::vector<CheckResult> check_unimodality(std::uint64_t seed, int count, Vertex nmax) {
    Corpus pool = chordal_corpus(seed ^ 0x111ull, count, 6, nmax);
    {
        Corpus extra = ptolemaic_corpus(seed ^ 0x112ull, count / 3 + 1, 6, nmax);
        for (auto& gr : extra) pool.push_back(std::move(gr));
    }

    Tally improving(pool.size());
    Tally dist_bound(pool.size());
    Tally locality2(pool.size());
    Tally smaller_mid(pool.size());
    Tally descent_path(pool.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < pool.size(); ++s) {
        const Graph& g = pool[s].graph;
        const Vertex n = g.num_vertices();
        DistanceMatrix dm(g);
        if (alpha_index(g, dm) > 1) continue;  // suite is specific to alpha <= 1
        EccReport ecc = exact_eccentricities(g);
        const Dist rad = ecc.radius, diam = ecc.diameter;

        for (Vertex v = 0; v < n; ++v) {
            bool has_better = false;
            for (Vertex w : g.neighbors(v))
                if (ecc.ecc[w] < ecc.ecc[v]) {
                    has_better = true;
                    break;
                }
            if (ecc.ecc[v] > rad + 1)
                improving.expect(s, has_better, "vertex above rad+1 without descent");
            if (diam < 2 * rad - 1 && ecc.ecc[v] > rad)
                improving.expect(s, has_better, "non-central vertex stuck at small spread");
            Dist k = ecc.ecc[v] - rad;
            if (k > 0) {
                dist_bound.expect(s, dist_to_set(dm, v, ecc.center) <= k + 1,
                                  "d(v,C) > k+1 at vertex " + vstr(v));
                Locality loc = locality(g, v, ecc);
                locality2.expect(s, loc.value <= 2, "locality > 2 at vertex " + vstr(v));
            }
        }

        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                if (dm.at(a, b) < 4) continue;
                const Dist emax = std::max(ecc.ecc[a], ecc.ecc[b]);
                bool strictly_better = false;
                for (Vertex c = 0; c < n; ++c) {
                    if (c == a || c == b) continue;
                    if (dm.at(a, c) + dm.at(c, b) != dm.at(a, b)) continue;
                    if (ecc.ecc[c] < emax) {
                        strictly_better = true;
                        break;
                    }
                }
                smaller_mid.expect(s, strictly_better,
                                   "no interior improvement between " + vstr(a) + " and " +
                                       vstr(b));
            }

        const int budget = diam < 2 * rad - 1 ? 0 : 1;
        for (Vertex v = 0; v < n; ++v) {
            if (ecc.ecc[v] == rad) continue;
            auto proj = projection(dm, v, ecc.center);
            descent_path.expect(s,
                                decreasing_path_exists(g, dm, ecc.ecc, v, proj, budget),
                                "no decreasing shortest path to the center from " + vstr(v));
        }
    }
    return {improving.fold("improving-neighbor"), dist_bound.fold("distance-bound"),
            locality2.fold("locality-two"), smaller_mid.fold("interior-improvement"),
            descent_path.fold("decreasing-path")};
}

std::vector<CheckResult> check_central_algorithms(std::uint64_t seed, int count) {
    Corpus small = chordal_corpus(seed ^ 0xCE1ull, count, 6, 300);
    Corpus large = chordal_corpus(seed ^ 0xCE2ull, count, 100, 1000);

    Tally rad_plus_1(small.size());
    Tally alpha1_exact(small.size());
    Tally descend_ok(small.size());
    Tally local_step_ok(small.size());
    Tally trace_monotone(small.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < small.size(); ++s) {
        const Graph& g = small[s].graph;
        const Vertex n = g.num_vertices();
        if (alpha_index(g) > 1) continue;
        EccReport ecc = exact_eccentricities(g);
        Rng r(Rng::split(seed ^ 0xCE3ull, s));

        Vertex x0 = find_rad_plus_1(g);
        rad_plus_1.expect(s, ecc.ecc[x0] <= ecc.radius + 1,
                          "rad-plus-1 search landed at ecc " + vstr(ecc.ecc[x0]));

        CenterSearchTrace trace;
        Vertex c = find_central_alpha1(g, &trace);
        alpha1_exact.expect(s, ecc.ecc[c] == ecc.radius,
                            "central search returned ecc " + vstr(ecc.ecc[c]) + " vs radius " +
                                vstr(ecc.radius));
        {
            bool distinct = true;
            std::set<Vertex> seen;
            for (const auto& it : trace.iterations)
                if (!seen.insert(it.x).second) distinct = false;
            std::int64_t last = -1;
            bool shrinking = true;
            for (const auto& it : trace.iterations) {
                if (it.candidate_count < 0) continue;
                if (last >= 0 && it.candidate_count >= last) shrinking = false;
                if (it.candidate_count > 0) last = it.candidate_count;
            }
            trace_monotone.expect(s, distinct && shrinking,
                                  "search trace not strictly progressing");
        }

        for (int t = 0; t < 5; ++t) {
            Vertex v = static_cast<Vertex>(r.below(n));
            DescendOutcome out = descend_rad2(g, v);
            if (out.improved)
                descend_ok.expect(s, ecc.ecc[out.better] < ecc.ecc[v],
                                  "descend reported a non-improving vertex");
            else
                descend_ok.expect(s, ecc.ecc[v] <= ecc.radius + 1,
                                  "descend stalled above rad+1");

            LocalSearchOutcome step = local_min_step(g, v);
            bool neighbor_better = false;
            for (Vertex w : g.neighbors(v))
                if (ecc.ecc[w] < ecc.ecc[v]) neighbor_better = true;
            if (step.improved)
                local_step_ok.expect(s,
                                     neighbor_better && ecc.ecc[step.better] < ecc.ecc[v],
                                     "local step claimed a bogus improvement");
            else
                local_step_ok.expect(s, !neighbor_better,
                                     "local step missed an improving neighbor");
        }
    }

    Tally delta_exact(large.size());
    Tally delta_budget(large.size());
    for (std::size_t s = 0; s < large.size(); ++s) {
        const Graph& g = large[s].graph;
        reset_bfs_invocations();
        Vertex c = find_central_alpha1_delta(g);
        std::uint64_t sweeps = bfs_invocations();
        EccReport ecc = exact_eccentricities(g);
        delta_exact.expect(s, ecc.ecc[c] == ecc.radius,
                           "triangle-condition search returned ecc " + vstr(ecc.ecc[c]) +
                               " vs radius " + vstr(ecc.radius));
        delta_budget.expect(s, sweeps <= 60,
                            "search spent " + std::to_string(sweeps) + " sweeps");
    }

    return {rad_plus_1.fold("rad-plus-one"),
            alpha1_exact.fold("central-alpha1"),
            descend_ok.fold("descend-step"),
            local_step_ok.fold("local-min-step"),
            trace_monotone.fold("search-trace-progress"),
            delta_exact.fold("central-alpha1-delta"),
            delta_budget.fold("delta-sweep-budget")};
}

std::vector<CheckResult> check_gate_machinery(std::uint64_t seed, int count) {
    Corpus chordal = chordal_corpus(seed ^ 0x6a7eull, count, 6, 200);

    Tally neighborhood_gates(chordal.size());
    Tally clique_gates(chordal.size());
    Tally d2_projection(chordal.size());
    Tally no_gate_case(1);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < chordal.size(); ++s) {
        const Graph& g = chordal[s].graph;
        const Vertex n = g.num_vertices();
        DistanceMatrix dm(g);
        Rng r(Rng::split(seed ^ 0x6a7full, s));

        Vertex x = static_cast<Vertex>(r.below(n));
        std::vector<Vertex> ball{x};
        for (Vertex w : g.neighbors(x)) ball.push_back(w);
        GateMap gm = compute_gates(g, ball);
        for (Vertex v = 0; v < n; ++v)
            neighborhood_gates.expect(s, verified_gate(g, gm, v, dm),
                                      "candidate gate fails verification at vertex " + vstr(v));

        auto clique = random_clique(g, r);
        GateMap kg = compute_gates(g, clique);
        for (Vertex v = 0; v < n; ++v)
            clique_gates.expect(s, verified_gate(g, kg, v, dm),
                                "clique gate fails verification at vertex " + vstr(v));

        D2GateMap d2 = compute_d2_gates(g, clique);
        for (Vertex v = 0; v < n; ++v) {
            if (d2.dist_to_clique[v] < 2) continue;
            auto want = projection(dm, v, clique);
            auto got = projection(dm, d2.gate[v], clique);
            d2_projection.expect(s, want == got,
                                 "distance-two gate projects differently at vertex " + vstr(v));
            d2_projection.expect(s, static_cast<int>(want.size()) == d2.p_value[v],
                                 "projection size bookkeeping off at vertex " + vstr(v));
            if (d2.dist_to_clique[v] == 2) {
                std::vector<Vertex> stitched;
                bool disjoint = true;
                for (Vertex w : d2.j_set[v]) {
                    for (Vertex a : clique)
                        if (g.has_edge(w, a)) {
                            if (std::find(stitched.begin(), stitched.end(), a) != stitched.end())
                                disjoint = false;
                            stitched.push_back(a);
                        }
                }
                std::sort(stitched.begin(), stitched.end());
                d2_projection.expect(s, disjoint && stitched == want,
                                     "independent-set cover mismatched at vertex " + vstr(v));
            }
        }
    }

    // The pentagon edge case: the opposite vertex admits no gate.
    {
        Graph c5 = gen_named("c5").graph;
        GateMap gm = compute_gates(c5, {0, 1});
        no_gate_case.expect(0, !verified_gate(c5, gm, 3),
                            "pentagon vertex unexpectedly acquired a gate");
        GateMap path_gates = compute_gates(gen_named("p5").graph, {0});
        bool all = true;
        for (Vertex v = 1; v < 5; ++v)
            all = all && verified_gate(gen_named("p5").graph, path_gates, v);
        no_gate_case.expect(0, all, "path gates failed");
    }

    return {neighborhood_gates.fold("neighborhood-gates"), clique_gates.fold("clique-gates"),
            d2_projection.fold("distance-two-gates"), no_gate_case.fold("no-gate-case")};
}

CheckResult check_characterization(std::uint64_t seed, int count, Vertex nmax,
                                   const Graph* pattern) {
    if (pattern == nullptr) {
        CheckResult out;
        out.name = "characterization";
        out.skipped = true;
        out.note = "pattern file absent; transcribe data/w6pp.edges to enable this check";
        return out;
    }
    Corpus corpus = mixed_corpus(seed ^ 0xC4a4ull, count, 4, nmax);
    Tally tally(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        const Graph& g = corpus[s].graph;
        DistanceMatrix dm(g);
        bool lhs = alpha_index(g, dm) <= 1;
        bool rhs = disks_convex(g, dm) && !find_isometric(*pattern, g).has_value();
        tally.expect(s, lhs == rhs, lhs ? "alpha<=1 but characterization disagrees"
                                        : "characterization claims alpha<=1 wrongly");
    }
    return tally.fold("characterization");
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count,
                      const Graph* pattern) {
    SuiteResult suite;
    suite.suite = name;
    auto append = [&suite](std::vector<CheckResult> results) {
        for (auto& r : results) suite.checks.push_back(std::move(r));
    };
    if (name == "core-suite") {
        suite.checks.push_back(check_core_primitives(seed, count, 80));
        return suite;
    }
    if (name == "alpha1-suite") {
        append(check_unimodality(seed, count, 120));
        append(check_central_algorithms(seed, std::max(1, count / 2)));
        append(check_gate_machinery(seed, count));
        return suite;
    }
    if (name == "alphai-suite") {
        suite.checks.push_back(check_classifier_sanity(seed, count, 60));
        suite.checks.push_back(check_class_containment(seed, std::max(1, count / 2)));
        append(check_center_structure(seed, std::max(1, count / 2), 120));
        append(check_radius_diameter_approx(seed, count, 1200));
        append(check_all_ecc_approx(seed, count));
        return suite;
    }
    if (name == "all") {
        suite.checks.push_back(check_core_primitives(seed, count, 80));
        suite.checks.push_back(check_classifier_sanity(seed, count, 60));
        suite.checks.push_back(check_class_containment(seed, std::max(1, count / 2)));
        append(check_center_structure(seed, std::max(1, count / 2), 120));
        append(check_radius_diameter_approx(seed, count, 1200));
        append(check_all_ecc_approx(seed, count));
        append(check_unimodality(seed, count, 120));
        append(check_central_algorithms(seed, std::max(1, count / 2)));
        append(check_gate_machinery(seed, count));
        return suite;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace alphagraph::verify
