#include "alphagraph/center_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alphagraph/approx.hpp"

namespace alphagraph {

namespace {

std::vector<Vertex> furthest_from_row(const DistanceRow& row) {
    Dist e = row.eccentricity();
    std::vector<Vertex> fs;
    for (Vertex v = 0; v < static_cast<Vertex>(row.dist.size()); ++v)
        if (row.dist[v] == e) fs.push_back(v);
    return fs;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex x) {
    std::vector<Vertex> set;
    set.reserve(g.degree(x) + 1);
    set.push_back(x);
    for (Vertex w : g.neighbors(x)) set.push_back(w);
    std::sort(set.begin(), set.end());
    return set;
}

// Vertices of N(x) adjacent to every listed gate, ascending. Gates are
// outside N[x], so adjacency counting over their neighbor lists is exact.
std::vector<Vertex> common_base(const Graph& g, Vertex x, const std::vector<Vertex>& gates) {
    std::vector<int> hits(g.num_vertices(), 0);
    for (Vertex gt : gates)
        for (Vertex w : g.neighbors(gt)) ++hits[w];
    std::vector<Vertex> base;
    const int need = static_cast<int>(gates.size());
    for (Vertex w : g.neighbors(x))
        if (hits[w] == need) base.push_back(w);
    return base;
}

std::vector<Vertex> distinct_gates(const GateMap& gm, const std::vector<Vertex>& members) {
    std::vector<Vertex> gates;
    gates.reserve(members.size());
    for (Vertex z : members) gates.push_back(gm.candidate[z]);
    std::sort(gates.begin(), gates.end());
    gates.erase(std::unique(gates.begin(), gates.end()), gates.end());
    return gates;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (!g.has_edge(set[i], set[j])) return false;
    return true;
}

}  // namespace

GateMap compute_gates(const Graph& g, std::vector<Vertex> target) {
    if (target.empty()) throw std::invalid_argument("gate target set is empty");
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());

    const Vertex n = g.num_vertices();
    GateMap gm;
    gm.dist_to_target = multi_source_dist(g, target);
    gm.candidate.assign(n, -1);
    gm.p_value.assign(n, 0);

    std::vector<char> in_target(n, 0);
    for (Vertex a : target) in_target[a] = 1;

    Dist far = 0;
    for (Vertex v = 0; v < n; ++v) far = std::max(far, gm.dist_to_target[v]);
    std::vector<std::vector<Vertex>> layers(far + 1);
    for (Vertex v = 0; v < n; ++v) layers[gm.dist_to_target[v]].push_back(v);

    for (Vertex v = 0; v < n; ++v) {
        if (gm.dist_to_target[v] > 1) continue;
        gm.candidate[v] = v;
        int p = 0;
        for (Vertex w : g.neighbors(v)) p += in_target[w];
        gm.p_value[v] = p;
    }
    for (Dist d = 2; d <= far; ++d) {
        for (Vertex v : layers[d]) {
            Vertex pick = -1;
            for (Vertex w : g.neighbors(v)) {
                if (gm.dist_to_target[w] != d - 1) continue;
                if (pick < 0 || gm.p_value[w] > gm.p_value[pick] ||
                    (gm.p_value[w] == gm.p_value[pick] && w < pick))
                    pick = w;
            }
            gm.candidate[v] = gm.candidate[pick];
            gm.p_value[v] = gm.p_value[pick];
        }
    }
    gm.target = std::move(target);
    return gm;
}

namespace {

bool verified_gate_impl(const GateMap& gm, Vertex v, std::span<const Dist> from_v,
                        std::span<const Dist> from_c) {
    if (gm.dist_to_target[v] <= 1) return true;
    const Vertex c = gm.candidate[v];
    const Dist dv = gm.dist_to_target[v];
    for (Vertex a : gm.target) {
        if (from_v[a] != dv) continue;  // not in proj(v, A)
        if (from_c[a] + from_v[c] != dv) return false;
    }
    return true;
}

}  // namespace

bool verified_gate(const Graph& g, const GateMap& gm, Vertex v) {
    if (gm.dist_to_target[v] <= 1) return true;
    DistanceRow from_v = bfs(g, v);
    DistanceRow from_c = bfs(g, gm.candidate[v]);
    return verified_gate_impl(gm, v, from_v.dist, from_c.dist);
}

bool verified_gate(const Graph& g, const GateMap& gm, Vertex v, const DistanceMatrix& dm) {
    (void)g;
    if (gm.dist_to_target[v] <= 1) return true;
    return verified_gate_impl(gm, v, dm.row(v), dm.row(gm.candidate[v]));
}

std::vector<bool> flags_adjacent_to_earlier(const Graph& g, const std::vector<Vertex>& list) {
    std::vector<char> mark(g.num_vertices(), 0);
    std::vector<bool> flags(list.size(), false);
    for (std::size_t j = 0; j < list.size(); ++j) {
        for (Vertex w : g.neighbors(list[j]))
            if (mark[w]) {
                flags[j] = true;
                break;
            }
        mark[list[j]] = 1;
    }
    return flags;
}

D2GateMap compute_d2_gates(const Graph& g, std::vector<Vertex> clique) {
    if (clique.empty()) throw std::invalid_argument("clique is empty");
    std::sort(clique.begin(), clique.end());
    clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
    if (!is_clique(g, clique)) throw std::invalid_argument("target set is not a clique");

    const Vertex n = g.num_vertices();
    D2GateMap d2;
    d2.dist_to_clique = multi_source_dist(g, clique);
    d2.gate.assign(n, -1);
    d2.p_value.assign(n, 0);
    d2.j_set.assign(n, {});

    std::vector<char> in_clique(n, 0);
    for (Vertex a : clique) in_clique[a] = 1;

    Dist far = 0;
    for (Vertex v = 0; v < n; ++v) far = std::max(far, d2.dist_to_clique[v]);
    std::vector<std::vector<Vertex>> layers(far + 1);
    for (Vertex v = 0; v < n; ++v) layers[d2.dist_to_clique[v]].push_back(v);

    for (Vertex v = 0; v < n; ++v) {
        const Dist d = d2.dist_to_clique[v];
        if (d > 1) continue;
        d2.gate[v] = v;
        if (d == 0) {
            d2.p_value[v] = 1;  // proj(v, K) = {v}
        } else {
            int p = 0;
            for (Vertex w : g.neighbors(v)) p += in_clique[w];
            d2.p_value[v] = p;
            d2.j_set[v] = {v};
        }
    }

    if (far >= 2) {
        for (Vertex u : layers[2]) {
            std::vector<Vertex> ring;
            for (Vertex w : g.neighbors(u))
                if (d2.dist_to_clique[w] == 1) ring.push_back(w);
            std::sort(ring.begin(), ring.end(), [&](Vertex a, Vertex b) {
                if (d2.p_value[a] != d2.p_value[b]) return d2.p_value[a] > d2.p_value[b];
                return a < b;
            });
            // A member adjacent to an earlier one projects inside that
            // earlier member's projection; keeping the others yields
            // pairwise disjoint projections.
            auto skip = flags_adjacent_to_earlier(g, ring);
            int total = 0;
            for (std::size_t j = 0; j < ring.size(); ++j) {
                if (skip[j]) continue;
                d2.j_set[u].push_back(ring[j]);
                total += d2.p_value[ring[j]];
            }
            d2.gate[u] = u;
            d2.p_value[u] = total;
        }
    }
    for (Dist d = 3; d <= far; ++d) {
        for (Vertex v : layers[d]) {
            Vertex pick = -1;
            for (Vertex w : g.neighbors(v)) {
                if (d2.dist_to_clique[w] != d - 1) continue;
                if (pick < 0 || d2.p_value[w] > d2.p_value[pick] ||
                    (d2.p_value[w] == d2.p_value[pick] && w < pick))
                    pick = w;
            }
            d2.gate[v] = d2.gate[pick];
            d2.p_value[v] = d2.p_value[pick];
        }
    }
    d2.clique = std::move(clique);
    return d2;
}

DescendOutcome descend_rad2(const Graph& g, Vertex x) {
    DescendOutcome out;
    DistanceRow row = bfs(g, x);
    out.ecc_x = row.eccentricity();
    if (out.ecc_x < 2) return out;

    GateMap gm = compute_gates(g, closed_neighborhood(g, x));
    auto gates = distinct_gates(gm, furthest_from_row(row));
    auto base = common_base(g, x, gates);
    if (base.empty()) return out;

    Vertex y = base.front();
    Dist ey = bfs(g, y).eccentricity();
    if (ey < out.ecc_x) {
        out.improved = true;
        out.better = y;
    }
    return out;
}

LocalSearchOutcome local_min_step(const Graph& g, Vertex x, GateMode mode) {
    LocalSearchOutcome out;
    const Vertex n = g.num_vertices();
    DistanceRow row = bfs(g, x);
    out.ecc_x = row.eccentricity();

    if (out.ecc_x <= 1) return out;
    if (out.ecc_x == 2) {
        for (Vertex w : g.neighbors(x))
            if (g.degree(w) == n - 1) {
                out.improved = true;
                out.better = w;
                return out;
            }
        return out;
    }

    GateMap gm = compute_gates(g, closed_neighborhood(g, x));
    auto gates = distinct_gates(gm, furthest_from_row(row));
    auto base = common_base(g, x, gates);
    if (base.empty()) return out;

    if (!is_clique(g, base)) {
        // Only possible off the guaranteed graph class; fall back to direct
        // evaluation so the search still runs to completion.
        out.fallback_used = true;
        for (Vertex y : base) {
            if (bfs(g, y).eccentricity() < out.ecc_x) {
                out.improved = true;
                out.better = y;
                return out;
            }
        }
        return out;
    }

    auto dist_base = multi_source_dist(g, base);
    Dist deepest = 0;
    for (Vertex v = 0; v < n; ++v) deepest = std::max(deepest, dist_base[v]);
    if (deepest >= out.ecc_x) return out;

    std::vector<Vertex> far_set;
    for (Vertex v = 0; v < n; ++v)
        if (dist_base[v] == out.ecc_x - 1) far_set.push_back(v);

    std::vector<char> in_base(n, 0);
    for (Vertex y : base) in_base[y] = 1;
    std::vector<std::int64_t> weight(n, 0);

    if (mode == GateMode::Direct) {
        GateMap base_gates = compute_gates(g, base);
        for (Vertex v : far_set) ++weight[base_gates.candidate[v]];
    } else {
        D2GateMap d2 = compute_d2_gates(g, base);
        for (Vertex v : far_set)
            for (Vertex w : d2.j_set[d2.gate[v]]) ++weight[w];
    }

    const std::int64_t need = static_cast<std::int64_t>(far_set.size());
    for (Vertex y : base) {
        std::int64_t covered = 0;
        for (Vertex w : g.neighbors(y))
            if (!in_base[w]) covered += weight[w];
        if (covered == need) {
            out.improved = true;
            out.better = y;
            return out;
        }
    }
    return out;
}

Vertex find_rad_plus_1(const Graph& g) {
    SweepTrace trace = mutually_distant_pair(g, 0);
    Vertex x = middle_vertex(g, trace.pair_a, trace.pair_b);
    for (int step = 0; step < 2; ++step) {
        DescendOutcome out = descend_rad2(g, x);
        if (!out.improved) break;
        x = out.better;
    }
    return x;
}

Vertex find_central_alpha1(const Graph& g, CenterSearchTrace* trace) {
    const Vertex n = g.num_vertices();
    if (n == 1) return 0;
    Vertex x = find_rad_plus_1(g);
    if (trace) trace->start = x;

    const Vertex threshold =
        static_cast<Vertex>(std::floor(std::pow(static_cast<double>(g.num_edges()), 0.29)));
    std::vector<char> in_x(n, 1);

    while (true) {
        CenterSearchIter iter;
        iter.x = x;

        if (g.degree(x) <= threshold) {
            // Small-degree endgame: local search around the closed
            // neighborhood reaches the best vertex within two hops.
            Vertex best = x;
            Dist best_ecc = bfs(g, x).eccentricity();
            iter.ecc_x = best_ecc;
            for (Vertex u : closed_neighborhood(g, x)) {
                LocalSearchOutcome out = local_min_step(g, u);
                Vertex cand = out.improved ? out.better : u;
                Dist cand_ecc = out.improved ? out.ecc_x - 1 : out.ecc_x;
                if (cand_ecc < best_ecc || (cand_ecc == best_ecc && cand < best)) {
                    best = cand;
                    best_ecc = cand_ecc;
                }
            }
            if (trace) {
                trace->iterations.push_back(iter);
                trace->low_degree_exit = true;
                trace->result = best;
            }
            return best;
        }

        DistanceRow row_x = bfs(g, x);
        const Dist ex = row_x.eccentricity();
        iter.ecc_x = ex;
        Vertex z = row_x.min_id_furthest();
        iter.z = z;
        DistanceRow row_z = bfs(g, z);

        std::int64_t live = 0;
        Vertex probe = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (in_x[v] && row_x.dist[v] <= 5 && row_z.dist[v] <= ex - 1) {
                ++live;
                if (probe < 0) probe = v;
            } else {
                in_x[v] = 0;
            }
        }
        iter.candidate_count = live;
        if (live == 0) {
            if (trace) {
                trace->iterations.push_back(iter);
                trace->result = x;
            }
            return x;
        }

        Vertex y = probe;
        while (true) {
            iter.probes.push_back(y);
            DistanceRow row_y = bfs(g, y);
            const Dist ey = row_y.eccentricity();
            if (ey < ex) {
                if (trace) {
                    trace->iterations.push_back(iter);
                    trace->result = y;
                }
                return y;
            }
            if (ey == ex) {
                x = y;  // next outer iteration
                break;
            }
            // Overshoot: steer back down inside the candidate set.
            GateMap gm = compute_gates(g, closed_neighborhood(g, y));
            auto gates = distinct_gates(gm, furthest_from_row(row_y));
            std::vector<Vertex> pool;
            for (Vertex v : common_base(g, y, gates))
                if (in_x[v]) pool.push_back(v);
            if (pool.empty()) {
                if (trace) {
                    trace->iterations.push_back(iter);
                    trace->result = x;
                }
                return x;
            }
            Vertex yp = pool.front();
            if (bfs(g, yp).eccentricity() >= ey) {
                if (trace) {
                    trace->iterations.push_back(iter);
                    trace->result = x;
                }
                return x;
            }
            y = yp;
        }
        if (trace) trace->iterations.push_back(iter);
    }
}

namespace {

// Output of the incomparable-furthest-sets branch: the slice between the
// two extremes admits a universal vertex, and the best vertex adjacent to
// it settles the search.
Vertex resolve_incomparable_pair(const Graph& g, Vertex x, Dist ex, const DistanceRow& row_u,
                                 const DistanceRow& row_v, DeltaSearchTrace* trace) {
    const Vertex n = g.num_vertices();
    const Dist eu = row_u.eccentricity();
    const Dist ev = row_v.eccentricity();
    Vertex y = -1, z = -1;
    for (Vertex t = 0; t < n && (y < 0 || z < 0); ++t) {
        if (y < 0 && row_u.dist[t] == eu && row_v.dist[t] != ev) y = t;
        if (z < 0 && row_v.dist[t] == ev && row_u.dist[t] != eu) z = t;
    }
    if (y < 0 || z < 0) return x;

    DistanceRow row_y = bfs(g, y);
    DistanceRow row_z = bfs(g, z);
    const Dist dyz = row_y.dist[z];
    if (dyz >= 2 * ex - 1) return x;  // radius cannot be below e(x)

    if (dyz < ex - 1)
        throw ClassificationViolation("slice between extreme vertices is empty");
    std::vector<Vertex> sl;
    for (Vertex s = 0; s < n; ++s)
        if (row_y.dist[s] == ex - 1 && row_y.dist[s] + row_z.dist[s] == dyz) sl.push_back(s);
    if (trace) trace->slice_size = static_cast<std::int64_t>(sl.size());
    if (sl.empty()) throw ClassificationViolation("slice between extreme vertices is empty");

    std::vector<char> in_slice(n, 0);
    for (Vertex s : sl) in_slice[s] = 1;
    Vertex universal = -1;
    for (Vertex s : sl) {
        std::size_t cover = 0;
        for (Vertex w : g.neighbors(s)) cover += in_slice[w];
        if (cover == sl.size() - 1) {
            universal = s;
            break;
        }
    }
    if (universal < 0)
        throw ClassificationViolation("no vertex is universal to the middle slice");
    if (trace) trace->universal = universal;

    LocalSearchOutcome out = local_min_step(g, universal, GateMode::Direct);
    Vertex xp = out.improved ? out.better : universal;
    Dist exp = out.improved ? out.ecc_x - 1 : out.ecc_x;
    if (exp < ex) return xp;
    if (ex < exp) return x;
    return std::min(x, xp);
}

}  // namespace

Vertex find_central_alpha1_delta(const Graph& g, DeltaSearchTrace* trace) {
    const Vertex n = g.num_vertices();
    if (n == 1) return 0;

    SweepTrace sweep = mutually_distant_pair(g, 0);
    Vertex x = middle_vertex(g, sweep.pair_a, sweep.pair_b);
    for (int step = 0; step < 3; ++step) {
        LocalSearchOutcome out = local_min_step(g, x, GateMode::Direct);
        if (!out.improved) break;
        x = out.better;
    }
    if (trace) trace->local_min = x;
    auto finish = [trace](Vertex result) {
        if (trace) trace->result = result;
        return result;
    };

    DistanceRow row_x = bfs(g, x);
    const Dist ex = row_x.eccentricity();
    if (ex <= 1) return finish(x);
    auto fx = furthest_from_row(row_x);

    GateMap gm = compute_gates(g, closed_neighborhood(g, x));

    // f[y] = how many furthest vertices of x have y on a shortest path,
    // accumulated through their gates.
    std::vector<std::int64_t> gate_mult(n, 0);
    for (Vertex z : fx) ++gate_mult[gm.candidate[z]];
    std::vector<char> in_nx(n, 0);
    for (Vertex w : g.neighbors(x)) in_nx[w] = 1;
    std::vector<std::int64_t> f(n, 0);
    for (Vertex z : fx) {
        Vertex gt = gm.candidate[z];
        if (gate_mult[gt] == 0) continue;  // already flushed
        for (Vertex w : g.neighbors(gt))
            if (in_nx[w]) f[w] += gate_mult[gt];
        gate_mult[gt] = 0;
    }

    auto argmax_f = [&](const std::vector<Vertex>& pool) {
        Vertex best = -1;
        for (Vertex w : pool)
            if (best < 0 || f[w] > f[best] || (f[w] == f[best] && w < best)) best = w;
        return best;
    };

    std::vector<Vertex> all_neighbors(g.neighbors(x).begin(), g.neighbors(x).end());
    Vertex y1 = argmax_f(all_neighbors);
    if (trace) trace->y1 = y1;
    DistanceRow row_y1 = bfs(g, y1);
    if (row_y1.eccentricity() > ex) return finish(x);
    if (row_y1.eccentricity() < ex) return finish(y1);  // off-class input; take the gain

    LocalSearchOutcome out1 = local_min_step(g, y1, GateMode::Direct);
    if (out1.improved) return finish(out1.better);

    // Incomparable furthest sets settle the search immediately.
    auto fy1 = furthest_from_row(row_y1);
    bool y1_escapes = false;
    for (Vertex t : fy1)
        if (row_x.dist[t] != ex) {
            y1_escapes = true;
            break;
        }
    if (y1_escapes) {
        if (trace) {
            trace->pair_u = x;
            trace->pair_v = y1;
        }
        return finish(resolve_incomparable_pair(g, x, ex, row_x, row_y1, trace));
    }

    Vertex z1 = fy1.front();
    if (trace) trace->z1 = z1;
    std::vector<Vertex> near_gate;
    for (Vertex w : g.neighbors(gm.candidate[z1]))
        if (in_nx[w]) near_gate.push_back(w);
    if (near_gate.empty()) return finish(x);
    Vertex y2 = argmax_f(near_gate);
    if (trace) trace->y2 = y2;
    DistanceRow row_y2 = bfs(g, y2);
    if (row_y2.eccentricity() > ex) return finish(x);
    if (row_y2.eccentricity() < ex) return finish(y2);

    LocalSearchOutcome out2 = local_min_step(g, y2, GateMode::Direct);
    if (out2.improved) return finish(out2.better);

    auto escape_base = [&](const DistanceRow& row_yi) {
        const Dist eyi = row_yi.eccentricity();
        std::vector<Vertex> gates;
        for (Vertex z : fx)
            if (row_yi.dist[z] != eyi) gates.push_back(gm.candidate[z]);
        std::sort(gates.begin(), gates.end());
        gates.erase(std::unique(gates.begin(), gates.end()), gates.end());
        return common_base(g, x, gates);
    };
    std::vector<Vertex> b1 = escape_base(row_y1);
    std::vector<Vertex> b2 = escape_base(row_y2);
    if (trace) {
        trace->b1_size = static_cast<std::int64_t>(b1.size());
        trace->b2_size = static_cast<std::int64_t>(b2.size());
    }

    std::vector<char> in_b2(n, 0);
    for (Vertex v : b2) in_b2[v] = 1;
    Vertex u = -1, v = -1;
    for (Vertex cand_u : b1) {
        for (Vertex w : g.neighbors(cand_u))
            if (in_b2[w]) {
                u = cand_u;
                v = w;
                break;
            }
        if (u >= 0) break;
    }
    if (u < 0) return finish(x);
    if (trace) {
        trace->pair_u = u;
        trace->pair_v = v;
    }

    DistanceRow row_u = bfs(g, u);
    DistanceRow row_v = bfs(g, v);
    if (std::max(row_u.eccentricity(), row_v.eccentricity()) > ex) return finish(x);
    return finish(resolve_incomparable_pair(g, x, ex, row_u, row_v, trace));
}

}  // namespace alphagraph
