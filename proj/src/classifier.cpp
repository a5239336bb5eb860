#include "alphagraph/classifier.hpp"

#include <algorithm>
#include <atomic>

namespace alphagraph {

namespace {

std::vector<std::pair<Vertex, Vertex>> oriented_edges(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(2 * static_cast<std::size_t>(g.num_edges()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex w : g.neighbors(v)) edges.emplace_back(v, w);
    return edges;
}

}  // namespace

Dist alpha_index(const Graph& g) { return alpha_index(g, DistanceMatrix(g)); }

Dist alpha_index(const Graph& g, const DistanceMatrix& dm) {
    const Vertex n = g.num_vertices();
    auto edges = oriented_edges(g);
    Dist worst = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : worst)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [v, w] = edges[e];
        auto dv = dm.row(v);
        auto dw = dm.row(w);
        // x with w between v and x, paired with the distance d(w,x)+1.
        std::vector<std::pair<Vertex, Dist>> tails;
        for (Vertex x = 0; x < n; ++x)
            if (dv[x] == dw[x] + 1) tails.emplace_back(x, dw[x] + 1);
        for (Vertex u = 0; u < n; ++u) {
            if (dw[u] != dv[u] + 1) continue;  // v must lie between u and w
            auto du = dm.row(u);
            const Dist head = dv[u];
            for (auto [x, wx1] : tails) worst = std::max(worst, head + wx1 - du[x]);
        }
    }
    return worst;
}

Dist interval_thinness(const Graph& g) { return interval_thinness(g, DistanceMatrix(g)); }

Dist interval_thinness(const Graph& g, const DistanceMatrix& dm) {
    const Vertex n = g.num_vertices();
    Dist worst = 0;
#pragma omp parallel reduction(max : worst)
    {
        std::vector<std::vector<Vertex>> buckets(n);
#pragma omp for schedule(dynamic, 4)
        for (Vertex u = 0; u < n; ++u) {
            auto du = dm.row(u);
            for (Vertex v = u + 1; v < n; ++v) {
                auto dv = dm.row(v);
                const Dist duv = du[v];
                if (duv < 2) continue;
                for (Dist k = 1; k < duv; ++k) buckets[k].clear();
                for (Vertex x = 0; x < n; ++x) {
                    Dist k = du[x];
                    if (k > 0 && k < duv && k + dv[x] == duv) buckets[k].push_back(x);
                }
                for (Dist k = 1; k < duv; ++k) {
                    const auto& sl = buckets[k];
                    for (std::size_t i = 0; i < sl.size(); ++i)
                        for (std::size_t j = i + 1; j < sl.size(); ++j)
                            worst = std::max(worst, dm.at(sl[i], sl[j]));
                }
            }
        }
    }
    return worst;
}

namespace {

// For fixed (z, y): the largest d(.,z) over the interval I(x,y), for every x,
// by dynamic programming over x in order of increasing d(x,y). Returns a
// violating x if the maximum ever exceeds max(d(x,z), d(y,z)).
//
// order_by_dist[k] lists vertices at distance k from y (precomputed).
bool scan_convexity(const Graph& g, const DistanceMatrix& dm, Vertex z, Vertex y,
                    const std::vector<std::vector<Vertex>>& order_by_dist,
                    std::vector<Dist>& peak, std::vector<Vertex>& arg, Vertex* bad_x,
                    Vertex* bad_v) {
    auto dy = dm.row(y);
    auto dz = dm.row(z);
    for (const auto& layer : order_by_dist) {
        for (Vertex x : layer) {
            Dist best = dz[x];
            Vertex who = x;
            for (Vertex w : g.neighbors(x)) {
                if (dy[w] != dy[x] - 1) continue;
                if (peak[w] > best) {
                    best = peak[w];
                    who = arg[w];
                }
            }
            peak[x] = best;
            arg[x] = who;
            if (best > std::max(dz[x], dz[y])) {
                if (bad_x) *bad_x = x;
                if (bad_v) *bad_v = who;
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<Vertex>> layers_from(const DistanceMatrix& dm, Vertex y, Dist ecc_y) {
    std::vector<std::vector<Vertex>> layers(ecc_y + 1);
    auto dy = dm.row(y);
    for (Vertex x = 0; x < dm.size(); ++x) layers[dy[x]].push_back(x);
    return layers;
}

}  // namespace

bool disks_convex(const Graph& g) { return disks_convex(g, DistanceMatrix(g)); }

bool disks_convex(const Graph& g, const DistanceMatrix& dm) {
    const Vertex n = g.num_vertices();
    std::atomic<bool> ok{true};
#pragma omp parallel
    {
        std::vector<Dist> peak(n);
        std::vector<Vertex> arg(n);
#pragma omp for schedule(dynamic, 4)
        for (Vertex y = 0; y < n; ++y) {
            if (!ok.load(std::memory_order_relaxed)) continue;
            Dist ecc_y = 0;
            for (Vertex x = 0; x < n; ++x) ecc_y = std::max(ecc_y, dm.at(y, x));
            auto layers = layers_from(dm, y, ecc_y);
            for (Vertex z = 0; z < n && ok.load(std::memory_order_relaxed); ++z) {
                if (!scan_convexity(g, dm, z, y, layers, peak, arg, nullptr, nullptr))
                    ok.store(false, std::memory_order_relaxed);
            }
        }
    }
    return ok.load();
}

std::optional<std::tuple<Vertex, Vertex, Vertex, Vertex>> disks_convex_witness(
    const Graph& g, const DistanceMatrix& dm) {
    const Vertex n = g.num_vertices();
    std::vector<Dist> peak(n);
    std::vector<Vertex> arg(n);
    for (Vertex y = 0; y < n; ++y) {
        Dist ecc_y = 0;
        for (Vertex x = 0; x < n; ++x) ecc_y = std::max(ecc_y, dm.at(y, x));
        auto layers = layers_from(dm, y, ecc_y);
        for (Vertex z = 0; z < n; ++z) {
            Vertex bad_x = -1, bad_v = -1;
            if (!scan_convexity(g, dm, z, y, layers, peak, arg, &bad_x, &bad_v))
                return std::make_tuple(bad_x, y, bad_v, z);
        }
    }
    return std::nullopt;
}

bool dk_convex(const Graph& g, const std::vector<Vertex>& set, Dist k) {
    return dk_convex(g, set, k, DistanceMatrix(g));
}

bool dk_convex(const Graph& g, const std::vector<Vertex>& set, Dist k, const DistanceMatrix& dm) {
    const Vertex n = g.num_vertices();
    std::vector<char> in(n, 0);
    for (Vertex s : set) in[s] = 1;
    const Dist floor_k = std::max<Dist>(k, 0);
    for (Vertex x : set) {
        auto dx = dm.row(x);
        for (Vertex y : set) {
            if (y <= x || dx[y] < floor_k) continue;
            auto dy = dm.row(y);
            const Dist dxy = dx[y];
            for (Vertex v = 0; v < n; ++v)
                if (!in[v] && dx[v] + dy[v] == dxy) return false;
        }
    }
    return true;
}

bool triangle_condition(const Graph& g) { return triangle_condition(g, DistanceMatrix(g)); }

bool triangle_condition(const Graph& g, const DistanceMatrix& dm) {
    const Vertex n = g.num_vertices();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        auto [u, v] = edges[e];
        auto nu = g.neighbors(u);
        auto nv = g.neighbors(v);
        std::vector<Vertex> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        auto du = dm.row(u);
        auto dv = dm.row(v);
        for (Vertex w = 0; w < n; ++w) {
            const Dist k = du[w];
            if (k < 1 || dv[w] != k) continue;
            bool found = false;
            for (Vertex x : common)
                if (dm.at(x, w) == k - 1) {
                    found = true;
                    break;
                }
            if (!found) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
        }
    }
    return ok.load();
}

std::optional<std::vector<Vertex>> find_isometric(const Graph& pattern, const Graph& host) {
    const Vertex np = pattern.num_vertices();
    const Vertex nh = host.num_vertices();
    if (np > nh) return std::nullopt;
    DistanceMatrix dp(pattern);
    DistanceMatrix dh(host);

    Dist pat_diam = 0;
    for (Vertex a = 0; a < np; ++a)
        for (Vertex b = 0; b < np; ++b) pat_diam = std::max(pat_diam, dp.at(a, b));

    // Distance-profile counts: candidate h must offer at least as many
    // vertices at every distance as the pattern vertex requires.
    auto profile = [pat_diam](const DistanceMatrix& dm, Vertex v) {
        std::vector<int> counts(pat_diam + 1, 0);
        for (Vertex u = 0; u < dm.size(); ++u) {
            Dist d = dm.at(v, u);
            if (d >= 1 && d <= pat_diam) ++counts[d];
        }
        return counts;
    };
    std::vector<std::vector<int>> host_profile(nh);
    for (Vertex h = 0; h < nh; ++h) host_profile[h] = profile(dh, h);

    std::vector<std::vector<Vertex>> candidates(np);
    for (Vertex a = 0; a < np; ++a) {
        auto need = profile(dp, a);
        for (Vertex h = 0; h < nh; ++h) {
            if (host.degree(h) < pattern.degree(a)) continue;
            bool fits = true;
            for (Dist d = 1; d <= pat_diam && fits; ++d)
                if (host_profile[h][d] < need[d]) fits = false;
            if (fits) candidates[a].push_back(h);
        }
        if (candidates[a].empty()) return std::nullopt;
    }

    std::vector<Vertex> map(np, -1);
    std::vector<char> used(nh, 0);
    // Assign pattern vertices in id order, candidates ascending, so the
    // first complete embedding is the lexicographically smallest.
    auto extend = [&](auto&& self, Vertex a) -> bool {
        if (a == np) return true;
        for (Vertex h : candidates[a]) {
            if (used[h]) continue;
            bool consistent = true;
            for (Vertex b = 0; b < a && consistent; ++b)
                if (dh.at(map[b], h) != dp.at(b, a)) consistent = false;
            if (!consistent) continue;
            map[a] = h;
            used[h] = 1;
            if (self(self, a + 1)) return true;
            used[h] = 0;
            map[a] = -1;
        }
        return false;
    };
    if (extend(extend, 0)) return map;
    return std::nullopt;
}

MetricProfile classify(const Graph& g, const Graph* forbidden_pattern) {
    DistanceMatrix dm(g);
    MetricProfile profile;
    profile.alpha_index = alpha_index(g, dm);
    profile.thinness = interval_thinness(g, dm);
    profile.disks_convex = disks_convex(g, dm);
    profile.triangle_condition = triangle_condition(g, dm);
    if (forbidden_pattern != nullptr) {
        bool no_pattern = !find_isometric(*forbidden_pattern, g).has_value();
        profile.alpha1_by_characterization = profile.disks_convex && no_pattern;
    }
    return profile;
}

}  // namespace alphagraph
