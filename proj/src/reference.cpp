#include "alphagraph/reference.hpp"

#include <algorithm>

namespace alphagraph::ref {

namespace {

// Local all-pairs table built from frontier sweeps only.
std::vector<std::vector<Dist>> all_rows(const Graph& g) {
    std::vector<std::vector<Dist>> rows(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) rows[v] = frontier_distances(g, v);
    return rows;
}

}  // namespace

std::vector<Dist> frontier_distances(const Graph& g, Vertex source) {
    const Vertex n = g.num_vertices();
    std::vector<Dist> dist(n, -1);
    std::vector<Vertex> frontier{source};
    dist[source] = 0;
    Dist level = 0;
    while (!frontier.empty()) {
        ++level;
        std::vector<Vertex> next;
        for (Vertex u : frontier)
            for (Vertex w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = level;
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    return dist;
}

std::vector<Dist> eccentricities(const Graph& g) {
    std::vector<Dist> ecc(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Dist d : frontier_distances(g, v)) ecc[v] = std::max(ecc[v], d);
    }
    return ecc;
}

Dist alpha_index_bruteforce(const Graph& g) {
    const Vertex n = g.num_vertices();
    auto d = all_rows(g);
    Dist worst = 0;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            for (Vertex u = 0; u < n; ++u) {
                if (d[u][w] != d[u][v] + 1) continue;  // v between u and w
                for (Vertex x = 0; x < n; ++x) {
                    if (d[v][x] != d[w][x] + 1) continue;  // w between v and x
                    worst = std::max(worst, d[u][v] + 1 + d[w][x] - d[u][x]);
                }
            }
    return worst;
}

Dist interval_thinness_bruteforce(const Graph& g) {
    const Vertex n = g.num_vertices();
    auto d = all_rows(g);
    Dist worst = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (Dist k = 1; k < d[u][v]; ++k) {
                std::vector<Vertex> sl;
                for (Vertex x = 0; x < n; ++x)
                    if (d[u][x] == k && d[u][x] + d[x][v] == d[u][v]) sl.push_back(x);
                for (std::size_t i = 0; i < sl.size(); ++i)
                    for (std::size_t j = i + 1; j < sl.size(); ++j)
                        worst = std::max(worst, d[sl[i]][sl[j]]);
            }
    return worst;
}

bool disks_convex_bruteforce(const Graph& g) {
    const Vertex n = g.num_vertices();
    auto d = all_rows(g);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            for (Vertex v = 0; v < n; ++v) {
                if (d[x][v] + d[v][y] != d[x][y]) continue;
                for (Vertex z = 0; z < n; ++z)
                    if (d[v][z] > std::max(d[x][z], d[y][z])) return false;
            }
    return true;
}

bool dk_convex_bruteforce(const Graph& g, const std::vector<Vertex>& set, Dist k) {
    const Vertex n = g.num_vertices();
    auto d = all_rows(g);
    std::vector<char> in(n, 0);
    for (Vertex s : set) in[s] = 1;
    for (Vertex x : set)
        for (Vertex y : set) {
            if (d[x][y] < std::max<Dist>(k, 0)) continue;
            for (Vertex v = 0; v < n; ++v)
                if (!in[v] && d[x][v] + d[v][y] == d[x][y]) return false;
        }
    return true;
}

bool triangle_condition_bruteforce(const Graph& g) {
    const Vertex n = g.num_vertices();
    auto d = all_rows(g);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) {
            if (v < u) continue;
            for (Vertex w = 0; w < n; ++w) {
                Dist k = d[u][w];
                if (k < 1 || d[v][w] != k) continue;
                bool found = false;
                for (Vertex x : g.neighbors(u))
                    if (g.has_edge(v, x) && d[x][w] == k - 1) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        }
    return true;
}

std::vector<Dist> tree_eccentricities_bruteforce(const Graph& tree) {
    return eccentricities(tree);
}

}  // namespace alphagraph::ref
