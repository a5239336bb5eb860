#include "alphagraph/oracle.hpp"

#include <algorithm>
#include <limits>

namespace alphagraph {

namespace {

// BFS restricted to a vertex subset. `members` maps local -> global id,
// `local_of` the inverse (-1 outside). Returns local distance row.
std::vector<Dist> induced_bfs(const Graph& g, const std::vector<Vertex>& members,
                              const std::vector<Vertex>& local_of, std::size_t local_src) {
    std::vector<Dist> dist(members.size(), -1);
    std::vector<std::size_t> queue{local_src};
    dist[local_src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t u = queue[head];
        for (Vertex w : g.neighbors(members[u])) {
            Vertex lw = local_of[w];
            if (lw >= 0 && dist[lw] < 0) {
                dist[lw] = dist[u] + 1;
                queue.push_back(static_cast<std::size_t>(lw));
            }
        }
    }
    return dist;
}

}  // namespace

EccReport exact_eccentricities(const Graph& g) {
    const Vertex n = g.num_vertices();
    EccReport report;
    report.ecc.assign(n, 0);
#pragma omp parallel
    {
        std::vector<Dist> dist(n);
        std::vector<Vertex> queue(n);
#pragma omp for schedule(dynamic, 16)
        for (Vertex s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            queue[0] = s;
            dist[s] = 0;
            std::size_t tail = 1;
            Dist far = 0;
            for (std::size_t head = 0; head < tail; ++head) {
                Vertex u = queue[head];
                for (Vertex w : g.neighbors(u)) {
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        far = std::max(far, dist[w]);
                        queue[tail++] = w;
                    }
                }
            }
            report.ecc[s] = far;
        }
    }
    add_bfs_invocations(static_cast<std::uint64_t>(n));
    report.radius = *std::min_element(report.ecc.begin(), report.ecc.end());
    report.diameter = *std::max_element(report.ecc.begin(), report.ecc.end());
    for (Vertex v = 0; v < n; ++v)
        if (report.ecc[v] == report.radius) report.center.push_back(v);
    report.mode = EccMode::Exact;
    return report;
}

CenterInfo center_info(const Graph& g) {
    EccReport report = exact_eccentricities(g);
    CenterInfo info;
    info.center = report.center;
    info.eps_flag = (report.diameter >= 2 * report.radius - 1) ? 1 : 0;

    for (Dist k = 0; k <= report.diameter - report.radius; ++k) {
        std::vector<Vertex> level;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (report.ecc[v] <= report.radius + k) level.push_back(v);
        info.level_sets.push_back(std::move(level));
    }

    // Host-graph metric restricted to the center.
    std::vector<Dist> ecc_in_g(info.center.size(), 0);
    for (std::size_t i = 0; i < info.center.size(); ++i) {
        DistanceRow row = bfs(g, info.center[i]);
        for (Vertex c : info.center) ecc_in_g[i] = std::max(ecc_in_g[i], row.dist[c]);
    }
    info.diam_of_center = *std::max_element(ecc_in_g.begin(), ecc_in_g.end());
    info.rad_of_center_g = *std::min_element(ecc_in_g.begin(), ecc_in_g.end());

    // Induced-subgraph metric; disconnected centers are flagged and measured
    // per component (unreachable pairs do not contribute).
    std::vector<Vertex> local_of(g.num_vertices(), -1);
    for (std::size_t i = 0; i < info.center.size(); ++i)
        local_of[info.center[i]] = static_cast<Vertex>(i);
    Dist diam_ind = 0;
    Dist rad_ind = 0;
    bool connected = true;
    std::vector<Dist> ecc_ind(info.center.size(), 0);
    std::vector<char> reachable_all(info.center.size(), 1);
    for (std::size_t i = 0; i < info.center.size(); ++i) {
        auto dist = induced_bfs(g, info.center, local_of, i);
        Dist far = 0;
        for (Dist d : dist) {
            if (d < 0)
                connected = false;
            else
                far = std::max(far, d);
        }
        ecc_ind[i] = far;
        diam_ind = std::max(diam_ind, far);
    }
    // Per-component radius: minimize only among vertices of the same
    // component; report the max of those minima when disconnected.
    if (connected) {
        rad_ind = *std::min_element(ecc_ind.begin(), ecc_ind.end());
    } else {
        std::vector<int> comp(info.center.size(), -1);
        int ncomp = 0;
        for (std::size_t i = 0; i < info.center.size(); ++i) {
            if (comp[i] >= 0) continue;
            auto dist = induced_bfs(g, info.center, local_of, i);
            for (std::size_t j = 0; j < dist.size(); ++j)
                if (dist[j] >= 0) comp[j] = ncomp;
            ++ncomp;
        }
        rad_ind = 0;
        for (int c = 0; c < ncomp; ++c) {
            Dist best = std::numeric_limits<Dist>::max();
            for (std::size_t i = 0; i < info.center.size(); ++i)
                if (comp[i] == c) best = std::min(best, ecc_ind[i]);
            rad_ind = std::max(rad_ind, best);
        }
    }
    info.diam_of_center_induced = diam_ind;
    info.rad_of_center = rad_ind;
    info.center_connected = connected;
    return info;
}

FurthestSet furthest_set(const Graph& g, Vertex v) {
    DistanceRow row = bfs(g, v);
    Dist e = row.eccentricity();
    FurthestSet fs;
    fs.v = v;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        if (row.dist[u] == e) fs.members.push_back(u);
    return fs;
}

Locality locality(const Graph& g, Vertex v) { return locality(g, v, exact_eccentricities(g)); }

Locality locality(const Graph& g, Vertex v, const EccReport& report) {
    Locality loc;
    if (report.ecc[v] == report.radius) {
        loc.is_central = true;
        return loc;
    }
    DistanceRow row = bfs(g, v);
    Dist best = std::numeric_limits<Dist>::max();
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        if (report.ecc[u] < report.ecc[v]) best = std::min(best, row.dist[u]);
    loc.value = best;
    return loc;
}

}  // namespace alphagraph
