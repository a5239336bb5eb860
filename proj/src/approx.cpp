#include "alphagraph/approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace alphagraph {

Graph SpanningTree::as_graph() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < static_cast<Vertex>(parent.size()); ++v)
        if (parent[v] != v) edges.emplace_back(parent[v], v);
    return Graph::from_edges(static_cast<Vertex>(parent.size()), std::move(edges));
}

std::string SpanningTree::to_edge_list_text() const { return as_graph().to_edge_list_text(); }

std::pair<Vertex, Vertex> double_sweep(const Graph& g, Vertex z) {
    Vertex x = bfs(g, z).min_id_furthest();
    Vertex y = bfs(g, x).min_id_furthest();
    return {x, y};
}

SweepTrace mutually_distant_pair(const Graph& g, Vertex z) {
    SweepTrace trace;
    trace.seed = z;
    Vertex prev = bfs(g, z).min_id_furthest();
    trace.sequence.push_back(prev);
    Dist best = -1;
    while (true) {
        DistanceRow row = bfs(g, prev);
        Vertex next = row.min_id_furthest();
        Dist step = row.dist[next];
        trace.sequence.push_back(next);
        trace.distances.push_back(step);
        if (step <= best) {
            // prev and the vertex before it are mutually distant.
            Vertex a = trace.sequence[trace.sequence.size() - 3];
            trace.pair_a = std::min(a, prev);
            trace.pair_b = std::max(a, prev);
            trace.pair_distance = best;
            break;
        }
        best = step;
        prev = next;
    }
    return trace;
}

Vertex middle_vertex(const Graph& g, Vertex x, Vertex y) {
    auto path = canonical_path(g, x, y);
    return path[(path.size() - 1) / 2];
}

ApproxRadiusResult approx_radius(const Graph& g, ApproxMode mode, Vertex start) {
    ApproxRadiusResult res;
    res.mode = mode;
    if (mode == ApproxMode::Linear) {
        auto [x, y] = double_sweep(g, start);
        res.x = x;
        res.y = y;
    } else {
        SweepTrace trace = mutually_distant_pair(g, start);
        res.x = trace.pair_a;
        res.y = trace.pair_b;
    }
    res.c = middle_vertex(g, res.x, res.y);
    DistanceRow from_c = bfs(g, res.c);
    res.ecc_c = from_c.eccentricity();
    res.pair_distance = bfs(g, res.x).dist[res.y];
    return res;
}

ApproxDiameterResult approx_diameter(const Graph& g, ApproxMode mode, Vertex start) {
    ApproxDiameterResult res;
    res.mode = mode;
    if (mode == ApproxMode::Linear) {
        Vertex v = bfs(g, start).min_id_furthest();
        res.witness = v;
        res.lower = bfs(g, v).eccentricity();
    } else {
        SweepTrace trace = mutually_distant_pair(g, start);
        res.witness = trace.pair_a;
        res.lower = trace.pair_distance;
    }
    return res;
}

ApproxEccReport ecc_lower_bounds(const Graph& g, Vertex x, Vertex y) {
    DistanceRow from_x = bfs(g, x);
    DistanceRow from_y = bfs(g, y);
    const Dist exy = from_x.dist[y];
    if (from_x.eccentricity() != exy || from_y.eccentricity() != exy)
        throw std::invalid_argument("vertices are not mutually distant");

    ApproxEccReport report;
    report.x = x;
    report.y = y;
    report.mode = "mdp";
    report.lower.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        report.lower[v] = std::max(from_x.dist[v], from_y.dist[v]);
    report.diameter_witness = x;
    report.diameter_lower = exy;
    report.radius_witness = middle_vertex(g, x, y);
    report.radius_witness_ecc = bfs(g, report.radius_witness).eccentricity();
    return report;
}

SpanningTree build_ecc_tree(const Graph& g, TreeStrategy strategy, Vertex root) {
    Vertex r = root;
    if (strategy == TreeStrategy::MdpMiddle) {
        SweepTrace trace = mutually_distant_pair(g, 0);
        r = middle_vertex(g, trace.pair_a, trace.pair_b);
    } else if (strategy == TreeStrategy::SweepMiddle) {
        auto [x, y] = double_sweep(g, 0);
        r = middle_vertex(g, x, y);
    }
    DistanceRow row = bfs(g, r);
    SpanningTree tree;
    tree.root = r;
    tree.parent = row.parent;
    TreeEccTable table = tree_eccentricities(tree.as_graph());
    tree.tree_ecc = std::move(table.ecc);
    tree.tree_center = std::move(table.center);
    tree.tree_radius = table.radius;
    return tree;
}

TreeEccTable tree_eccentricities(const Graph& tree) {
    const Vertex n = tree.num_vertices();
    if (tree.num_edges() != n - 1) throw std::invalid_argument("input is not a tree");

    TreeEccTable table;
    if (n == 1) {
        table.ecc = {0};
        table.center = {0};
        table.radius = 0;
        return table;
    }

    // Strip leaves layer by layer; the last one or two survivors are C(T).
    std::vector<Vertex> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = tree.degree(v);
    std::vector<Vertex> frontier;
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) frontier.push_back(v);
    Vertex remaining = n;
    while (remaining > 2) {
        std::vector<Vertex> next;
        for (Vertex leaf : frontier) {
            removed[leaf] = 1;
            --remaining;
            for (Vertex w : tree.neighbors(leaf)) {
                if (removed[w]) continue;
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) table.center.push_back(v);

    std::vector<Dist> dist_to_center = multi_source_dist(tree, table.center);
    Dist far = *std::max_element(dist_to_center.begin(), dist_to_center.end());
    table.radius = far + (table.center.size() == 2 ? 1 : 0);
    table.ecc.resize(n);
    for (Vertex v = 0; v < n; ++v) table.ecc[v] = dist_to_center[v] + table.radius;
    return table;
}

}  // namespace alphagraph
