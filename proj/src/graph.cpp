#include "alphagraph/graph.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <queue>
#include <sstream>

namespace alphagraph {

namespace {

std::atomic<std::uint64_t> g_bfs_invocations{0};

void bump_bfs_counter() { g_bfs_invocations.fetch_add(1, std::memory_order_relaxed); }

}  // namespace

std::uint64_t bfs_invocations() { return g_bfs_invocations.load(std::memory_order_relaxed); }
void reset_bfs_invocations() { g_bfs_invocations.store(0, std::memory_order_relaxed); }
void add_bfs_invocations(std::uint64_t sweeps) {
    g_bfs_invocations.fetch_add(sweeps, std::memory_order_relaxed);
}

Graph Graph::from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
    if (n <= 0) throw GraphFormatError("vertex count must be positive");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphFormatError("edge endpoint out of range 0.." + std::to_string(n - 1));
        if (u == v) throw GraphFormatError("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw GraphFormatError("duplicate edge in input");

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(edges.size());
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.nbrs_.resize(2 * edges.size());
    std::vector<std::int32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.nbrs_[fill[u]++] = v;
        g.nbrs_[fill[v]++] = u;
    }
    // Insertion order keeps each list sorted: edges were sorted by (u,v) and
    // the reversed copies arrive in increasing u per target list.
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        if (!std::is_sorted(nb.begin(), nb.end()))
            std::sort(g.nbrs_.begin() + g.offsets_[v], g.nbrs_.begin() + g.offsets_[v + 1]);
    }

    // Connectivity check.
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    Vertex reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) throw DisconnectedGraphError("graph is not connected");
    return g;
}

Graph Graph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::int64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw GraphFormatError("missing or malformed \"n m\" header");
    if (n <= 0 || m < 0) throw GraphFormatError("header values out of range");
    if (n > 1000000) throw GraphFormatError("vertex count exceeds format cap of 10^6");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::int64_t u = 0, v = 0;
    while (in >> u >> v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!in.eof()) throw GraphFormatError("malformed edge line");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw GraphFormatError("header declares " + std::to_string(m) + " edges but file has " +
                               std::to_string(edges.size()));
    return from_edges(static_cast<Vertex>(n), std::move(edges));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::to_edge_list_text() const {
    std::string out = std::to_string(n_) + " " + std::to_string(m_) + "\n";
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Dist DistanceRow::eccentricity() const {
    Dist e = 0;
    for (Dist d : dist) e = std::max(e, d);
    return e;
}

Vertex DistanceRow::min_id_furthest() const {
    Dist e = eccentricity();
    for (Vertex v = 0; v < static_cast<Vertex>(dist.size()); ++v)
        if (dist[v] == e) return v;
    return source;
}

DistanceRow bfs(const Graph& g, Vertex source) {
    bump_bfs_counter();
    const Vertex n = g.num_vertices();
    DistanceRow row;
    row.source = source;
    row.dist.assign(n, -1);
    row.parent.assign(n, -1);
    std::vector<Vertex> queue;
    queue.reserve(n);
    queue.push_back(source);
    row.dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (row.dist[w] < 0) {
                row.dist[w] = row.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    // Canonical parents: minimum-id neighbor one layer closer to the source.
    // Neighbor lists are sorted, so the first qualifying neighbor is minimal.
    row.parent[source] = source;
    for (Vertex v = 0; v < n; ++v) {
        if (v == source) continue;
        for (Vertex w : g.neighbors(v)) {
            if (row.dist[w] == row.dist[v] - 1) {
                row.parent[v] = w;
                break;
            }
        }
    }
    return row;
}

std::vector<Dist> multi_source_dist(const Graph& g, std::span<const Vertex> sources) {
    bump_bfs_counter();
    const Vertex n = g.num_vertices();
    std::vector<Dist> dist(n, -1);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s : sources) {
        if (dist[s] == 0) continue;
        dist[s] = 0;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<Vertex> canonical_path(const Graph& g, Vertex x, Vertex y) {
    DistanceRow row = bfs(g, x);
    std::vector<Vertex> path;
    for (Vertex v = y; v != x; v = row.parent[v]) path.push_back(v);
    path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v) {
    DistanceRow from_u = bfs(g, u);
    DistanceRow from_v = bfs(g, v);
    const Dist duv = from_u.dist[v];
    std::vector<Vertex> members;
    for (Vertex x = 0; x < g.num_vertices(); ++x)
        if (from_u.dist[x] + from_v.dist[x] == duv) members.push_back(x);
    return members;
}

std::vector<Vertex> slice(const Graph& g, Vertex u, Vertex v, Dist k) {
    DistanceRow from_u = bfs(g, u);
    DistanceRow from_v = bfs(g, v);
    const Dist duv = from_u.dist[v];
    if (k < 0 || k > duv)
        throw std::out_of_range("slice index " + std::to_string(k) + " outside 0.." +
                                std::to_string(duv));
    std::vector<Vertex> members;
    for (Vertex x = 0; x < g.num_vertices(); ++x)
        if (from_u.dist[x] == k && from_u.dist[x] + from_v.dist[x] == duv) members.push_back(x);
    return members;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.num_vertices()) {
    d_.assign(static_cast<std::size_t>(n_) * n_, -1);
#pragma omp parallel for schedule(dynamic, 16)
    for (Vertex s = 0; s < n_; ++s) {
        bump_bfs_counter();
        Dist* dist = d_.data() + static_cast<std::size_t>(s) * n_;
        std::vector<Vertex> queue;
        queue.reserve(n_);
        queue.push_back(s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace alphagraph
