#ifndef ALPHAGRAPH_GRAPH_HPP
#define ALPHAGRAPH_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alphagraph {

using Vertex = std::int32_t;
using Dist = std::int32_t;

/// Raised on malformed edge-list input (bad header, loops, duplicate edges,
/// id out of range, edge count mismatch). The message states which rule broke.
struct GraphFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when the input graph is not connected.
struct DisconnectedGraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a guaranteed algorithm detects that its structural
/// precondition does not hold on the given graph.
struct ClassificationViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable, simple, connected, undirected graph over dense ids 0..n-1.
// Neighbor lists are sorted ascending; safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates simplicity and connectivity; edges may be given in any order.
    static Graph from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges);

    // Edge-list text format: header "n m", then m lines "u v" (0-based ids,
    // whitespace separated). The only graph wire format used by this project.
    static Graph parse(std::string_view text);

    Vertex num_vertices() const { return n_; }
    std::int64_t num_edges() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
    }
    Vertex degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    // Canonical text form: "n m" header, edges sorted with u < v.
    std::string to_edge_list_text() const;

    bool operator==(const Graph& other) const = default;

private:
    Vertex n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int32_t> offsets_;
    std::vector<Vertex> nbrs_;
};

// One BFS layer table from a fixed source. parent(v) is the minimum-id
// neighbor of v in the previous layer; parent(source) = source.
struct DistanceRow {
    Vertex source = 0;
    std::vector<Dist> dist;
    std::vector<Vertex> parent;

    Dist eccentricity() const;
    // Minimum-id vertex among those most distant from the source.
    Vertex min_id_furthest() const;
};

// Global counter of BFS sweeps (single- and multi-source). Used to make
// "constant number of BFS calls" claims checkable from tests and reports.
std::uint64_t bfs_invocations();
void reset_bfs_invocations();
void add_bfs_invocations(std::uint64_t sweeps);

DistanceRow bfs(const Graph& g, Vertex source);

// Hop distance to the nearest member of `sources` for every vertex.
std::vector<Dist> multi_source_dist(const Graph& g, std::span<const Vertex> sources);

// Shortest x-y path as a vertex list, fixed by following BFS(x) canonical
// parents back from y. Length d(x,y); returns {x} when x == y.
std::vector<Vertex> canonical_path(const Graph& g, Vertex x, Vertex y);

// I(u,v) = {x : d(u,x) + d(x,v) = d(u,v)}, sorted ascending.
std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v);

// Slice of the interval at distance k from u; throws std::out_of_range
// unless 0 <= k <= d(u,v).
std::vector<Vertex> slice(const Graph& g, Vertex u, Vertex v, Dist k);

// Dense all-pairs hop distances, one BFS row per vertex (parallel fill).
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g);

    Dist at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    std::span<const Dist> row(Vertex u) const {
        return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
    }
    Vertex size() const { return n_; }

private:
    Vertex n_ = 0;
    std::vector<Dist> d_;
};

// FNV-1a 64-bit, used to fingerprint inputs in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace alphagraph

#endif
