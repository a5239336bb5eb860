#ifndef ALPHAGRAPH_CLASSIFIER_HPP
#define ALPHAGRAPH_CLASSIFIER_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "alphagraph/graph.hpp"

namespace alphagraph {

struct MetricProfile {
    Dist alpha_index = 0;
    Dist thinness = 0;
    bool disks_convex = true;
    bool triangle_condition = true;
    // Only computed when the forbidden-pattern graph is available.
    std::optional<bool> alpha1_by_characterization;
};

// Smallest i such that gluing two shortest paths on a shared terminal edge
// is short by at most i. Scans all edges vw against all qualifying (u,x)
// pairs; O(m n^2) worst case, parallel over edges.
Dist alpha_index(const Graph& g);
Dist alpha_index(const Graph& g, const DistanceMatrix& dm);

// Largest diameter of an interior slice over all intervals.
Dist interval_thinness(const Graph& g);
Dist interval_thinness(const Graph& g, const DistanceMatrix& dm);

// True iff every disk is convex, via the triple criterion
// d(v,z) <= max(d(x,z), d(y,z)) for all v between x and y.
bool disks_convex(const Graph& g);
bool disks_convex(const Graph& g, const DistanceMatrix& dm);

// Deterministic witness (x, y, v, z) of a convexity failure, if any.
std::optional<std::tuple<Vertex, Vertex, Vertex, Vertex>> disks_convex_witness(
    const Graph& g, const DistanceMatrix& dm);

// True iff `set` contains I(x,y) for every pair of its members with
// d(x,y) >= k. Negative k behaves like k = 0 (plain convexity).
bool dk_convex(const Graph& g, const std::vector<Vertex>& set, Dist k);
bool dk_convex(const Graph& g, const std::vector<Vertex>& set, Dist k, const DistanceMatrix& dm);

// True iff equidistant endpoints of any edge have a common neighbor one
// step closer to the reference vertex.
bool triangle_condition(const Graph& g);
bool triangle_condition(const Graph& g, const DistanceMatrix& dm);

// Distance-preserving injective embedding of a small pattern into a host.
// Returns the lexicographically first mapping (pattern id -> host id), if one
// exists. Pattern size is expected to stay small (about a dozen vertices).
std::optional<std::vector<Vertex>> find_isometric(const Graph& pattern, const Graph& host);

MetricProfile classify(const Graph& g, const Graph* forbidden_pattern = nullptr);

}  // namespace alphagraph

#endif
