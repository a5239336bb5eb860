#ifndef ALPHAGRAPH_APPROX_HPP
#define ALPHAGRAPH_APPROX_HPP

#include <string>
#include <vector>

#include "alphagraph/graph.hpp"

namespace alphagraph {

// Iterated furthest-vertex sweep ending in a mutually distant pair
// (e(p) = e(q) = d(p,q)). All furthest-vertex ties resolve to minimum id.
struct SweepTrace {
    Vertex seed = 0;
    std::vector<Vertex> sequence;  // v1, v2, ... (v1 furthest from seed)
    std::vector<Dist> distances;   // d(v_j, v_{j+1}) per step
    Vertex pair_a = 0, pair_b = 0;  // final pair, ascending ids
    Dist pair_distance = 0;
};

struct SpanningTree {
    Vertex root = 0;
    std::vector<Vertex> parent;  // parent[root] = root; edges exist in G
    std::vector<Dist> tree_ecc;
    std::vector<Vertex> tree_center;  // one vertex, or two adjacent
    Dist tree_radius = 0;

    Graph as_graph() const;  // the tree itself, as a Graph
    std::string to_edge_list_text() const;
};

// Per-vertex eccentricity lower bounds from one mutually distant pair.
struct ApproxEccReport {
    Vertex x = 0, y = 0;
    std::vector<Dist> lower;  // max(d(x,v), d(y,v)) <= e(v)
    std::string mode;         // "mdp" or "double_sweep"
    Vertex radius_witness = 0;
    Dist radius_witness_ecc = 0;
    Vertex diameter_witness = 0;
    Dist diameter_lower = 0;
};

struct TreeEccTable {
    std::vector<Dist> ecc;
    std::vector<Vertex> center;
    Dist radius = 0;
};

enum class ApproxMode { Linear, Mdp };

struct ApproxRadiusResult {
    Vertex c = 0;       // middle vertex
    Vertex x = 0, y = 0;
    Dist pair_distance = 0;
    Dist ecc_c = 0;     // measured by one extra sweep
    ApproxMode mode = ApproxMode::Mdp;
};

struct ApproxDiameterResult {
    Vertex witness = 0;
    Dist lower = 0;
    ApproxMode mode = ApproxMode::Mdp;
};

// x = furthest from z, y = furthest from x (min-id ties), two sweeps.
std::pair<Vertex, Vertex> double_sweep(const Graph& g, Vertex z);

// Iterate furthest vertices until the step distance stops strictly
// increasing; the last two distinct iterates are mutually distant.
SweepTrace mutually_distant_pair(const Graph& g, Vertex z);

// Vertex at index floor(d(x,y)/2) on the canonical x-y path.
Vertex middle_vertex(const Graph& g, Vertex x, Vertex y);

ApproxRadiusResult approx_radius(const Graph& g, ApproxMode mode, Vertex start = 0);

ApproxDiameterResult approx_diameter(const Graph& g, ApproxMode mode, Vertex start = 0);

// Requires (x,y) mutually distant (checked); throws std::invalid_argument.
ApproxEccReport ecc_lower_bounds(const Graph& g, Vertex x, Vertex y);

enum class TreeStrategy { MdpMiddle, SweepMiddle, GivenRoot };

SpanningTree build_ecc_tree(const Graph& g, TreeStrategy strategy, Vertex root = 0);

// Linear-time table for a tree: locate the tree center by leaf stripping,
// then e_T(v) = d_T(v, C(T)) + rad(T). Throws if the graph is not a tree.
TreeEccTable tree_eccentricities(const Graph& tree);

}  // namespace alphagraph

#endif
