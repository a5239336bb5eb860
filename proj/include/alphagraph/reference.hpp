#ifndef ALPHAGRAPH_REFERENCE_HPP
#define ALPHAGRAPH_REFERENCE_HPP

#include <optional>
#include <vector>

#include "alphagraph/graph.hpp"

// Serial reference implementations, written independently of the production
// kernels and kept for testing and benchmarking. They favor the literal
// definition over speed: quadruple scans instead of edge scans, frontier
// sweeps instead of queues. Intended for small inputs.
namespace alphagraph::ref {

// Level-synchronous frontier BFS; shares no code with alphagraph::bfs.
std::vector<Dist> frontier_distances(const Graph& g, Vertex source);

std::vector<Dist> eccentricities(const Graph& g);

// Maximum gluing defect over all ordered quadruples (u,v,w,x) with
// vw an edge, v between u and w, and w between v and x.
Dist alpha_index_bruteforce(const Graph& g);

Dist interval_thinness_bruteforce(const Graph& g);

bool disks_convex_bruteforce(const Graph& g);

bool dk_convex_bruteforce(const Graph& g, const std::vector<Vertex>& set, Dist k);

bool triangle_condition_bruteforce(const Graph& g);

// Per-vertex eccentricities of a tree by n independent sweeps.
std::vector<Dist> tree_eccentricities_bruteforce(const Graph& tree);

}  // namespace alphagraph::ref

#endif
