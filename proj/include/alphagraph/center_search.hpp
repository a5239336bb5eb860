#ifndef ALPHAGRAPH_CENTER_SEARCH_HPP
#define ALPHAGRAPH_CENTER_SEARCH_HPP

#include <optional>
#include <vector>

#include "alphagraph/graph.hpp"

namespace alphagraph {

// Gate candidates of every vertex with respect to a target set A: a vertex
// of N(A) within distance d(v,A)-1 of v, chosen by propagating the
// neighbor-in-A count maximizer along BFS layers (min-id ties).
struct GateMap {
    std::vector<Vertex> target;        // sorted
    std::vector<Dist> dist_to_target;  // d(v, A)
    std::vector<Vertex> candidate;     // v itself when d(v,A) <= 1
    std::vector<int> p_value;          // |N(candidate) ∩ A|
};

GateMap compute_gates(const Graph& g, std::vector<Vertex> target);

// Whether the candidate lies on a shortest path from v to every nearest
// member of the target (the defining gate property). Two sweeps per query.
bool verified_gate(const Graph& g, const GateMap& gm, Vertex v);
bool verified_gate(const Graph& g, const GateMap& gm, Vertex v, const DistanceMatrix& dm);

// Distance-two gates with respect to a clique K, with the independent sets
// J_K(u) whose neighbor-sets partition the projection onto K.
struct D2GateMap {
    std::vector<Vertex> clique;  // sorted
    std::vector<Dist> dist_to_clique;
    std::vector<Vertex> gate;               // d(gate, K) <= 2
    std::vector<int> p_value;               // |proj(gate, K)| bookkeeping
    std::vector<std::vector<Vertex>> j_set;  // filled for d(u,K) == 2
};

// Throws std::invalid_argument if K is not a clique.
D2GateMap compute_d2_gates(const Graph& g, std::vector<Vertex> clique);

// flags[j] = true iff list[j] is adjacent to some earlier list member,
// i.e. the edge from list[j] back to the scan owner closes a triangle.
std::vector<bool> flags_adjacent_to_earlier(const Graph& g, const std::vector<Vertex>& list);

struct DescendOutcome {
    bool improved = false;
    Vertex better = -1;  // only when improved
    Dist ecc_x = 0;      // e(x), measured
};

// One gradient step: either a neighbor with strictly smaller eccentricity,
// or the assertion that e(x) <= rad(G)+1 (valid on alpha_1 inputs).
DescendOutcome descend_rad2(const Graph& g, Vertex x);

enum class GateMode {
    DistanceTwo,  // general alpha_1 route
    Direct,       // gates only; valid when the triangle condition holds
};

struct LocalSearchOutcome {
    bool improved = false;
    Vertex better = -1;
    Dist ecc_x = 0;
    bool fallback_used = false;  // set when K was not a clique
};

// Either a neighbor with smaller eccentricity or a certified local minimum.
// The improving neighbor, when reported, has eccentricity exactly e(x)-1.
LocalSearchOutcome local_min_step(const Graph& g, Vertex x, GateMode mode = GateMode::DistanceTwo);

// Vertex with e <= rad(G)+1 on alpha_1 inputs: sweep middle plus at most
// two descend steps.
Vertex find_rad_plus_1(const Graph& g);

struct CenterSearchIter {
    Vertex x = -1;
    Dist ecc_x = 0;
    Vertex z = -1;
    std::int64_t candidate_count = 0;  // |X_{i+1}|
    std::vector<Vertex> probes;
};

struct CenterSearchTrace {
    Vertex start = -1;
    std::vector<CenterSearchIter> iterations;
    bool low_degree_exit = false;
    Vertex result = -1;
};

// Exact central vertex of an alpha_1-metric graph (caller-asserted);
// shrinking-candidate-set local search, subquadratic on such inputs.
Vertex find_central_alpha1(const Graph& g, CenterSearchTrace* trace = nullptr);

struct DeltaSearchTrace {
    Vertex local_min = -1;
    Vertex y1 = -1, y2 = -1, z1 = -1;
    std::int64_t b1_size = -1, b2_size = -1;
    Vertex pair_u = -1, pair_v = -1;
    std::int64_t slice_size = -1;
    Vertex universal = -1;
    Vertex result = -1;
};

// Exact central vertex of a graph satisfying the alpha_1 and triangle
// conditions (caller-asserted); constant number of sweeps.
// Throws ClassificationViolation when the universal-slice-vertex step fails.
Vertex find_central_alpha1_delta(const Graph& g, DeltaSearchTrace* trace = nullptr);

}  // namespace alphagraph

#endif
