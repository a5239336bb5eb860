#ifndef ALPHAGRAPH_ORACLE_HPP
#define ALPHAGRAPH_ORACLE_HPP

#include <vector>

#include "alphagraph/graph.hpp"

namespace alphagraph {

enum class EccMode { Exact, Approximate };

struct EccReport {
    std::vector<Dist> ecc;
    Dist radius = 0;
    Dist diameter = 0;
    std::vector<Vertex> center;  // sorted
    EccMode mode = EccMode::Exact;
};

struct CenterInfo {
    std::vector<Vertex> center;
    Dist diam_of_center = 0;          // distances measured in the host graph
    Dist diam_of_center_induced = 0;  // distances inside the induced subgraph
    Dist rad_of_center = 0;           // radius of the induced subgraph
    Dist rad_of_center_g = 0;         // radius using host-graph distances
    bool center_connected = true;     // induced subgraph connectivity
    // level_sets[k] = sorted {v : ecc(v) <= radius + k}, k = 0..diam-rad.
    std::vector<std::vector<Vertex>> level_sets;
    int eps_flag = 0;  // 1 iff diam >= 2*rad - 1
};

struct FurthestSet {
    Vertex v = 0;
    std::vector<Vertex> members;  // sorted
};

struct Locality {
    Dist value = 0;
    bool is_central = false;  // central vertices get value 0 and this flag
};

// Ground truth by n BFS sweeps, parallel across sources.
EccReport exact_eccentricities(const Graph& g);

CenterInfo center_info(const Graph& g);

FurthestSet furthest_set(const Graph& g, Vertex v);

// Distance from v to the nearest vertex of strictly smaller eccentricity.
Locality locality(const Graph& g, Vertex v);
Locality locality(const Graph& g, Vertex v, const EccReport& report);

}  // namespace alphagraph

#endif
