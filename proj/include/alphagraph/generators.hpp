#ifndef ALPHAGRAPH_GENERATORS_HPP
#define ALPHAGRAPH_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphagraph/graph.hpp"

namespace alphagraph {

// splitmix64: the usual constants, chosen for cross-language reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // Uniform-ish value in [0, bound); modulo bias is irrelevant at the
    // corpus sizes used here and keeps the stream portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Independent stream for sub-task `index` of the same seed.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0xA0761D6478BD642Full * (index + 1)));
        return mix.next();
    }

private:
    std::uint64_t state_;
};

struct GenSpec {
    std::string cls;  // chordal | distance_hereditary | ptolemaic | cycle |
                      // path | grid | gnp_connected | named
    Vertex n = 1;
    std::uint64_t seed = 0;
    int max_attach = 3;                    // chordal
    std::array<int, 3> op_mix{1, 1, 1};    // pendant / true twin / false twin
    double edge_prob = 0.1;                // gnp_connected
    Vertex rows = 1, cols = 1;             // grid
    std::string name;                      // named
};

struct GenResult {
    Graph graph;
    GenSpec spec;
    // Reverse insertion order; a perfect elimination order for chordal
    // constructions, empty otherwise.
    std::vector<Vertex> elimination_order;
};

struct PatternUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simplicial-growth construction; chordal by construction, with the
// elimination order emitted as its certificate.
GenResult gen_chordal(Vertex n, std::uint64_t seed, int max_attach = 3);

// One-vertex extensions: pendant, true twin, false twin, drawn by op_mix
// weights. Throws std::invalid_argument when all weights are zero.
GenResult gen_distance_hereditary(Vertex n, std::uint64_t seed, std::array<int, 3> op_mix = {1, 1, 1});

// Pendant and true-twin growth only; the alpha index of every sample is
// re-checked and the build retried on the next sub-seed if nonzero.
GenResult gen_ptolemaic(Vertex n, std::uint64_t seed);

GenResult gen_cycle(Vertex n);
GenResult gen_path(Vertex n);
GenResult gen_grid(Vertex rows, Vertex cols);
GenResult gen_gnp_connected(Vertex n, std::uint64_t seed, double edge_prob);

// Fixed graphs by name: c4, c5, c6, p5, k4, diamond, w6pp. The w6pp pattern
// is loaded from `pattern_path`; a missing file raises PatternUnavailable.
GenResult gen_named(const std::string& name, const std::string& pattern_path = "data/w6pp.edges");

GenResult generate(const GenSpec& spec);

}  // namespace alphagraph

#endif
