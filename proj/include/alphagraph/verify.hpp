#ifndef ALPHAGRAPH_VERIFY_HPP
#define ALPHAGRAPH_VERIFY_HPP

#include <string>
#include <vector>

#include "alphagraph/generators.hpp"
#include "alphagraph/graph.hpp"

namespace alphagraph::verify {

struct CheckResult {
    std::string name;
    long cases = 0;
    long violations = 0;
    bool skipped = false;
    std::string note;  // first violation, or the reason for a skip
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    long violations() const;
    bool ok() const;
};

// Every check generates its own seeded corpus, evaluates one family of
// inequalities against the exact oracle, and reports violation counts.
// All bounds are integral and checked exactly.

CheckResult check_classifier_sanity(std::uint64_t seed, int count, Vertex nmax);
CheckResult check_class_containment(std::uint64_t seed, int count);
std::vector<CheckResult> check_center_structure(std::uint64_t seed, int count, Vertex nmax);
std::vector<CheckResult> check_radius_diameter_approx(std::uint64_t seed, int count,
                                                      Vertex nmax_large);
std::vector<CheckResult> check_all_ecc_approx(std::uint64_t seed, int count);
std::vector<CheckResult> check_unimodality(std::uint64_t seed, int count, Vertex nmax);
std::vector<CheckResult> check_central_algorithms(std::uint64_t seed, int count);
std::vector<CheckResult> check_gate_machinery(std::uint64_t seed, int count);
CheckResult check_characterization(std::uint64_t seed, int count, Vertex nmax,
                                   const Graph* pattern);

// Named suites for the command-line verifier:
//   core-suite    graph primitives against the serial reference
//   alpha1-suite  everything specific to alpha index <= 1 corpora
//   alphai-suite  general bounds parameterized by the measured index
//   all           union of the above
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count,
                      const Graph* pattern = nullptr);

CheckResult check_core_primitives(std::uint64_t seed, int count, Vertex nmax);

}  // namespace alphagraph::verify

#endif
