// Acceptance gate: every release-blocking property, one verdict line each.
// All bounds are integral and checked exactly; a criterion passes only with
// zero violations. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <vector>

#include "alphagraph/cli.hpp"
#include "alphagraph/generators.hpp"
#include "alphagraph/verify.hpp"

using namespace alphagraph;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int id, const std::string& label, bool pass, const std::string& detail,
             double seconds) {
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << label << " ("
         << std::fixed;
    line.precision(1);
    line << seconds << "s)";
    if (!detail.empty()) line << " — " << detail;
    std::cout << line.str() << "\n";
    if (!pass) ++failures;
}

struct Gather {
    long cases = 0;
    long violations = 0;
    std::string note;

    void add(const verify::CheckResult& r) {
        cases += r.cases;
        violations += r.violations;
        if (note.empty()) note = r.note;
    }
    void add(const std::vector<verify::CheckResult>& rs) {
        for (const auto& r : rs) add(r);
    }
    std::string detail() const {
        std::ostringstream out;
        out << cases << " cases, " << violations << " violations";
        if (violations > 0 && !note.empty()) out << "; first: " << note;
        return out.str();
    }
};

double lap(Clock::time_point& mark) {
    auto now = Clock::now();
    double s = std::chrono::duration<double>(now - mark).count();
    mark = now;
    return s;
}

}  // namespace

int main() {
    const std::uint64_t seed = 20240901;
    auto mark = Clock::now();

    {  // 1: classifier fixed points and the thinness bound on 200 mixed graphs
        Gather g;
        g.add(verify::check_classifier_sanity(seed, 200, 60));
        verdict(1, "classifier sanity and thinness bound", g.violations == 0, g.detail(),
                lap(mark));
    }

    {  // 2: 50 chordal <= 1, 50 distance-hereditary <= 2, 50 ptolemaic = 0
        Gather g;
        g.add(verify::check_class_containment(seed, 50));
        verdict(2, "class containments", g.violations == 0, g.detail(), lap(mark));
    }

    {  // 3: center diameter, degree-convexity of centers and disks
        Gather g;
        g.add(verify::check_center_structure(seed, 40, 120));
        verdict(3, "center structure and convexity", g.violations == 0, g.detail(), lap(mark));
    }

    {  // 4: radius/diameter approximation bounds up to n = 2000
        Gather g;
        g.add(verify::check_radius_diameter_approx(seed, 30, 2000));
        verdict(4, "radius and diameter approximation", g.violations == 0, g.detail(),
                lap(mark));
    }

    {  // 5: pair lower bounds and spanning-tree deficits
        Gather g;
        g.add(verify::check_all_ecc_approx(seed, 24));
        verdict(5, "all-eccentricity approximation", g.violations == 0, g.detail(), lap(mark));
    }

    {  // 6: unimodality package on alpha_1 samples
        Gather g;
        g.add(verify::check_unimodality(seed, 30, 120));
        verdict(6, "eccentricity unimodality", g.violations == 0, g.detail(), lap(mark));
    }

    {  // 7: central-vertex algorithms, exactness and sweep budget
        Gather g;
        g.add(verify::check_central_algorithms(seed, 100));
        verdict(7, "central-vertex algorithms", g.violations == 0, g.detail(), lap(mark));
    }

    {  // 8: gate machinery
        Gather g;
        g.add(verify::check_gate_machinery(seed, 30));
        verdict(8, "gate machinery", g.violations == 0, g.detail(), lap(mark));
    }

    {  // 9: characterization equivalence, conditional on the pattern file
        std::optional<Graph> pattern;
        try {
            pattern = gen_named("w6pp", std::string(AG_SOURCE_DIR) + "/data/w6pp.edges").graph;
        } catch (const PatternUnavailable&) {
        }
        verify::CheckResult r =
            verify::check_characterization(seed, 300, 40, pattern ? &*pattern : nullptr);
        if (r.skipped) {
            std::cout << "[SKIP] criterion 9: characterization equivalence — " << r.note
                      << "\n";
        } else {
            Gather g;
            g.add(r);
            verdict(9, "characterization equivalence", g.violations == 0, g.detail(),
                    lap(mark));
        }
        lap(mark);
    }

    {  // 10: fixed-seed CLI runs are byte-identical modulo timing
        using nlohmann::json;
        bool pass = true;
        std::string note;
        std::string dir = "/tmp/alphagraph_acceptance";
        std::string sample = dir + "_sample.edges";
        {
            std::ostringstream out, err;
            int code = cli::run({"gen", "--class", "chordal", "--n", "120", "--seed", "9",
                                 "--out", sample},
                                out, err);
            if (code != 0) {
                pass = false;
                note = "generation failed";
            }
        }
        std::vector<std::vector<std::string>> invocations = {
            {"gen", "--class", "chordal", "--n", "80", "--seed", "4", "--out", dir + "_g.edges"},
            {"profile", "--input", sample},
            {"ecc", "exact", "--input", sample},
            {"ecc", "approx", "--input", sample, "--mode", "linear"},
            {"ecc", "lower", "--input", sample},
            {"center", "alpha1", "--input", sample},
            {"center", "alpha1-delta", "--input", sample},
            {"center", "rad-plus-1", "--input", sample},
            {"tree", "mdp", "--input", sample},
            {"verify", "core-suite", "--seed", "7", "--count", "4"},
            {"bench", "--seed", "7", "--count", "2", "--nmax", "50"},
        };
        for (const auto& args : invocations) {
            if (!pass) break;
            std::ostringstream out1, out2, err1, err2;
            int c1 = cli::run(args, out1, err1);
            int c2 = cli::run(args, out2, err2);
            if (c1 != c2) {
                pass = false;
                note = "exit codes differ for " + args[0];
                break;
            }
            json a = json::parse(out1.str());
            json b = json::parse(out2.str());
            a.erase("timing_ms");
            b.erase("timing_ms");
            if (a.dump() != b.dump()) {
                pass = false;
                note = "reports differ for " + args[0];
                break;
            }
        }
        verdict(10, "deterministic reports", pass, note, lap(mark));
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
