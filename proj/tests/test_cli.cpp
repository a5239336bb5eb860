#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "alphagraph/cli.hpp"

namespace {

using nlohmann::json;

struct RunOutput {
    int code;
    std::string out;
    std::string err;
    json body;
};

RunOutput run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = alphagraph::cli::run(args, out, err);
    RunOutput res{code, out.str(), err.str(), {}};
    if (!res.out.empty() && res.out.front() == '{') res.body = json::parse(res.out);
    return res;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/alphagraph_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

json strip_timing(json j) {
    j.erase("timing_ms");
    return j;
}

}  // namespace

TEST_CASE("ecc exact reports radius and diameter of the path") {
    TempFile p5("p5.edges", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    RunOutput res = run_cli({"ecc", "exact", "--input", p5.path});
    REQUIRE(res.code == 0);
    CHECK(res.body["result"]["radius"] == 2);
    CHECK(res.body["result"]["diameter"] == 4);
    CHECK(res.body["result"]["center"] == json::array({2}));
    CHECK(res.body["schema"] == 1);
}

TEST_CASE("bad flags exit with 64") {
    RunOutput res = run_cli({"ecc", "exact", "--no-such-flag"});
    CHECK(res.code == 64);
    CHECK(res.body["error"]["kind"] == "usage");
}

TEST_CASE("unreadable input exits with 66") {
    RunOutput res = run_cli({"ecc", "exact", "--input", "/nonexistent/file.edges"});
    CHECK(res.code == 66);

    TempFile bad("bad.edges", "3 9\n0 1\n");
    res = run_cli({"ecc", "exact", "--input", bad.path});
    CHECK(res.code == 66);
    CHECK(res.body["error"]["kind"] == "bad-input");
}

TEST_CASE("the pentagon fails the triangle condition gate with exit 3") {
    TempFile c5("c5.edges", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    RunOutput res = run_cli({"center", "alpha1-delta", "--input", c5.path});
    CHECK(res.code == 3);
    CHECK(res.body["error"]["kind"] == "classification-violation");

    // Asserting the index skips the classifier and lets the search run.
    res = run_cli({"center", "alpha1-delta", "--input", c5.path, "--assert-alpha", "1"});
    CHECK(res.code == 0);
    CHECK(res.body["result"]["ecc"] == 2);
}

TEST_CASE("center alpha1 returns the path center") {
    TempFile p5("p5b.edges", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    RunOutput res = run_cli({"center", "alpha1", "--input", p5.path, "--trace"});
    REQUIRE(res.code == 0);
    CHECK(res.body["result"]["vertex"] == 2);
    CHECK(res.body["result"]["ecc"] == 2);
    CHECK(res.body["result"].contains("trace"));
    CHECK(res.body["guarantees"][0]["id"] == "central-alpha1");
}

TEST_CASE("profile of the pentagon") {
    TempFile c5("c5b.edges", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    RunOutput res = run_cli({"profile", "--input", c5.path});
    REQUIRE(res.code == 0);
    CHECK(res.body["result"]["alpha_index"] == 1);
    CHECK(res.body["result"]["disks_convex"] == true);
    CHECK(res.body["result"]["triangle_condition"] == false);
    CHECK(res.body["result"]["alpha1_by_characterization"].is_null());
    CHECK(res.body["pattern_available"] == false);
}

TEST_CASE("generation writes the graph and its sidecar deterministically") {
    std::string out1 = "/tmp/alphagraph_gen_a.edges";
    std::string out2 = "/tmp/alphagraph_gen_b.edges";
    RunOutput a = run_cli({"gen", "--class", "chordal", "--n", "40", "--seed", "11", "--out",
                           out1});
    RunOutput b = run_cli({"gen", "--class", "chordal", "--n", "40", "--seed", "11", "--out",
                           out2});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    std::ifstream f1(out1), f2(out2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(a.body["result"]["hash"] == b.body["result"]["hash"]);
    CHECK(a.body["result"].contains("elimination_order"));
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove((out1 + ".json").c_str());
    std::remove((out2 + ".json").c_str());
}

TEST_CASE("repeated runs are byte-identical after dropping the timing fields") {
    TempFile p5("p5c.edges", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    for (auto args : {std::vector<std::string>{"ecc", "exact", "--input", "@"},
                      std::vector<std::string>{"ecc", "approx", "--input", "@", "--mode", "mdp"},
                      std::vector<std::string>{"ecc", "lower", "--input", "@"},
                      std::vector<std::string>{"center", "alpha1", "--input", "@"},
                      std::vector<std::string>{"tree", "mdp", "--input", "@"}}) {
        for (auto& a : args)
            if (a == "@") a = p5.path;
        RunOutput first = run_cli(args);
        RunOutput second = run_cli(args);
        REQUIRE(first.code == 0);
        CHECK(strip_timing(first.body).dump() == strip_timing(second.body).dump());
    }
}

TEST_CASE("ecc lower carries the sweep and its guarantee") {
    TempFile p5("p5d.edges", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    RunOutput res = run_cli({"ecc", "lower", "--input", p5.path});
    REQUIRE(res.code == 0);
    CHECK(res.body["result"]["lower"] == json::array({4, 3, 2, 3, 4}));
    CHECK(res.body["guarantees"][0]["i"] == 0);  // a path measures alpha 0
    CHECK(res.body["guarantees"][0]["i_source"] == "measured");
}

TEST_CASE("tree subcommand exports an edge list on request") {
    TempFile p5("p5e.edges", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    std::string tout = "/tmp/alphagraph_tree_out.edges";
    RunOutput res = run_cli({"tree", "sweep", "--input", p5.path, "--tree-out", tout});
    REQUIRE(res.code == 0);
    std::ifstream f(tout);
    REQUIRE(f.good());
    std::stringstream s;
    s << f.rdbuf();
    CHECK(s.str().rfind("5 4", 0) == 0);
    std::remove(tout.c_str());
}

TEST_CASE("verify core suite passes on a small corpus") {
    RunOutput res = run_cli({"verify", "core-suite", "--seed", "5", "--count", "6"});
    CHECK(res.code == 0);
    CHECK(res.body["result"]["violations"] == 0);
}

TEST_CASE("bench emits csv with the expected columns") {
    std::ostringstream out, err;
    int code = alphagraph::cli::run(
        {"bench", "--seed", "3", "--count", "2", "--nmax", "60", "--csv"}, out, err);
    CHECK(code == 0);
    std::string text = out.str();
    CHECK(text.rfind("graph_id,n,m,alpha,rad,diam,e_c_approx,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);  // header + 2 rows
}
