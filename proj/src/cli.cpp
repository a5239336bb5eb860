#include "alphagraph/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "alphagraph/json_io.hpp"
#include "alphagraph/reference.hpp"
#include "alphagraph/verify.hpp"

namespace alphagraph::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string hex64(std::uint64_t value) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << value;
    return out.str();
}

struct Report {
    Json body;
    Json timing = Json::object();

    explicit Report(const std::vector<std::string>& args) {
        body["schema"] = 1;
        std::string echo;
        for (const auto& a : args) {
            if (!echo.empty()) echo += ' ';
            echo += a;
        }
        body["command"] = echo;
        body["input_hash"] = nullptr;
    }

    void finish(std::ostream& out) {
        body["bfs_invocations"] = bfs_invocations();
        body["timing_ms"] = timing;
        out << body.dump(2) << "\n";
    }
};

Graph load_input(const std::string& path, Report& report, Json& timing) {
    auto start = Clock::now();
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open input file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    report.body["input_hash"] = hex64(fnv1a64(buf.str()));
    Graph g = Graph::parse(buf.str());
    timing["load"] = ms_since(start);
    return g;
}

std::optional<Graph> try_load_pattern(const std::string& path) {
    try {
        return gen_named("w6pp", path).graph;
    } catch (const PatternUnavailable&) {
        return std::nullopt;
    }
}

Json guarantee(const std::string& id, const std::string& bound, Dist i, bool asserted) {
    Json j;
    j["id"] = id;
    j["bound"] = bound;
    j["i"] = i;
    j["i_source"] = asserted ? "asserted" : "measured";
    return j;
}

// Classification policy for the guaranteed algorithms: an asserted index
// skips the classifier; otherwise the graph is profiled and a violated
// precondition aborts with exit 3.
struct ClassCheck {
    Dist i = 1;
    bool asserted = false;
    std::optional<MetricProfile> profile;
};

ClassCheck require_class(const Graph& g, std::optional<Dist> asserted_alpha, bool need_triangle,
                         Report& report) {
    ClassCheck res;
    if (asserted_alpha.has_value()) {
        res.i = *asserted_alpha;
        res.asserted = true;
        return res;
    }
    auto start = Clock::now();
    MetricProfile profile = classify(g);
    report.timing["classify"] = ms_since(start);
    report.body["profile"] = to_json(profile);
    res.profile = profile;
    res.i = profile.alpha_index;
    if (profile.alpha_index > 1)
        throw ClassificationViolation("graph measured alpha index " +
                                      std::to_string(profile.alpha_index) +
                                      ", but the requested algorithm assumes at most 1");
    if (need_triangle && !profile.triangle_condition)
        throw ClassificationViolation(
            "graph fails the triangle condition required by the requested algorithm");
    return res;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph metrics toolkit: eccentricity approximation, center search, "
                 "metric classification"};
    app.require_subcommand(1);

    std::string input_path, w6pp_path = "data/w6pp.edges", out_path, tree_out, suite_name,
                gen_class = "chordal", gen_name, mode = "mdp", bench_class = "chordal";
    std::uint64_t seed = 1;
    int count = 20;
    Vertex gen_n = 50, rows = 4, cols = 5, nmax = 400;
    int max_attach = 3;
    std::vector<int> mix{1, 1, 1};
    double edge_prob = 0.1;
    std::optional<Dist> alpha_flag;
    bool want_trace = false, csv = false;

    auto add_alpha = [&alpha_flag](CLI::App* cmd) {
        auto opt = cmd->add_option("--alpha", alpha_flag,
                                   "assert the graph's alpha index instead of classifying");
        cmd->add_option("--assert-alpha", alpha_flag, "alias for --alpha")->excludes(opt);
    };

    CLI::App* profile_cmd = app.add_subcommand("profile", "measure the metric profile");
    profile_cmd->add_option("--input", input_path, "edge-list file")->required();
    profile_cmd->add_option("--w6pp", w6pp_path, "forbidden-pattern edge list");

    CLI::App* ecc_cmd = app.add_subcommand("ecc", "eccentricity computations");
    ecc_cmd->require_subcommand(1);
    CLI::App* ecc_exact = ecc_cmd->add_subcommand("exact", "oracle eccentricities");
    CLI::App* ecc_approx = ecc_cmd->add_subcommand("approx", "tree-based upper estimates");
    CLI::App* ecc_lower = ecc_cmd->add_subcommand("lower", "pair-based lower estimates");
    for (CLI::App* sub : {ecc_exact, ecc_approx, ecc_lower})
        sub->add_option("--input", input_path, "edge-list file")->required();
    ecc_approx->add_option("--mode", mode, "mdp or linear")
        ->check(CLI::IsMember({"mdp", "linear"}));
    add_alpha(ecc_approx);
    add_alpha(ecc_lower);

    CLI::App* center_cmd = app.add_subcommand("center", "central vertex search");
    center_cmd->require_subcommand(1);
    CLI::App* center_a1 = center_cmd->add_subcommand("alpha1", "exact center, alpha_1 inputs");
    CLI::App* center_a1d =
        center_cmd->add_subcommand("alpha1-delta", "exact center, triangle-condition inputs");
    CLI::App* center_rp1 = center_cmd->add_subcommand("rad-plus-1", "radius+1 vertex");
    CLI::App* center_oracle = center_cmd->add_subcommand("oracle", "brute-force center");
    for (CLI::App* sub : {center_a1, center_a1d, center_rp1, center_oracle}) {
        sub->add_option("--input", input_path, "edge-list file")->required();
        sub->add_flag("--trace", want_trace, "embed the search trace");
        if (sub != center_oracle) add_alpha(sub);
    }

    CLI::App* tree_cmd = app.add_subcommand("tree", "eccentricity-approximating spanning trees");
    tree_cmd->require_subcommand(1);
    CLI::App* tree_mdp = tree_cmd->add_subcommand("mdp", "root at a mutually-distant middle");
    CLI::App* tree_sweep = tree_cmd->add_subcommand("sweep", "root at a double-sweep middle");
    CLI::App* tree_a1 = tree_cmd->add_subcommand("alpha1", "root at a computed central vertex");
    for (CLI::App* sub : {tree_mdp, tree_sweep, tree_a1}) {
        sub->add_option("--input", input_path, "edge-list file")->required();
        sub->add_option("--tree-out", tree_out, "write the tree as an edge list");
        add_alpha(sub);
    }

    CLI::App* gen_cmd = app.add_subcommand("gen", "seeded graph generators");
    gen_cmd->add_option("--class", gen_class,
                        "chordal|distance_hereditary|ptolemaic|cycle|path|grid|gnp_connected|named")
        ->required();
    gen_cmd->add_option("--n", gen_n, "vertex count");
    gen_cmd->add_option("--seed", seed, "generator seed");
    gen_cmd->add_option("--max-attach", max_attach, "chordal clique attach cap");
    gen_cmd->add_option("--mix", mix, "pendant/true-twin/false-twin weights")->expected(3);
    gen_cmd->add_option("--p", edge_prob, "edge probability");
    gen_cmd->add_option("--rows", rows, "grid rows");
    gen_cmd->add_option("--cols", cols, "grid cols");
    gen_cmd->add_option("--name", gen_name, "named graph (c4,c5,c6,p5,k4,diamond,w6pp)");
    gen_cmd->add_option("--out", out_path, "output edge-list path")->required();
    gen_cmd->add_option("--w6pp", w6pp_path, "pattern source for --name w6pp");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("suite", suite_name, "core-suite|alpha1-suite|alphai-suite|all")
        ->required();
    verify_cmd->add_option("--seed", seed, "corpus seed");
    verify_cmd->add_option("--count", count, "graphs per corpus");
    verify_cmd->add_option("--w6pp", w6pp_path, "forbidden-pattern edge list");

    CLI::App* bench_cmd = app.add_subcommand("bench", "timing and deficit table");
    bench_cmd->add_option("--seed", seed, "corpus seed");
    bench_cmd->add_option("--count", count, "graph count");
    bench_cmd->add_option("--class", bench_class, "corpus class");
    bench_cmd->add_option("--nmax", nmax, "largest graph size");
    bench_cmd->add_flag("--csv", csv, "emit CSV rows instead of JSON");

    {
        // CLI11's vector overload consumes arguments from the back.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return 0;
        }
    }

    Report report(args);
    reset_bfs_invocations();
    auto run_start = Clock::now();

    if (*profile_cmd) {
        Graph g = load_input(input_path, report, report.timing);
        auto pattern = try_load_pattern(w6pp_path);
        MetricProfile profile = classify(g, pattern ? &*pattern : nullptr);
        report.body["profile"] = to_json(profile);
        report.body["pattern_available"] = pattern.has_value();
        report.body["result"] = to_json(profile);
        report.timing["run"] = ms_since(run_start);
        report.finish(out);
        return 0;
    }

    if (*ecc_cmd) {
        Graph g = load_input(input_path, report, report.timing);
        if (*ecc_exact) {
            EccReport ecc = exact_eccentricities(g);
            CenterInfo info = center_info(g);
            Json result = to_json(ecc);
            Json extra = to_json(info);
            result["diam_of_center"] = extra["diam_of_center"];
            result["rad_of_center"] = extra["rad_of_center"];
            result["eps_flag"] = extra["eps_flag"];
            result["center_info"] = std::move(extra);
            report.body["result"] = std::move(result);
        } else if (*ecc_approx) {
            ClassCheck cls;
            if (alpha_flag.has_value()) {
                cls.i = *alpha_flag;
                cls.asserted = true;
            } else if (g.num_vertices() <= 300) {
                MetricProfile profile = classify(g);
                report.body["profile"] = to_json(profile);
                cls.i = profile.alpha_index;
            } else {
                cls.i = -1;  // unknown; estimates still valid as upper bounds
            }
            TreeStrategy strategy =
                mode == "mdp" ? TreeStrategy::MdpMiddle : TreeStrategy::SweepMiddle;
            SpanningTree tree = build_ecc_tree(g, strategy);
            Json result;
            result["mode"] = mode;
            result["estimate"] = tree.tree_ecc;
            result["tree"] = to_json(tree);
            Json guarantees = Json::array();
            if (cls.i >= 0) {
                if (mode == "mdp")
                    guarantees.push_back(guarantee("tree-upper-mdp-root",
                                                   "e(v) <= estimate(v) <= e(v) + 4i+3", cls.i,
                                                   cls.asserted));
                else
                    guarantees.push_back(guarantee("tree-upper-sweep-root",
                                                   "e(v) <= estimate(v) <= e(v) + 7i+5", cls.i,
                                                   cls.asserted));
            }
            report.body["guarantees"] = std::move(guarantees);
            report.body["result"] = std::move(result);
        } else {
            ClassCheck cls;
            if (alpha_flag.has_value()) {
                cls.i = *alpha_flag;
                cls.asserted = true;
            } else if (g.num_vertices() <= 300) {
                MetricProfile profile = classify(g);
                report.body["profile"] = to_json(profile);
                cls.i = profile.alpha_index;
            } else {
                cls.i = -1;
            }
            SweepTrace trace = mutually_distant_pair(g, 0);
            ApproxEccReport lower = ecc_lower_bounds(g, trace.pair_a, trace.pair_b);
            Json result = to_json(lower);
            result["sweep"] = to_json(trace);
            Json guarantees = Json::array();
            if (cls.i >= 0)
                guarantees.push_back(guarantee("pair-lower-bounds",
                                               "e(v) - (3i+2) <= lower(v) <= e(v)", cls.i,
                                               cls.asserted));
            report.body["guarantees"] = std::move(guarantees);
            report.body["result"] = std::move(result);
        }
        report.timing["run"] = ms_since(run_start);
        report.finish(out);
        return 0;
    }

    if (*center_cmd) {
        Graph g = load_input(input_path, report, report.timing);
        Json result;
        Json guarantees = Json::array();
        if (*center_oracle) {
            EccReport ecc = exact_eccentricities(g);
            result["vertex"] = ecc.center.front();
            result["ecc"] = ecc.radius;
            result["center"] = ecc.center;
        } else if (*center_rp1) {
            ClassCheck cls = require_class(g, alpha_flag, false, report);
            Vertex x = find_rad_plus_1(g);
            result["vertex"] = x;
            result["ecc"] = bfs(g, x).eccentricity();
            guarantees.push_back(
                guarantee("rad-plus-one", "ecc(vertex) <= radius + 1", cls.i, cls.asserted));
        } else if (*center_a1) {
            ClassCheck cls = require_class(g, alpha_flag, false, report);
            CenterSearchTrace trace;
            Vertex c = find_central_alpha1(g, want_trace ? &trace : nullptr);
            result["vertex"] = c;
            result["ecc"] = bfs(g, c).eccentricity();
            if (want_trace) result["trace"] = to_json(trace);
            guarantees.push_back(
                guarantee("central-alpha1", "ecc(vertex) = radius", cls.i, cls.asserted));
        } else {
            ClassCheck cls = require_class(g, alpha_flag, true, report);
            DeltaSearchTrace trace;
            Vertex c = find_central_alpha1_delta(g, want_trace ? &trace : nullptr);
            result["vertex"] = c;
            result["ecc"] = bfs(g, c).eccentricity();
            if (want_trace) result["trace"] = to_json(trace);
            guarantees.push_back(
                guarantee("central-alpha1-delta", "ecc(vertex) = radius", cls.i, cls.asserted));
        }
        if (alpha_flag.has_value())
            report.body["caveat"] = "guarantee requires the asserted alpha index to be correct";
        report.body["guarantees"] = std::move(guarantees);
        report.body["result"] = std::move(result);
        report.timing["run"] = ms_since(run_start);
        report.finish(out);
        return 0;
    }

    if (*tree_cmd) {
        Graph g = load_input(input_path, report, report.timing);
        SpanningTree tree;
        Json guarantees = Json::array();
        if (*tree_mdp) {
            tree = build_ecc_tree(g, TreeStrategy::MdpMiddle);
        } else if (*tree_sweep) {
            tree = build_ecc_tree(g, TreeStrategy::SweepMiddle);
        } else {
            ClassCheck cls = require_class(g, alpha_flag, false, report);
            Vertex root = find_central_alpha1(g);
            tree = build_ecc_tree(g, TreeStrategy::GivenRoot, root);
            guarantees.push_back(guarantee("tree-upper-central-root",
                                           "tree_ecc(v) <= e(v) + 4 on alpha_1 inputs", cls.i,
                                           cls.asserted));
        }
        Json result = to_json(tree);
        if (!tree_out.empty()) {
            std::ofstream tout(tree_out);
            if (!tout) throw std::ios_base::failure("cannot write " + tree_out);
            tout << tree.to_edge_list_text();
            result["tree_out"] = tree_out;
        }
        report.body["guarantees"] = std::move(guarantees);
        report.body["result"] = std::move(result);
        report.timing["run"] = ms_since(run_start);
        report.finish(out);
        return 0;
    }

    if (*gen_cmd) {
        GenSpec spec;
        spec.cls = gen_class;
        spec.n = gen_n;
        spec.seed = seed;
        spec.max_attach = max_attach;
        spec.op_mix = {mix[0], mix[1], mix[2]};
        spec.edge_prob = edge_prob;
        spec.rows = rows;
        spec.cols = cols;
        spec.name = gen_name;
        GenResult res = gen_class == "named" ? gen_named(gen_name, w6pp_path) : generate(spec);
        std::string text = res.graph.to_edge_list_text();
        std::ofstream gout(out_path);
        if (!gout) throw std::ios_base::failure("cannot write " + out_path);
        gout << text;
        Json sidecar;
        sidecar["spec"] = to_json(res.spec);
        sidecar["n"] = res.graph.num_vertices();
        sidecar["m"] = res.graph.num_edges();
        sidecar["hash"] = hex64(fnv1a64(text));
        if (!res.elimination_order.empty())
            sidecar["elimination_order"] = res.elimination_order;
        std::ofstream sout(out_path + ".json");
        sout << sidecar.dump(2) << "\n";
        Json result = sidecar;
        result["path"] = out_path;
        result["sidecar"] = out_path + ".json";
        report.body["result"] = std::move(result);
        report.timing["run"] = ms_since(run_start);
        report.finish(out);
        return 0;
    }

    if (*verify_cmd) {
        auto pattern = try_load_pattern(w6pp_path);
        verify::SuiteResult suite =
            verify::run_suite(suite_name, seed, count, pattern ? &*pattern : nullptr);
        Json checks = Json::array();
        for (const auto& c : suite.checks) {
            Json entry;
            entry["name"] = c.name;
            entry["cases"] = c.cases;
            entry["violations"] = c.violations;
            entry["skipped"] = c.skipped;
            entry["note"] = c.note;
            checks.push_back(std::move(entry));
            err << (c.violations == 0 ? "ok   " : "FAIL ") << c.name << " (" << c.cases
                << " cases, " << c.violations << " violations)"
                << (c.note.empty() ? "" : " — " + c.note) << "\n";
        }
        Json result;
        result["suite"] = suite.suite;
        result["checks"] = std::move(checks);
        result["violations"] = suite.violations();
        report.body["result"] = std::move(result);
        report.timing["run"] = ms_since(run_start);
        report.finish(out);
        return suite.ok() ? 0 : 2;
    }

    // bench: per-graph deficit columns plus serial/parallel oracle timings.
    Json rows_json = Json::array();
    std::string csv_text =
        "graph_id,n,m,alpha,rad,diam,e_c_approx,deficit_c,dlower,dlower_gap,ehat_max_deficit,"
        "tree_mdp_max_deficit,tree_sweep_max_deficit,oracle_serial_ms,oracle_omp_ms\n";
    for (int k = 0; k < count; ++k) {
        Rng r(Rng::split(seed, k));
        Vertex n = 10 + static_cast<Vertex>(r.below(std::max<Vertex>(1, nmax - 9)));
        GenResult sample;
        Dist alpha = -1;
        if (bench_class == "chordal") {
            sample = gen_chordal(n, r.next(), 3);
            alpha = 1;
        } else if (bench_class == "distance_hereditary") {
            sample = gen_distance_hereditary(n, r.next(), {1, 1, 1});
            alpha = 2;
        } else if (bench_class == "ptolemaic") {
            sample = gen_ptolemaic(n, r.next());
            alpha = 0;
        } else {
            sample = gen_gnp_connected(n, r.next(), 0.1);
        }
        const Graph& g = sample.graph;
        if (g.num_vertices() <= 250) alpha = alpha_index(g);

        auto t0 = Clock::now();
        auto serial = ref::eccentricities(g);
        double serial_ms = ms_since(t0);
        t0 = Clock::now();
        EccReport ecc = exact_eccentricities(g);
        double omp_ms = ms_since(t0);

        ApproxRadiusResult ar = approx_radius(g, ApproxMode::Mdp);
        ApproxDiameterResult ad = approx_diameter(g, ApproxMode::Mdp);
        SweepTrace trace = mutually_distant_pair(g, 0);
        ApproxEccReport hat = ecc_lower_bounds(g, trace.pair_a, trace.pair_b);
        SpanningTree t_mdp = build_ecc_tree(g, TreeStrategy::MdpMiddle);
        SpanningTree t_sweep = build_ecc_tree(g, TreeStrategy::SweepMiddle);
        Dist hat_deficit = 0, mdp_deficit = 0, sweep_deficit = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            hat_deficit = std::max(hat_deficit, ecc.ecc[v] - hat.lower[v]);
            mdp_deficit = std::max(mdp_deficit, t_mdp.tree_ecc[v] - ecc.ecc[v]);
            sweep_deficit = std::max(sweep_deficit, t_sweep.tree_ecc[v] - ecc.ecc[v]);
        }
        (void)serial;

        Json row;
        row["graph_id"] = bench_class + "-" + std::to_string(k);
        row["n"] = g.num_vertices();
        row["m"] = g.num_edges();
        row["alpha"] = alpha;
        row["rad"] = ecc.radius;
        row["diam"] = ecc.diameter;
        row["e_c_approx"] = ar.ecc_c;
        row["deficit_c"] = ar.ecc_c - ecc.radius;
        row["dlower"] = ad.lower;
        row["dlower_gap"] = ecc.diameter - ad.lower;
        row["ehat_max_deficit"] = hat_deficit;
        row["tree_mdp_max_deficit"] = mdp_deficit;
        row["tree_sweep_max_deficit"] = sweep_deficit;
        row["oracle_serial_ms"] = serial_ms;
        row["oracle_omp_ms"] = omp_ms;
        rows_json.push_back(row);
        csv_text += row["graph_id"].get<std::string>() + "," + std::to_string(g.num_vertices()) +
                    "," + std::to_string(g.num_edges()) + "," + std::to_string(alpha) + "," +
                    std::to_string(ecc.radius) + "," + std::to_string(ecc.diameter) + "," +
                    std::to_string(ar.ecc_c) + "," + std::to_string(ar.ecc_c - ecc.radius) + "," +
                    std::to_string(ad.lower) + "," + std::to_string(ecc.diameter - ad.lower) +
                    "," + std::to_string(hat_deficit) + "," + std::to_string(mdp_deficit) + "," +
                    std::to_string(sweep_deficit) + "," + std::to_string(serial_ms) + "," +
                    std::to_string(omp_ms) + "\n";
    }
    if (csv) {
        out << csv_text;
        return 0;
    }
    report.body["result"] = Json{{"rows", rows_json}};
    report.timing["run"] = ms_since(run_start);
    report.finish(out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const CLI::ParseError& e) {
        Json j;
        j["schema"] = 1;
        j["error"] = {{"kind", "usage"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << e.what() << "\n";
        return 64;
    } catch (const ClassificationViolation& e) {
        Json j;
        j["schema"] = 1;
        j["error"] = {{"kind", "classification-violation"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << e.what() << "\n";
        return 3;
    } catch (const PatternUnavailable& e) {
        Json j;
        j["schema"] = 1;
        j["error"] = {{"kind", "pattern-unavailable"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << e.what() << "\n";
        return 66;
    } catch (const GraphFormatError& e) {
        Json j;
        j["schema"] = 1;
        j["error"] = {{"kind", "bad-input"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << e.what() << "\n";
        return 66;
    } catch (const DisconnectedGraphError& e) {
        Json j;
        j["schema"] = 1;
        j["error"] = {{"kind", "bad-input"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << e.what() << "\n";
        return 66;
    } catch (const std::ios_base::failure& e) {
        Json j;
        j["schema"] = 1;
        j["error"] = {{"kind", "io"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << e.what() << "\n";
        return 66;
    } catch (const std::exception& e) {
        Json j;
        j["schema"] = 1;
        j["error"] = {{"kind", "internal"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << e.what() << "\n";
        return 70;
    }
}

}  // namespace alphagraph::cli
