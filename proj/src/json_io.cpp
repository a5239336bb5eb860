#include "alphagraph/json_io.hpp"

namespace alphagraph {

Json to_json(const MetricProfile& profile) {
    Json j;
    j["alpha_index"] = profile.alpha_index;
    j["thinness"] = profile.thinness;
    j["disks_convex"] = profile.disks_convex;
    j["triangle_condition"] = profile.triangle_condition;
    if (profile.alpha1_by_characterization.has_value())
        j["alpha1_by_characterization"] = *profile.alpha1_by_characterization;
    else
        j["alpha1_by_characterization"] = nullptr;
    return j;
}

Json to_json(const EccReport& report) {
    Json j;
    j["ecc"] = report.ecc;
    j["radius"] = report.radius;
    j["diameter"] = report.diameter;
    j["center"] = report.center;
    j["mode"] = report.mode == EccMode::Exact ? "exact" : "approximate";
    return j;
}

Json to_json(const CenterInfo& info) {
    Json j;
    j["center"] = info.center;
    j["diam_of_center"] = info.diam_of_center;
    j["diam_of_center_induced"] = info.diam_of_center_induced;
    j["rad_of_center"] = info.rad_of_center;
    j["rad_of_center_g"] = info.rad_of_center_g;
    j["center_connected"] = info.center_connected;
    j["eps_flag"] = info.eps_flag;
    Json levels = Json::array();
    for (const auto& level : info.level_sets) levels.push_back(level);
    j["level_sets"] = std::move(levels);
    return j;
}

Json to_json(const ApproxEccReport& report) {
    Json j;
    j["pair"] = {report.x, report.y};
    j["lower"] = report.lower;
    j["mode"] = report.mode;
    j["radius_witness"] = report.radius_witness;
    j["radius_witness_ecc"] = report.radius_witness_ecc;
    j["diameter_witness"] = report.diameter_witness;
    j["diameter_lower"] = report.diameter_lower;
    return j;
}

Json to_json(const SpanningTree& tree) {
    Json j;
    j["root"] = tree.root;
    j["parent"] = tree.parent;
    j["tree_ecc"] = tree.tree_ecc;
    j["tree_center"] = tree.tree_center;
    j["tree_radius"] = tree.tree_radius;
    return j;
}

Json to_json(const SweepTrace& trace) {
    Json j;
    j["seed"] = trace.seed;
    j["sequence"] = trace.sequence;
    j["distances"] = trace.distances;
    j["final_pair"] = {trace.pair_a, trace.pair_b};
    j["pair_distance"] = trace.pair_distance;
    return j;
}

Json to_json(const GenSpec& spec) {
    Json j;
    j["class"] = spec.cls;
    j["n"] = spec.n;
    j["seed"] = spec.seed;
    if (spec.cls == "chordal") j["max_attach"] = spec.max_attach;
    if (spec.cls == "distance_hereditary" || spec.cls == "ptolemaic")
        j["op_mix"] = spec.op_mix;
    if (spec.cls == "gnp_connected") j["edge_prob"] = spec.edge_prob;
    if (spec.cls == "grid") {
        j["rows"] = spec.rows;
        j["cols"] = spec.cols;
    }
    if (spec.cls == "named") j["name"] = spec.name;
    return j;
}

Json to_json(const CenterSearchTrace& trace) {
    Json j;
    j["start"] = trace.start;
    Json iters = Json::array();
    for (const auto& it : trace.iterations) {
        Json e;
        e["x"] = it.x;
        e["ecc_x"] = it.ecc_x;
        e["z"] = it.z;
        e["candidate_count"] = it.candidate_count;
        e["probes"] = it.probes;
        iters.push_back(std::move(e));
    }
    j["iterations"] = std::move(iters);
    j["low_degree_exit"] = trace.low_degree_exit;
    j["result"] = trace.result;
    return j;
}

Json to_json(const DeltaSearchTrace& trace) {
    Json j;
    j["local_min"] = trace.local_min;
    j["y1"] = trace.y1;
    j["y2"] = trace.y2;
    j["z1"] = trace.z1;
    j["b1_size"] = trace.b1_size;
    j["b2_size"] = trace.b2_size;
    j["pair"] = {trace.pair_u, trace.pair_v};
    j["slice_size"] = trace.slice_size;
    j["universal"] = trace.universal;
    j["result"] = trace.result;
    return j;
}

}  // namespace alphagraph
