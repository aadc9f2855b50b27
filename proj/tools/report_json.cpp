#include "report_json.hpp"

namespace ripcert::cli {

namespace {

ordered_json to_json(const graph::VertexSet& set) { return set.members(); }

ordered_json to_json(const Eigen::VectorXd& x) {
    ordered_json values = ordered_json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        values.push_back(x(i));
    }
    return values;
}

const char* to_string(rip::RicKind kind) {
    return kind == rip::RicKind::exact ? "exact" : "lower-bound";
}

const char* to_string(rip::WitnessSide side) {
    return side == rip::WitnessSide::lower ? "lower" : "upper";
}

}  // namespace

ordered_json report_envelope(const std::string& command, ordered_json params,
                             ordered_json inputs, ordered_json results, bool verdict,
                             std::optional<std::uint64_t> seed) {
    ordered_json report;
    report["command"] = command;
    report["params"] = std::move(params);
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    report["verdict"] = verdict;
    if (seed.has_value()) {
        report["seed"] = *seed;
    } else {
        report["seed"] = nullptr;
    }
    report["version"] = kVersion;
    return report;
}

ordered_json to_json(const graph::CutReport& report) {
    ordered_json j;
    j["set"] = to_json(report.set);
    j["size"] = report.set.size();
    j["boundary"] = report.boundary;
    j["expansion"] = report.expansion;
    return j;
}

ordered_json to_json(const spectral::SparseRayleighResult& result) {
    ordered_json j;
    j["lambda"] = result.value;
    j["order"] = result.order;
    j["support"] = to_json(result.support);
    j["witness"] = to_json(result.witness);
    return j;
}

ordered_json to_json(const rip::RicEstimate& estimate) {
    ordered_json j;
    j["order"] = estimate.order;
    j["value"] = estimate.value;
    j["kind"] = to_string(estimate.kind);
    j["witness_support"] = to_json(estimate.witness_support);
    j["witness_side"] = to_string(estimate.witness_side);
    j["witness_sigma_min"] = estimate.witness_sigma_min;
    j["witness_sigma_max"] = estimate.witness_sigma_max;
    return j;
}

ordered_json to_json(const rounding::SweepResult& result) {
    ordered_json j;
    j["lambda"] = result.lambda_in;
    j["bound"] = result.bound;
    j["thresholds_tried"] = result.thresholds_tried;
    j["guarantee_applies"] = result.guarantee_applies;
    j["best"] = to_json(result.best);
    return j;
}

ordered_json to_json(const pipeline::ReductionParams& params) {
    ordered_json j;
    j["eps"] = params.eps;
    j["C"] = params.C;
    j["delta"] = params.delta;
    j["beta"] = params.beta;
    j["alpha"] = params.alpha;
    j["q"] = params.q;
    j["gamma"] = params.gamma;
    j["k"] = params.k;
    j["log10_beta"] = params.log10_beta;
    j["eq2_bound"] = params.eq2_bound;
    j["gamma_over_beta"] = params.gamma_over_beta;
    j["eq2_check"] = params.eq2_check;
    return j;
}

ordered_json to_json(const pipeline::Case1Report& report) {
    ordered_json j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["s"] = report.s;
    j["c"] = report.c;
    j["params"] = to_json(report.params);
    j["planted"] = to_json(report.planted);
    j["ratio"] = report.ratio;
    j["sqrt_phi"] = report.sqrt_phi;
    j["sigma_min_planted"] = report.sigma_min_planted;
    j["bridge_identity_holds"] = report.bridge_identity_holds;
    j["ratio_below_sqrt_eps"] = report.ratio_below_sqrt_eps;
    j["violates_one_minus_delta_rip"] = report.violates_one_minus_delta_rip;
    j["violates_delta_rip"] = report.violates_delta_rip;
    j["passed"] = report.passed;
    return j;
}

ordered_json to_json(const pipeline::Case2Report& report) {
    ordered_json j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["k"] = report.k;
    j["params"] = to_json(report.params);
    j["phi_k"] = report.phi_k;
    j["phi_witness"] = to_json(report.phi_witness);
    j["lambda_k"] = report.lambda_k;
    j["lambda_support"] = to_json(report.lambda.support);
    j["delta_k"] = report.delta_k;
    j["ric"] = to_json(report.ric);
    j["premise_holds"] = report.premise_holds;
    if (report.rip_confirmed.has_value()) {
        j["rip_confirmed"] = *report.rip_confirmed;
    } else {
        j["rip_confirmed"] = nullptr;
    }
    j["chain_upper"] = report.chain_upper;
    j["chain_holds"] = report.chain_holds;
    j["contrapositive_lower"] = report.contrapositive_lower;
    j["contrapositive_holds"] = report.contrapositive_holds;
    j["passed"] = report.passed;
    return j;
}

ordered_json to_json(const pipeline::SuiteCheck& check) {
    ordered_json j;
    j["instance"] = check.instance;
    j["n"] = check.n;
    j["d"] = check.d;
    j["k"] = check.k;
    j["graph_seed"] = check.graph_seed;
    j["lambda_k"] = check.lambda_k;
    j["phi_k"] = check.phi_k;
    j["upper"] = check.upper;
    j["sweep_expansion"] = check.sweep_expansion;
    j["chain_ok"] = check.chain_ok;
    j["sweep_ok"] = check.sweep_ok;
    j["tightness_ok"] = check.tightness_ok;
    j["pass"] = check.pass;
    return j;
}

ordered_json to_json(const pipeline::SuiteSummary& summary) {
    ordered_json j;
    j["instances"] = summary.instances;
    j["checks"] = summary.checks;
    j["passes"] = summary.passes;
    j["failures"] = summary.failures;
    j["max_phi_minus_lambda"] = summary.max_phi_minus_lambda;
    j["min_upper_minus_phi"] = summary.min_upper_minus_phi;
    j["max_lambda"] = summary.max_lambda;
    ordered_json failing = ordered_json::array();
    for (const auto& check : summary.failing) {
        failing.push_back(to_json(check));
    }
    j["failing"] = std::move(failing);
    j["passed"] = summary.passed;
    return j;
}

}  // namespace ripcert::cli
