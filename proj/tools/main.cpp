#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ripcert/errors.hpp"
#include "ripcert/graph.hpp"
#include "ripcert/pipeline.hpp"
#include "ripcert/rip.hpp"
#include "ripcert/rounding.hpp"
#include "ripcert/spectral.hpp"
#include "report_json.hpp"

namespace {

using namespace ripcert;
using cli::ordered_json;

// Exit codes: 0 pass/true, 1 fail/violation, 2 usage error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Eigen::VectorXd read_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open vector file " + path);
    }
    std::vector<double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        bool blank = true;
        for (char ch : line) {
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                blank = ch == '#';
                break;
            }
        }
        if (blank) {
            continue;
        }
        try {
            std::size_t used = 0;
            const double value = std::stod(line, &used);
            while (used < line.size() && std::isspace(static_cast<unsigned char>(line[used]))) {
                ++used;
            }
            if (used != line.size()) {
                throw ParseError("expected one decimal per line", line_no);
            }
            values.push_back(value);
        } catch (const std::invalid_argument&) {
            throw ParseError("expected one decimal per line", line_no);
        } catch (const std::out_of_range&) {
            throw ParseError("value out of range", line_no);
        }
    }
    Eigen::VectorXd x(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        x(static_cast<Eigen::Index>(i)) = values[i];
    }
    return x;
}

ordered_json graph_inputs(const std::string& path, const graph::RegularGraph& g) {
    ordered_json inputs;
    inputs["graph"] = path;
    inputs["n"] = g.vertex_count();
    inputs["d"] = g.degree();
    inputs["m"] = g.edge_count();
    return inputs;
}

void emit(const ordered_json& report, const std::string& json_path = {}) {
    const std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            throw ParseError("cannot open report file " + json_path + " for writing");
        }
        out << text << "\n";
    }
}

struct GenOptions {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::optional<int> planted_s;
    std::optional<int> planted_c;
};

int run_gen(const GenOptions& opt) {
    ordered_json params{{"n", opt.n}, {"d", opt.d}, {"seed", opt.seed}, {"out", opt.out}};
    ordered_json results;
    if (opt.planted_s.has_value() != opt.planted_c.has_value()) {
        throw ParameterError("gen: --planted-s and --planted-c must be given together");
    }
    if (opt.planted_s.has_value()) {
        params["planted_s"] = *opt.planted_s;
        params["planted_c"] = *opt.planted_c;
        const auto inst =
            graph::gen_planted_cut(opt.n, opt.d, *opt.planted_s, *opt.planted_c, opt.seed);
        graph::write_graph(inst.graph, std::filesystem::path(opt.out));
        results["n"] = inst.graph.vertex_count();
        results["d"] = inst.graph.degree();
        results["m"] = inst.graph.edge_count();
        results["out"] = opt.out;
        results["planted"] = cli::to_json(graph::expansion(inst.graph, inst.planted));
    } else {
        params["planted_s"] = nullptr;
        params["planted_c"] = nullptr;
        const auto g = graph::gen_random_regular(opt.n, opt.d, opt.seed);
        graph::write_graph(g, std::filesystem::path(opt.out));
        results["n"] = g.vertex_count();
        results["d"] = g.degree();
        results["m"] = g.edge_count();
        results["out"] = opt.out;
    }
    emit(cli::report_envelope("gen", params, ordered_json::object(), results, true, opt.seed));
    return kExitPass;
}

int run_expansion(const std::string& graph_path, const std::vector<int>& set_ids) {
    const auto g = graph::read_graph(std::filesystem::path(graph_path));
    const auto report = graph::expansion(g, graph::VertexSet::from_list(set_ids));
    ordered_json params{{"graph", graph_path}, {"set", set_ids}};
    emit(cli::report_envelope("expansion", params, graph_inputs(graph_path, g),
                              cli::to_json(report), true, std::nullopt));
    return kExitPass;
}

int run_phi(const std::string& graph_path, int k) {
    const auto g = graph::read_graph(std::filesystem::path(graph_path));
    const auto report = graph::min_expansion_small_sets(g, k);
    ordered_json params{{"graph", graph_path}, {"k", k}};
    ordered_json results;
    results["phi_k"] = report.expansion;
    results["witness"] = cli::to_json(report);
    emit(cli::report_envelope("phi", params, graph_inputs(graph_path, g), results, true,
                              std::nullopt));
    return kExitPass;
}

int run_sparse_lambda(const std::string& graph_path, int k) {
    const auto g = graph::read_graph(std::filesystem::path(graph_path));
    const auto result = spectral::sparse_lambda_exact(spectral::laplacian(g), k);
    ordered_json params{{"graph", graph_path}, {"k", k}};
    emit(cli::report_envelope("sparse-lambda", params, graph_inputs(graph_path, g),
                              cli::to_json(result), true, std::nullopt));
    return kExitPass;
}

int run_sweep(const std::string& graph_path, const std::string& vec_path) {
    const auto g = graph::read_graph(std::filesystem::path(graph_path));
    const auto x = read_vector(vec_path);
    const auto result = rounding::sweep_cut(g, x);
    ordered_json params{{"graph", graph_path}, {"vec", vec_path}};
    auto inputs = graph_inputs(graph_path, g);
    inputs["vec"] = vec_path;
    auto results = cli::to_json(result);
    const bool satisfied = result.best.expansion <= result.bound + pipeline::kChainTol;
    results["guarantee_satisfied"] = satisfied;
    const bool verdict = satisfied || !result.guarantee_applies;
    emit(cli::report_envelope("sweep", params, inputs, results, verdict, std::nullopt));
    return verdict ? kExitPass : kExitFail;
}

int run_reduce(const std::string& graph_path, const std::string& out_path) {
    const auto g = graph::read_graph(std::filesystem::path(graph_path));
    const auto l = spectral::laplacian(g);
    const auto m = pipeline::reduce(g);
    rip::write_matrix(m, std::filesystem::path(out_path));
    const double residual =
        (m.matrix().transpose() * m.matrix() - l.matrix()).cwiseAbs().maxCoeff();
    ordered_json params{{"graph", graph_path}, {"out", out_path}};
    ordered_json results;
    results["rows"] = m.rows();
    results["cols"] = m.cols();
    results["residual_max"] = residual;
    results["out"] = out_path;
    const bool verdict = residual <= 1e-10;
    emit(cli::report_envelope("reduce", params, graph_inputs(graph_path, g), results, verdict,
                              std::nullopt));
    return verdict ? kExitPass : kExitFail;
}

struct RipOptions {
    std::string matrix_path;
    int k = 0;
    std::optional<double> delta;
    bool exact = false;
    bool mc = false;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
};

int run_rip(const RipOptions& opt) {
    const auto m = rip::read_matrix(std::filesystem::path(opt.matrix_path));
    if (opt.exact && opt.mc) {
        throw ParameterError("rip: choose one of --exact or --mc");
    }
    const bool monte_carlo = opt.mc;

    ordered_json params;
    params["matrix"] = opt.matrix_path;
    params["k"] = opt.k;
    params["delta"] = opt.delta.has_value() ? ordered_json(*opt.delta) : ordered_json(nullptr);
    params["mode"] = monte_carlo ? "mc" : "exact";
    if (monte_carlo) {
        params["trials"] = opt.trials;
        params["seed"] = opt.seed;
    }
    ordered_json inputs;
    inputs["matrix"] = opt.matrix_path;
    inputs["rows"] = m.rows();
    inputs["cols"] = m.cols();

    ordered_json results;
    bool verdict = true;
    int exit_code = kExitPass;
    if (monte_carlo) {
        if (opt.delta.has_value()) {
            const auto scan = rip::is_rip_montecarlo(m, opt.k, *opt.delta, opt.trials, opt.seed);
            results["ric"] = cli::to_json(scan.estimate);
            results["certified"] = false;
            const bool violated = scan.verdict == rip::ScanVerdict::violated;
            results["conclusion"] = violated ? "violated" : "no-violation-found";
            verdict = !violated;
            exit_code = violated ? kExitFail : kExitPass;
        } else {
            results["ric"] = cli::to_json(rip::ric_montecarlo(m, opt.k, opt.trials, opt.seed));
            results["certified"] = false;
        }
    } else {
        if (opt.delta.has_value()) {
            const auto decision = rip::is_rip(m, opt.k, *opt.delta);
            results["ric"] = cli::to_json(decision.estimate);
            results["holds"] = decision.holds;
            verdict = decision.holds;
            exit_code = decision.holds ? kExitPass : kExitFail;
        } else {
            results["ric"] = cli::to_json(rip::ric_exact(m, opt.k));
        }
    }
    emit(cli::report_envelope("rip", params, inputs, results, verdict,
                              monte_carlo ? std::optional<std::uint64_t>(opt.seed)
                                          : std::nullopt));
    return exit_code;
}

int run_params(double eps, double c, int n) {
    const auto p = pipeline::derive_params(eps, c, n);
    ordered_json params{{"eps", eps}, {"c", c}, {"n", n}};
    emit(cli::report_envelope("params", params, ordered_json::object(), cli::to_json(p), true,
                              std::nullopt));
    return kExitPass;
}

struct GapOptions {
    int experiment_case = 0;
    int n = 0;
    int d = 0;
    std::optional<int> k;
    std::optional<int> s;
    std::optional<int> c;
    double eps = 0.0;
    double C = 2.0;
    std::uint64_t seed = 0;
    std::string json_path;
};

int run_gap(const GapOptions& opt) {
    ordered_json params;
    params["case"] = opt.experiment_case;
    params["n"] = opt.n;
    params["d"] = opt.d;
    params["k"] = opt.k.has_value() ? ordered_json(*opt.k) : ordered_json(nullptr);
    params["s"] = opt.s.has_value() ? ordered_json(*opt.s) : ordered_json(nullptr);
    params["c"] = opt.c.has_value() ? ordered_json(*opt.c) : ordered_json(nullptr);
    params["eps"] = opt.eps;
    params["C"] = opt.C;
    params["seed"] = opt.seed;
    params["json"] = opt.json_path.empty() ? ordered_json(nullptr) : ordered_json(opt.json_path);

    bool passed = false;
    ordered_json results;
    if (opt.experiment_case == 1) {
        if (!opt.s.has_value() || !opt.c.has_value()) {
            throw ParameterError("gap --case 1 requires --s and --c");
        }
        const auto report =
            pipeline::gap_experiment_case1(opt.n, opt.d, *opt.s, *opt.c, opt.eps, opt.C, opt.seed);
        results = cli::to_json(report);
        passed = report.passed;
    } else if (opt.experiment_case == 2) {
        if (!opt.k.has_value()) {
            throw ParameterError("gap --case 2 requires --k");
        }
        const auto report = pipeline::gap_experiment_case2(opt.n, opt.d, *opt.k, opt.eps, opt.seed);
        results = cli::to_json(report);
        passed = report.passed;
    } else {
        throw ParameterError("gap: --case must be 1 or 2");
    }
    emit(cli::report_envelope("gap", params, ordered_json::object(), results, passed, opt.seed),
         opt.json_path);
    return passed ? kExitPass : kExitFail;
}

struct VerifyOptions {
    int count = 0;
    int n_min = 0;
    int n_max = 0;
    std::vector<int> degrees;
    std::string k_rule = "both";
    std::uint64_t seed = 0;
};

int run_verify(const VerifyOptions& opt) {
    pipeline::SuiteConfig cfg;
    cfg.count = opt.count;
    cfg.n_min = opt.n_min;
    cfg.n_max = opt.n_max;
    cfg.degrees = opt.degrees;
    cfg.seed = opt.seed;
    if (opt.k_rule == "n4") {
        cfg.k_rule = pipeline::KRule::quarter;
    } else if (opt.k_rule == "n2") {
        cfg.k_rule = pipeline::KRule::half;
    } else {
        cfg.k_rule = pipeline::KRule::both;
    }
    const auto summary = pipeline::verify_cheeger_suite(cfg);
    ordered_json params{{"count", opt.count}, {"n_min", opt.n_min},   {"n_max", opt.n_max},
                        {"d", opt.degrees},   {"k_rule", opt.k_rule}, {"seed", opt.seed}};
    emit(cli::report_envelope("verify-cheeger", params, ordered_json::object(),
                              cli::to_json(summary), summary.passed, opt.seed));
    return summary.passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expansion, sparse spectra, and restricted-isometry experiments on regular graphs"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    int gen_planted_s = -1;
    int gen_planted_c = -1;
    auto* gen = app.add_subcommand("gen", "generate a random or planted-cut regular graph");
    gen->add_option("--n", gen_opt.n, "vertex count")->required();
    gen->add_option("--d", gen_opt.d, "degree")->required();
    gen->add_option("--seed", gen_opt.seed, "random seed")->required();
    gen->add_option("--out", gen_opt.out, "output graph file")->required();
    auto* opt_s = gen->add_option("--planted-s", gen_planted_s, "planted set size");
    auto* opt_c = gen->add_option("--planted-c", gen_planted_c, "planted boundary size");
    opt_s->needs(opt_c);
    opt_c->needs(opt_s);

    std::string graph_path;
    std::vector<int> set_ids;
    auto* expansion = app.add_subcommand("expansion", "expansion of one vertex set");
    expansion->add_option("--graph", graph_path, "graph file")->required();
    expansion->add_option("--set", set_ids, "comma-separated vertex ids")
        ->required()
        ->delimiter(',');

    std::string phi_graph;
    int phi_k = 0;
    auto* phi = app.add_subcommand("phi", "exhaustive minimum expansion over sets of size <= k");
    phi->add_option("--graph", phi_graph, "graph file")->required();
    phi->add_option("--k", phi_k, "maximum set size")->required();

    std::string lambda_graph;
    int lambda_k = 0;
    auto* sparse_lambda =
        app.add_subcommand("sparse-lambda", "exact sparse minimum Rayleigh quotient");
    sparse_lambda->add_option("--graph", lambda_graph, "graph file")->required();
    sparse_lambda->add_option("--k", lambda_k, "support size")->required();

    std::string sweep_graph;
    std::string sweep_vec;
    auto* sweep = app.add_subcommand("sweep", "threshold sweep cut of a vector");
    sweep->add_option("--graph", sweep_graph, "graph file")->required();
    sweep->add_option("--vec", sweep_vec, "vector file, one decimal per line")->required();

    std::string reduce_graph;
    std::string reduce_out;
    auto* reduce = app.add_subcommand("reduce", "factor the normalized Laplacian as M'M");
    reduce->add_option("--graph", reduce_graph, "graph file")->required();
    reduce->add_option("--out", reduce_out, "output matrix file")->required();

    RipOptions rip_opt;
    double rip_delta = -1.0;
    auto* rip_cmd = app.add_subcommand("rip", "restricted isometry constant and decisions");
    rip_cmd->add_option("--matrix", rip_opt.matrix_path, "matrix file")->required();
    rip_cmd->add_option("--k", rip_opt.k, "order")->required();
    auto* delta_opt = rip_cmd->add_option("--delta", rip_delta, "isometry tolerance in (0,1)");
    auto* exact_flag = rip_cmd->add_flag("--exact", rip_opt.exact, "exhaustive scan (default)");
    auto* mc_flag = rip_cmd->add_flag("--mc", rip_opt.mc, "Monte-Carlo support sampling");
    exact_flag->excludes(mc_flag);
    rip_cmd->add_option("--trials", rip_opt.trials, "Monte-Carlo trials (default 1000)");
    rip_cmd->add_option("--seed", rip_opt.seed, "Monte-Carlo seed (default 0)");

    double params_eps = 0.0;
    double params_c = 0.0;
    int params_n = 0;
    auto* params_cmd = app.add_subcommand("params", "reduction parameter substitutions");
    params_cmd->add_option("--eps", params_eps, "eps in (0,1)")->required();
    params_cmd->add_option("--c", params_c, "order-gap constant C >= 1")->required();
    params_cmd->add_option("--n", params_n, "instance size")->required();

    GapOptions gap_opt;
    int gap_k = -1;
    int gap_s = -1;
    int gap_c = -1;
    auto* gap = app.add_subcommand("gap", "two-case reduction gap experiment");
    gap->add_option("--case", gap_opt.experiment_case, "1 (planted) or 2 (exact scan)")
        ->required();
    gap->add_option("--n", gap_opt.n, "vertex count")->required();
    gap->add_option("--d", gap_opt.d, "degree")->required();
    gap->add_option("--k", gap_k, "order for case 2");
    gap->add_option("--s", gap_s, "planted set size for case 1");
    gap->add_option("--c", gap_c, "planted boundary for case 1");
    gap->add_option("--eps", gap_opt.eps, "eps in (0,1)")->required();
    gap->add_option("--C", gap_opt.C, "order-gap constant (default 2)");
    gap->add_option("--seed", gap_opt.seed, "random seed")->required();
    gap->add_option("--json", gap_opt.json_path, "also write the report to this file");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify-cheeger", "random-instance chain verification");
    verify->add_option("--count", verify_opt.count, "number of instances")->required();
    verify->add_option("--n-min", verify_opt.n_min, "smallest vertex count")->required();
    verify->add_option("--n-max", verify_opt.n_max, "largest vertex count")->required();
    verify->add_option("--d", verify_opt.degrees, "comma-separated degrees")
        ->required()
        ->delimiter(',');
    verify->add_option("--k-rule", verify_opt.k_rule, "n4, n2, or both (default both)")
        ->check(CLI::IsMember({"n4", "n2", "both"}));
    verify->add_option("--seed", verify_opt.seed, "base seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (opt_s->count() > 0) {
                gen_opt.planted_s = gen_planted_s;
                gen_opt.planted_c = gen_planted_c;
            }
            return run_gen(gen_opt);
        }
        if (expansion->parsed()) {
            return run_expansion(graph_path, set_ids);
        }
        if (phi->parsed()) {
            return run_phi(phi_graph, phi_k);
        }
        if (sparse_lambda->parsed()) {
            return run_sparse_lambda(lambda_graph, lambda_k);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_graph, sweep_vec);
        }
        if (reduce->parsed()) {
            return run_reduce(reduce_graph, reduce_out);
        }
        if (rip_cmd->parsed()) {
            if (delta_opt->count() > 0) {
                rip_opt.delta = rip_delta;
            }
            return run_rip(rip_opt);
        }
        if (params_cmd->parsed()) {
            return run_params(params_eps, params_c, params_n);
        }
        if (gap->parsed()) {
            if (gap->count("--k") > 0) {
                gap_opt.k = gap_k;
            }
            if (gap->count("--s") > 0) {
                gap_opt.s = gap_s;
            }
            if (gap->count("--c") > 0) {
                gap_opt.c = gap_c;
            }
            return run_gap(gap_opt);
        }
        if (verify->parsed()) {
            return run_verify(verify_opt);
        }
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const ParameterError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const InvalidCutError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFail;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFail;
    }
}
