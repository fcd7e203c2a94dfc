// Copyright 2026 The robust-locus Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robust_locus/cost_oracle.hpp"
#include "robust_locus/instance_gen.hpp"
#include "robust_locus/io.hpp"
#include "robust_locus/rng.hpp"
#include "robust_locus/robust_approx.hpp"
#include "robust_locus/sp_dp.hpp"
#include "robust_locus/sp_fptas.hpp"

namespace rl = robust_locus;

namespace {

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) {
            out += ' ';
        }
        out += std::to_string(values[k]);
    }
    return out;
}

std::string join_edges(const rl::EdgeSubgraph& sub) {
    std::string out;
    for (std::size_t k = 0; k < sub.edges.size(); ++k) {
        if (k > 0) {
            out += ' ';
        }
        out += std::to_string(sub.edges[k].u) + "-" + std::to_string(sub.edges[k].v);
    }
    return out;
}

rl::EdgeSubgraph path_to_edges(const std::vector<int>& vertices) {
    rl::EdgeSubgraph sub;
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
        sub.edges.push_back(rl::make_edge(vertices[k], vertices[k + 1]));
    }
    return sub;
}

rl::EdgeSubgraph evaluation_edges(const rl::Instance& instance) {
    if (const auto* ev = std::get_if<rl::EvaluateProblem>(&instance.problem())) {
        return rl::EdgeSubgraph{ev->edge_set};
    }
    return rl::EdgeSubgraph::all_edges(instance.graph());
}

void print_exact_cost(const rl::Instance& instance, const rl::EdgeSubgraph& edges,
                      std::uint64_t cap) {
    try {
        rl::WorstCase worst = rl::worst_case_cost(instance, edges, cap);
        std::cout << "c: " << rl::format_length(worst.cost) << "\n";
    } catch (const rl::CapacityError& e) {
        std::cout << "c: skipped (" << e.what() << ")\n";
    }
}

struct SolveOptions {
    std::string input;
    std::string method;
    double eps = 0.0;
    std::string family;
};

void cmd_solve(const SolveOptions& opt) {
    if (opt.method != "dmax" && opt.method != "gm" && opt.method != "dp" &&
        opt.method != "fptas") {
        throw rl::InputError("unknown method: " + opt.method);
    }
    const std::uint64_t cap = rl::oracle_cap_from_env();
    rl::Instance instance = rl::load_instance_file(opt.input);
    std::optional<rl::FamilyTag> family_override;
    if (!opt.family.empty()) {
        family_override = rl::parse_family_tag(opt.family);
    }

    if (opt.method == "dmax") {
        rl::DmaxSolution sol = rl::solve_via_dmax(instance);
        std::cout << "method: dmax\n";
        std::cout << "edges: " << join_edges(sol.edges) << "\n";
        if (!sol.sequence.empty()) {
            std::cout << "sequence: " << join_ints(sol.sequence) << "\n";
        }
        std::cout << "c_max: " << rl::format_length(sol.cmax_value) << "\n";
        print_exact_cost(instance, sol.edges, cap);
        std::cout << "bound: " << rl::format_length(rl::certified_bound(instance, family_override))
                  << "\n";
        return;
    }
    if (opt.method == "gm") {
        rl::Scenario gm = rl::geometric_median_positions(instance);
        rl::EdgeSubgraph edges = rl::solve_via_representative(instance, gm);
        std::cout << "method: gm\n";
        std::cout << "gm_positions: " << join_ints(gm.point) << "\n";
        std::cout << "edges: " << join_edges(edges) << "\n";
        std::cout << "c_max: " << rl::format_length(rl::cmax_cost(instance, edges)) << "\n";
        print_exact_cost(instance, edges, cap);
        std::cout << "bound: none (representative choice carries no guarantee)\n";
        return;
    }

    const auto* sp = std::get_if<rl::SpProblem>(&instance.problem());
    if (sp == nullptr) {
        throw rl::InputError("method " + opt.method + " requires an sp instance");
    }
    if (opt.method == "dp") {
        rl::SpSolution sol = rl::solve_exact(instance, sp->s, sp->t);
        std::cout << "method: dp\n";
        std::cout << "path: " << join_ints(sol.path) << "\n";
        std::cout << "edges: " << join_edges(path_to_edges(sol.path)) << "\n";
        std::cout << "optimum: " << rl::format_length(sol.cost) << "\n";
        std::cout << "n_profiles: " << sol.stats.n_profiles << "\n";
        std::cout << "n_values: " << sol.stats.n_values << "\n";
        std::cout << "bound: 1.000000000\n";
        return;
    }
    if (opt.eps <= 0.0) {
        throw rl::InputError("fptas needs --eps > 0");
    }
    rl::FptasSolution sol = rl::solve_fptas(instance, sp->s, sp->t, opt.eps, cap);
    std::cout << "method: fptas\n";
    std::cout << "eps: " << rl::format_length(opt.eps) << "\n";
    std::cout << "path: " << join_ints(sol.path) << "\n";
    std::cout << "edges: " << join_edges(path_to_edges(sol.path)) << "\n";
    std::cout << "cost: " << rl::format_length(sol.cost) << "\n";
    std::cout << "A: " << rl::format_length(sol.upper_bound) << "\n";
    std::cout << "quantum: " << rl::format_length(sol.quantum) << "\n";
    std::cout << "n_profiles: " << sol.stats.n_profiles << "\n";
    std::cout << "n_values: " << sol.stats.n_values << "\n";
    std::cout << "bound: " << rl::format_length(1.0 + opt.eps) << "\n";
}

struct VerifyOptions {
    std::vector<std::string> families;
    std::vector<std::string> metrics;
    int seeds = 100;
    int max_n = 10;
    int max_sigma = 3;
};

struct CampaignCell {
    rl::Family family;
    rl::MetricKind kind;
    std::uint64_t seed;
};

int cmd_verify_bounds(const VerifyOptions& opt) {
    const std::uint64_t cap = rl::oracle_cap_from_env();
    std::vector<rl::Family> families;
    for (const auto& name : opt.families) {
        families.push_back(rl::parse_family(name));
    }
    std::vector<rl::MetricKind> kinds;
    for (const auto& name : opt.metrics) {
        kinds.push_back(rl::parse_metric_kind(name));
    }
    if (opt.seeds <= 0 || opt.max_n < 2 || opt.max_sigma < 1) {
        throw rl::InputError("verify-bounds needs positive seeds, n >= 2, sigma >= 1");
    }

    std::vector<CampaignCell> cells;
    for (rl::Family family : families) {
        for (rl::MetricKind kind : kinds) {
            for (int seed = 0; seed < opt.seeds; ++seed) {
                cells.push_back({family, kind, static_cast<std::uint64_t>(seed)});
            }
        }
    }

    std::vector<std::string> rows(cells.size());
    std::vector<char> failed(cells.size(), 0);

#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < static_cast<long long>(cells.size()); ++c) {
        const CampaignCell& cell = cells[c];
        rl::Rng draw(cell.seed * 2654435761ULL + static_cast<std::uint64_t>(cell.family) * 97ULL +
                     static_cast<std::uint64_t>(cell.kind) * 7919ULL);
        const int min_n = rl::family_min_vertices(cell.family);
        const int n = draw.uniform_int(min_n, std::max(min_n, opt.max_n));
        const int sigma = draw.uniform_int(1, opt.max_sigma);

        std::ostringstream row;
        row << rl::family_name(cell.family) << ',' << rl::metric_kind_name(cell.kind) << ',' << n
            << ',' << sigma << ',';
        try {
            rl::Instance instance = rl::gen_random(cell.family, n, sigma, cell.kind, cell.seed);
            const rl::FamilyTag tag = rl::campaign_family_tag(cell.family, cell.kind);
            const double bound = rl::family_bound(tag);
            const rl::EdgeSubgraph sub = rl::EdgeSubgraph::all_edges(instance.graph());
            const double c_max = rl::cmax_cost(instance, sub);
            try {
                const double c = rl::worst_case_cost(instance, sub, cap).cost;
                const double ratio = c > 0.0 ? c_max / c : 1.0;
                const bool ok = ratio <= bound + 1e-9;
                row << rl::format_length(c_max) << ',' << rl::format_length(c) << ','
                    << rl::format_length(ratio) << ',' << rl::format_length(bound) << ','
                    << (ok ? "true" : "false");
                if (!ok) {
                    failed[c] = 1;
                }
            } catch (const rl::CapacityError&) {
                row << rl::format_length(c_max) << ",,," << rl::format_length(bound)
                    << ",skipped";
            }
        } catch (const std::exception& e) {
            row << "error: " << e.what();
            failed[c] = 1;
        }
        rows[c] = row.str();
    }

    std::cout << "family,metric_kind,n,sigma,c_max,c,ratio,bound,ok\n";
    bool any_failed = false;
    for (std::size_t c = 0; c < rows.size(); ++c) {
        std::cout << rows[c] << "\n";
        any_failed = any_failed || failed[c];
    }
    return any_failed ? 1 : 0;
}

void cmd_check_ptolemy(const std::string& input) {
    std::ifstream in(input);
    if (!in) {
        throw rl::InputError("cannot open " + input);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw rl::InputError(std::string("malformed JSON: ") + e.what());
    }
    rl::MetricSpace metric = doc.contains("metric") ? rl::metric_from_json(doc.at("metric"))
                                                    : rl::metric_from_json(doc);
    rl::PtolemyReport report = rl::check_ptolemy(metric);
    std::cout << "points: " << metric.point_count() << "\n";
    std::cout << "quadruples: " << report.quadruples_checked << "\n";
    if (report.ptolemaic()) {
        std::cout << "verdict: Ptolemaic\n";
        return;
    }
    const std::size_t count = report.violating_quadruple_count();
    std::cout << "verdict: non-Ptolemaic, " << count << " violating quadruple"
              << (count == 1 ? "" : "s") << "\n";
    for (const auto& v : report.violations) {
        std::cout << "violation: (" << v.points[0] << "," << v.points[1] << "," << v.points[2]
                  << "," << v.points[3] << ") " << rl::format_length(v.lhs) << " > "
                  << rl::format_length(v.rhs) << "\n";
    }
}

struct GenOptions {
    std::string tight;
    std::string family;
    int n = 0;
    int sigma = 1;
    std::string metric = "euclidean2d";
    std::uint64_t seed = 0;
    double eps = 0.01;
    std::string problem = "evaluate";
    int s = -1;
    int t = -1;
    std::string output;
};

void cmd_gen(const GenOptions& opt) {
    std::optional<rl::Instance> instance;
    if (!opt.tight.empty()) {
        if (opt.tight == "path") {
            instance = rl::gen_tight_path(opt.n);
        } else if (opt.tight == "cycle") {
            instance = rl::gen_tight_cycle(opt.n);
        } else if (opt.tight == "triangle") {
            instance = rl::gen_tight_triangle();
        } else if (opt.tight == "clique") {
            instance = rl::gen_tight_clique(opt.n);
        } else if (opt.tight == "star") {
            instance = rl::gen_tight_star(opt.n);
        } else if (opt.tight == "gm-counterexample") {
            instance = rl::gen_gm_counterexample(opt.eps).instance;
        } else {
            throw rl::InputError("unknown tight family: " + opt.tight);
        }
    } else if (!opt.family.empty()) {
        instance = rl::gen_random(rl::parse_family(opt.family), opt.n, opt.sigma,
                                  rl::parse_metric_kind(opt.metric), opt.seed);
    } else {
        throw rl::InputError("gen needs either --tight or --family");
    }

    if (opt.problem == "sp") {
        const int s = opt.s >= 0 ? opt.s : 0;
        const int t = opt.t >= 0 ? opt.t : instance->vertex_count() - 1;
        instance = instance->with_problem(rl::SpProblem{s, t});
    } else if (opt.problem == "mst") {
        instance = instance->with_problem(rl::MstProblem{});
    } else if (opt.problem == "tsp") {
        instance = instance->with_problem(rl::TspProblem{});
    } else if (opt.problem != "evaluate") {
        throw rl::InputError("unknown problem tag: " + opt.problem);
    }

    if (opt.output.empty()) {
        std::cout << rl::instance_to_text(*instance) << "\n";
    } else {
        rl::save_instance_file(*instance, opt.output);
    }
}

void cmd_evaluate(const std::string& input, const std::string& family) {
    const std::uint64_t cap = rl::oracle_cap_from_env();
    rl::Instance instance = rl::load_instance_file(input);
    const rl::FamilyTag tag =
        family.empty() ? rl::FamilyTag::General : rl::parse_family_tag(family);
    rl::RatioReport report = rl::ratio_report(instance, evaluation_edges(instance), tag, cap);
    std::cout << "family,c_max,c,ratio,bound,tight\n";
    std::cout << rl::ratio_report_csv(report) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"min-max subgraph optimization with uncertain vertex locations"};
    app.require_subcommand(1);
    int exit_code = 0;

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("--in", solve_opt.input, "instance JSON file")->required();
    solve->add_option("--method", solve_opt.method, "dmax|gm|dp|fptas")->required();
    solve->add_option("--eps", solve_opt.eps, "accuracy for --method fptas");
    solve->add_option("--family", solve_opt.family, "family tag override for the bound");
    solve->callback([&]() { cmd_solve(solve_opt); });

    VerifyOptions verify_opt;
    verify_opt.families = {"path", "cycle", "tree", "star", "clique", "matching",
                           "general-connected"};
    verify_opt.metrics = {"euclidean2d", "random-metric-closure"};
    auto* verify = app.add_subcommand("verify-bounds", "random campaign checking ratio bounds");
    verify->add_option("--families", verify_opt.families, "families to test")->delimiter(',');
    verify->add_option("--metrics", verify_opt.metrics, "metric kinds to test")->delimiter(',');
    verify->add_option("--seeds", verify_opt.seeds, "seeds per (family, metric) cell");
    verify->add_option("--n", verify_opt.max_n, "largest vertex count");
    verify->add_option("--sigma", verify_opt.max_sigma, "largest uncertainty set size");
    verify->callback([&]() { exit_code = cmd_verify_bounds(verify_opt); });

    std::string ptolemy_input;
    auto* ptolemy = app.add_subcommand("check-ptolemy", "test the four-point inequality");
    ptolemy->add_option("--in", ptolemy_input, "metric or instance JSON file")->required();
    ptolemy->callback([&]() { cmd_check_ptolemy(ptolemy_input); });

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--tight", gen_opt.tight, "path|cycle|triangle|clique|star|gm-counterexample");
    gen->add_option("--family", gen_opt.family, "random family");
    gen->add_option("--n", gen_opt.n, "vertex count (k for cliques)");
    gen->add_option("--sigma", gen_opt.sigma, "positions per vertex");
    gen->add_option("--metric", gen_opt.metric, "euclidean2d|graph-induced|random-metric-closure|random-gen");
    gen->add_option("--seed", gen_opt.seed, "random seed");
    gen->add_option("--eps", gen_opt.eps, "eps for --tight gm-counterexample");
    gen->add_option("--problem", gen_opt.problem, "sp|mst|tsp|evaluate");
    gen->add_option("--s", gen_opt.s, "sp origin (default 0)");
    gen->add_option("--t", gen_opt.t, "sp destination (default n-1)");
    gen->add_option("--out", gen_opt.output, "output file (default stdout)");
    gen->callback([&]() { cmd_gen(gen_opt); });

    std::string eval_input;
    std::string eval_family;
    auto* evaluate = app.add_subcommand("evaluate", "ratio report for an instance");
    evaluate->add_option("--in", eval_input, "instance JSON file")->required();
    evaluate->add_option("--family", eval_family, "family tag for the bound column");
    evaluate->callback([&]() { cmd_evaluate(eval_input, eval_family); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const rl::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const rl::CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
