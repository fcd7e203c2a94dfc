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

// End-to-end acceptance suite. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "robust_locus/cost_oracle.hpp"
#include "robust_locus/instance_gen.hpp"
#include "robust_locus/rng.hpp"
#include "robust_locus/robust_approx.hpp"
#include "robust_locus/sp_dp.hpp"
#include "robust_locus/sp_fptas.hpp"

namespace rl = robust_locus;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) {
        ++g_failures;
    }
}

double ratio_of(const rl::Instance& inst) {
    const rl::EdgeSubgraph all = rl::EdgeSubgraph::all_edges(inst.graph());
    const double c = rl::worst_case_cost(inst, all).cost;
    return c > 0.0 ? rl::cmax_cost(inst, all) / c : 1.0;
}

bool tight_path_ratios(std::string& detail) {
    for (int n : {3, 4, 5, 8}) {
        const double ratio = ratio_of(rl::gen_tight_path(n));
        if (std::abs(ratio - 2.0) > 1e-9) {
            detail = "n=" + std::to_string(n) + " ratio " + std::to_string(ratio);
            return false;
        }
    }
    return true;
}

bool tight_cycle_ratios(std::string& detail) {
    for (int n : {4, 5, 6, 8}) {
        const double ratio = ratio_of(rl::gen_tight_cycle(n));
        if (std::abs(ratio - 2.0) > 1e-9) {
            detail = "n=" + std::to_string(n) + " ratio " + std::to_string(ratio);
            return false;
        }
    }
    const double triangle = ratio_of(rl::gen_tight_triangle());
    if (std::abs(triangle - 1.5) > 1e-9) {
        detail = "triangle ratio " + std::to_string(triangle);
        return false;
    }
    return true;
}

bool tight_clique_costs(std::string& detail) {
    for (int k = 2; k <= 8; ++k) {
        const rl::Instance inst = rl::gen_tight_clique(k);
        const rl::EdgeSubgraph all = rl::EdgeSubgraph::all_edges(inst.graph());
        const double c_max = rl::cmax_cost(inst, all);
        const double c = rl::worst_case_cost(inst, all).cost;
        const double cut = static_cast<double>(rl::oracle::max_cut_complete(k));
        const double expected_c_max = k * (k - 1) / 2.0;
        const double expected_c = static_cast<double>((k * k) / 4);
        if (std::abs(c_max - expected_c_max) > 1e-9 || std::abs(c - cut) > 1e-9 ||
            std::abs(c - expected_c) > 1e-9) {
            detail = "k=" + std::to_string(k) + " c_max " + std::to_string(c_max) + " c " +
                     std::to_string(c);
            return false;
        }
    }
    return true;
}

bool tight_star_ratios(std::string& detail) {
    for (int n = 3; n <= 10; ++n) {
        const double ratio = ratio_of(rl::gen_tight_star(n));
        const double expected = 3.0 * (n - 1) / (n + 1);
        if (std::abs(ratio - expected) > 1e-9) {
            detail = "n=" + std::to_string(n) + " ratio " + std::to_string(ratio);
            return false;
        }
    }
    return true;
}

struct CampaignCell {
    rl::Family family;
    rl::MetricKind kind;
    double bound;
    bool exact_one;  // matchings: the ratio must equal 1
};

bool bound_soundness_campaign(std::string& detail) {
    using rl::Family;
    using rl::MetricKind;
    const std::vector<CampaignCell> cells = {
        {Family::Matching, MetricKind::Euclidean2d, 1.0, true},
        {Family::Matching, MetricKind::RandomMetricClosure, 1.0, true},
        {Family::Path, MetricKind::Euclidean2d, 2.0, false},
        {Family::Path, MetricKind::RandomMetricClosure, 2.0, false},
        {Family::Cycle, MetricKind::Euclidean2d, 2.0, false},
        {Family::Cycle, MetricKind::RandomMetricClosure, 2.0, false},
        {Family::Clique, MetricKind::Euclidean2d, 2.0, false},
        {Family::Clique, MetricKind::RandomMetricClosure, 2.0, false},
        {Family::GeneralConnected, MetricKind::Euclidean2d, 4.0, false},
        {Family::GeneralConnected, MetricKind::RandomMetricClosure, 9.0, false},
        {Family::Star, MetricKind::Euclidean2d, 2.0, false},
        {Family::Star, MetricKind::RandomMetricClosure, 3.0, false},
        {Family::Tree, MetricKind::Euclidean2d, 6.0, false},
        {Family::Tree, MetricKind::RandomMetricClosure, 6.0, false},
    };
    for (const CampaignCell& cell : cells) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            rl::Rng draw(seed * 7919 + static_cast<std::uint64_t>(cell.family) * 131 +
                         static_cast<std::uint64_t>(cell.kind));
            const int n = draw.uniform_int(rl::family_min_vertices(cell.family), 10);
            const int sigma = draw.uniform_int(1, 3);
            const rl::Instance inst = rl::gen_random(cell.family, n, sigma, cell.kind, seed);
            const double ratio = ratio_of(inst);
            const bool ok = cell.exact_one ? std::abs(ratio - 1.0) <= 1e-9
                                           : ratio <= cell.bound + 1e-9;
            if (!ok) {
                detail = std::string(rl::family_name(cell.family)) + "/" +
                         rl::metric_kind_name(cell.kind) + " seed " + std::to_string(seed) +
                         " ratio " + std::to_string(ratio) + " bound " +
                         std::to_string(cell.bound);
                return false;
            }
        }
    }
    return true;
}

rl::Instance random_sp_instance(std::uint64_t seed, bool gen_flavor_mix) {
    const int n = 4 + static_cast<int>(seed % 5);
    const int sigma = 1 + static_cast<int>(seed % 3);
    rl::MetricKind kind;
    if (gen_flavor_mix) {
        kind = seed % 2 == 0 ? rl::MetricKind::Euclidean2d : rl::MetricKind::RandomGenTable;
    } else {
        kind = seed % 2 == 0 ? rl::MetricKind::Euclidean2d
                             : rl::MetricKind::RandomMetricClosure;
    }
    return rl::gen_random(rl::Family::GeneralConnected, n, sigma, kind, seed)
        .with_problem(rl::SpProblem{0, n - 1});
}

bool dp_exactness(std::string& detail) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const rl::Instance inst = random_sp_instance(seed, true);
        const int t = inst.vertex_count() - 1;
        const auto brute = rl::oracle::robust_shortest_path(inst, 0, t);
        const rl::SpSolution sol = rl::solve_exact(inst, 0, t);
        if (std::abs(sol.cost - brute.cost) > 1e-9) {
            detail = "seed " + std::to_string(seed) + " dp " + std::to_string(sol.cost) +
                     " brute " + std::to_string(brute.cost);
            return false;
        }
    }
    return true;
}

bool fptas_guarantee(std::string& detail) {
    for (const double eps : {0.1, 0.5, 1.0}) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const rl::Instance inst = random_sp_instance(seed, false);
            const int n = inst.vertex_count();
            const int t = n - 1;
            const double opt = rl::solve_exact(inst, 0, t).cost;
            const rl::FptasSolution sol = rl::solve_fptas(inst, 0, t, eps);
            if (sol.cost > (1.0 + eps) * opt + 1e-9) {
                detail = "seed " + std::to_string(seed) + " eps " + std::to_string(eps) +
                         " cost " + std::to_string(sol.cost) + " opt " + std::to_string(opt);
                return false;
            }
            const double eps_prime = eps / (2.0 * n);
            if (sol.quantum > 0.0 &&
                static_cast<double>(sol.stats.n_values) > n + 2.0 + 1.0 / eps_prime + 1e-9) {
                detail = "seed " + std::to_string(seed) + " eps " + std::to_string(eps) +
                         " n_values " + std::to_string(sol.stats.n_values);
                return false;
            }
        }
    }
    return true;
}

bool dmax_sp_guarantee(std::string& detail) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const rl::Instance inst = random_sp_instance(seed, false);
        const int t = inst.vertex_count() - 1;
        const double opt = rl::solve_exact(inst, 0, t).cost;
        const rl::DmaxSolution sol = rl::solve_via_dmax(inst);
        const double cost = rl::worst_case_cost(inst, sol.edges).cost;
        if (cost > 2.0 * opt + 1e-9) {
            detail = "seed " + std::to_string(seed) + " cost " + std::to_string(cost) +
                     " opt " + std::to_string(opt);
            return false;
        }
    }
    return true;
}

bool gm_failure_ratio(std::string& detail) {
    const rl::GmCounterexample cx = rl::gen_gm_counterexample(0.01);
    const rl::Scenario gm = rl::geometric_median_positions(cx.instance);
    // the representative heuristic scores each candidate edge by its length
    // under the median positions and picks the cheaper-looking one
    const double w_near = cx.instance.metric().dist(gm.point[0], gm.point[1]);
    const double w_far = cx.instance.metric().dist(gm.point[1], gm.point[2]);
    const rl::EdgeSubgraph picked = w_far <= w_near ? cx.far_edge : cx.near_edge;
    const double picked_cost = rl::worst_case_cost(cx.instance, picked).cost;
    const double optimum = std::min(rl::worst_case_cost(cx.instance, cx.near_edge).cost,
                                    rl::worst_case_cost(cx.instance, cx.far_edge).cost);
    const double ratio = picked_cost / optimum;
    if (std::abs(ratio - 100.0) > 1e-6) {
        detail = "ratio " + std::to_string(ratio);
        return false;
    }
    return true;
}

bool ptolemy_checker(std::string& detail) {
    const rl::MetricSpace long_pair = rl::MetricSpace::explicit_table(
        {
            {0.0, 1.5, 0.5, 0.5},
            {1.5, 0.0, 1.0, 1.0},
            {0.5, 1.0, 0.0, 1.0},
            {0.5, 1.0, 1.0, 0.0},
        },
        rl::MetricFlavor::Metric);
    const rl::PtolemyReport report = rl::check_ptolemy(long_pair);
    if (report.violations.size() != 1 || report.violating_quadruple_count() != 1) {
        detail = "expected exactly one violation, got " +
                 std::to_string(report.violations.size());
        return false;
    }
    const rl::PtolemyViolation& v = report.violations.front();
    std::array<int, 4> sorted = v.points;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{0, 1, 2, 3} || std::abs(v.lhs - 1.5) > 1e-9 ||
        std::abs(v.rhs - 1.0) > 1e-9) {
        detail = "unexpected violating quadruple";
        return false;
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        rl::Rng rng(seed);
        std::vector<std::vector<double>> coords;
        const int count = rng.uniform_int(4, 12);
        for (int k = 0; k < count; ++k) {
            coords.push_back({rng.uniform(), rng.uniform()});
        }
        const rl::MetricSpace m = rl::MetricSpace::euclidean(2, std::move(coords));
        if (!rl::check_ptolemy(m).ptolemaic()) {
            detail = "euclidean seed " + std::to_string(seed) + " flagged";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "tight paths reach ratio 2 exactly", tight_path_ratios);
    criterion(2, "tight cycles reach ratio 2, the 3-cycle reaches 3/2", tight_cycle_ratios);
    criterion(3, "tight cliques: surrogate k(k-1)/2 against the max-cut cost",
              tight_clique_costs);
    criterion(4, "tight stars reach 3(n-1)/(n+1) exactly", tight_star_ratios);
    criterion(5, "bound soundness campaign, 100 seeds per family", bound_soundness_campaign);
    criterion(6, "profile dp equals double-exhaustive brute force on 200 instances",
              dp_exactness);
    criterion(7, "rounding scheme stays within (1+eps) and the value budget",
              fptas_guarantee);
    criterion(8, "surrogate paths stay within twice the exact optimum", dmax_sp_guarantee);
    criterion(9, "median representative fails by the predicted factor 100", gm_failure_ratio);
    criterion(10, "four-point checker: long-pair space flagged, euclidean sets clean",
              ptolemy_checker);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}
