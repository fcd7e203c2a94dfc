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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "robust_locus/det_solvers.hpp"
#include "robust_locus/instance_gen.hpp"
#include "robust_locus/rng.hpp"
#include "robust_locus/sp_dp.hpp"

using namespace robust_locus;

namespace {

// s --- v --- t on a line; the middle vertex can sit on either endpoint.
Instance line_instance() {
    return Instance(Graph::path(3), MetricSpace::euclidean(1, {{0.0}, {1.0}}),
                    {{0}, {0, 1}, {1}}, SpProblem{0, 2});
}

std::vector<std::int64_t> key_of(const Profile& p) {
    std::vector<std::int64_t> key;
    for (double v : p.values) {
        key.push_back(std::llround(v * 1e9));
    }
    return key;
}

std::set<std::vector<std::int64_t>> profile_keys(const ProfileTable& table) {
    std::set<std::vector<std::int64_t>> keys;
    for (const auto& entry : table.entries) {
        keys.insert(key_of(entry.profile));
    }
    return keys;
}

MetricKind kind_for(std::uint64_t seed) {
    return seed % 2 == 0 ? MetricKind::Euclidean2d : MetricKind::RandomGenTable;
}

}  // namespace

TEST_CASE("profile extension on the line instance") {
    Instance inst = line_instance();

    Profile at_t;
    at_t.values = {0.0};
    Profile at_v = extend_profile(inst, 1, 2, at_t);
    CHECK(at_v.values == std::vector<double>{1.0, 0.0});

    Profile at_s = extend_profile(inst, 0, 1, at_v);
    CHECK(at_s.values == std::vector<double>{1.0});

    // the brute-force conditional costs agree
    CHECK(oracle::conditional_profile(inst, {1, 2}) == at_v.values);
    CHECK(oracle::conditional_profile(inst, {0, 1, 2}) == at_s.values);

    CHECK_THROWS_AS(extend_profile(inst, 0, 2, at_t), InputError);  // not adjacent
    Profile wrong;
    wrong.values = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(extend_profile(inst, 0, 1, wrong), InputError);
}

TEST_CASE("profile extension with singleton sets adds a scalar") {
    Instance inst = gen_random(Family::Path, 4, 1, MetricKind::Euclidean2d, 8);
    Profile zero;
    zero.values = {0.0};
    Profile one = extend_profile(inst, 2, 3, zero);
    const double d = inst.metric().dist(inst.positions(2)[0], inst.positions(3)[0]);
    CHECK(one.values == std::vector<double>{d});
}

TEST_CASE("dp tables on the line instance") {
    Instance inst = line_instance();
    DpResult dp = dp_tables(inst, 0, 2);
    CHECK(dp.source_table.anchor == 0);
    CHECK(dp.source_table.budget == 2);
    REQUIRE(dp.source_table.entries.size() == 1);
    CHECK(dp.source_table.entries[0].profile.values == std::vector<double>{1.0});
    CHECK(dp.source_table.entries[0].path == std::vector<int>{0, 1, 2});
}

TEST_CASE("parallel routes keep both profiles before selection") {
    // 0-1-3 costs 1, 0-2-3 costs 3; all sets singletons
    Graph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    MetricSpace line = MetricSpace::euclidean(1, {{0.0}, {0.5}, {2.0}, {1.0}});
    Instance inst(g, line, {{0}, {1}, {2}, {3}}, SpProblem{0, 3});
    DpResult dp = dp_tables(inst, 0, 3);
    auto keys = profile_keys(dp.source_table);
    CHECK(keys.size() == 2);
    CHECK(keys.count(key_of(Profile{{1.0}})) == 1);
    CHECK(keys.count(key_of(Profile{{3.0}})) == 1);
}

TEST_CASE("singleton instances store exactly the distinct path costs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = gen_random(Family::GeneralConnected, 6, 1, kind_for(seed), seed)
                            .with_problem(SpProblem{0, 5});
        DpResult dp = dp_tables(inst, 0, 5);
        std::set<std::int64_t> stored;
        for (const auto& entry : dp.source_table.entries) {
            REQUIRE(entry.profile.values.size() == 1);
            stored.insert(std::llround(entry.profile.values[0] * 1e9));
        }
        std::set<std::int64_t> expected;
        for (const auto& path : oracle::all_simple_paths(inst.graph(), 0, 5)) {
            expected.insert(std::llround(oracle::path_worst_case(inst, path) * 1e9));
        }
        CHECK(stored == expected);
    }
}

TEST_CASE("exact solver degenerates to the deterministic shortest path") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst =
            gen_random(Family::GeneralConnected, 7, 1, MetricKind::Euclidean2d, seed)
                .with_problem(SpProblem{0, 6});
        std::vector<double> weights;
        for (const Edge& e : inst.graph().edges()) {
            weights.push_back(
                inst.metric().dist(inst.positions(e.u)[0], inst.positions(e.v)[0]));
        }
        WeightedGraphView view{&inst.graph(), weights};
        SpSolution sol = solve_exact(inst, 0, 6);
        CHECK(sol.cost == doctest::Approx(shortest_path(view, 0, 6).weight));
    }
}

TEST_CASE("exact solver on the line instance") {
    SpSolution sol = solve_exact(line_instance(), 0, 2);
    CHECK(sol.cost == doctest::Approx(1.0));
    CHECK(sol.path == std::vector<int>{0, 1, 2});
}

TEST_CASE("exact solver equals the double-exhaustive brute force") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        const int sigma = 1 + static_cast<int>(seed % 3);
        Instance inst = gen_random(Family::GeneralConnected, n, sigma, kind_for(seed), seed)
                            .with_problem(SpProblem{0, n - 1});
        const auto brute = oracle::robust_shortest_path(inst, 0, n - 1);
        SpSolution sol = solve_exact(inst, 0, n - 1);
        CHECK(std::abs(sol.cost - brute.cost) <= 1e-9);
        // the reported path really has the reported worst-case cost
        CHECK(oracle::path_worst_case(inst, sol.path) == doctest::Approx(sol.cost));
    }
}

TEST_CASE("every stored representative is a simple anchored path") {
    Instance inst = gen_random(Family::GeneralConnected, 7, 2,
                               MetricKind::RandomMetricClosure, 13)
                        .with_problem(SpProblem{0, 6});
    DpResult dp = dp_tables(inst, 0, 6);
    for (const ProfileTable& table : dp.all_tables) {
        for (const ProfileEntry& entry : table.entries) {
            REQUIRE(!entry.path.empty());
            CHECK(entry.path.front() == table.anchor);
            CHECK(entry.path.back() == 6);
            std::set<int> unique(entry.path.begin(), entry.path.end());
            CHECK(unique.size() == entry.path.size());
            for (std::size_t k = 0; k + 1 < entry.path.size(); ++k) {
                CHECK(inst.graph().has_edge(entry.path[k], entry.path[k + 1]));
            }
            CHECK(entry.profile.values.size() ==
                  inst.positions(table.anchor).size());
        }
    }
}

TEST_CASE("profile sets grow with the budget") {
    Instance inst = gen_random(Family::GeneralConnected, 6, 2,
                               MetricKind::RandomMetricClosure, 21)
                        .with_problem(SpProblem{0, 5});
    for (int budget = 1; budget < 5; ++budget) {
        DpOptions smaller, larger;
        smaller.max_budget = budget;
        larger.max_budget = budget + 1;
        DpResult a = dp_tables(inst, 0, 5, smaller);
        DpResult b = dp_tables(inst, 0, 5, larger);
        for (int anchor = 0; anchor < 6; ++anchor) {
            const auto keys_a = profile_keys(a.all_tables[anchor]);
            const auto keys_b = profile_keys(b.all_tables[anchor]);
            CHECK(std::includes(keys_b.begin(), keys_b.end(), keys_a.begin(), keys_a.end()));
        }
    }
}

TEST_CASE("optimal value is invariant under position reordering") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Instance inst = gen_random(Family::GeneralConnected, 6, 3, kind_for(seed), seed + 77);
        auto reversed = inst.uncertainty_sets();
        for (auto& set : reversed) {
            std::reverse(set.begin(), set.end());
        }
        Instance permuted(inst.graph(), inst.metric(), reversed, SpProblem{0, 5});
        const double a = solve_exact(inst.with_problem(SpProblem{0, 5}), 0, 5).cost;
        const double b = solve_exact(permuted, 0, 5).cost;
        CHECK(a == doctest::Approx(b));
    }
}

TEST_CASE("profile count stays within the value-count power bound") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const int sigma = 1 + static_cast<int>(seed % 3);
        Instance inst = gen_random(Family::GeneralConnected, 6, sigma, kind_for(seed), seed)
                            .with_problem(SpProblem{0, 5});
        DpStats stats = solve_exact(inst, 0, 5).stats;
        CHECK(static_cast<double>(stats.n_profiles) <=
              std::pow(static_cast<double>(stats.n_values), sigma) + 1e-6);
    }
}

TEST_CASE("serial and parallel dp agree entry for entry") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = gen_random(Family::GeneralConnected, 7, 3,
                                   MetricKind::RandomMetricClosure, seed)
                            .with_problem(SpProblem{0, 6});
        DpOptions serial_opt, parallel_opt;
        serial_opt.exec = Exec::Serial;
        parallel_opt.exec = Exec::Parallel;
        DpResult a = dp_tables(inst, 0, 6, serial_opt);
        DpResult b = dp_tables(inst, 0, 6, parallel_opt);
        CHECK(a.stats.n_profiles == b.stats.n_profiles);
        CHECK(a.stats.n_values == b.stats.n_values);
        REQUIRE(a.all_tables.size() == b.all_tables.size());
        for (std::size_t i = 0; i < a.all_tables.size(); ++i) {
            REQUIRE(a.all_tables[i].entries.size() == b.all_tables[i].entries.size());
            for (std::size_t k = 0; k < a.all_tables[i].entries.size(); ++k) {
                CHECK(a.all_tables[i].entries[k].profile ==
                      b.all_tables[i].entries[k].profile);
                CHECK(a.all_tables[i].entries[k].path == b.all_tables[i].entries[k].path);
            }
        }
    }
}

TEST_CASE("unreachable targets are infeasible") {
    MetricSpace line = MetricSpace::euclidean(1, {{0.0}, {1.0}, {2.0}, {3.0}});
    Instance inst(Graph(4, {{0, 1}, {2, 3}}), line, {{0}, {1}, {2}, {3}}, MstProblem{});
    CHECK_THROWS_AS(solve_exact(inst, 0, 3), InfeasibleError);
}

TEST_CASE("tie-heavy degenerate tables keep the dp exact") {
    // Distances drawn from {0, 0.5, 1} make profile collisions the norm,
    // the worst case for first-representative deduplication.
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Rng rng(seed * 99991 + 7);
        const int n = 4 + static_cast<int>(seed % 5);
        const int sigma = 1 + static_cast<int>(seed % 3);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) {
            edges.push_back(make_edge(v, rng.uniform_int(0, v - 1)));
        }
        Graph tree(n, edges);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (!tree.has_edge(a, b) && rng.bernoulli(0.5)) {
                    edges.push_back({a, b});
                }
            }
        }
        Graph g(n, std::move(edges));
        const int points = n * sigma;
        std::vector<std::vector<double>> m(points, std::vector<double>(points, 0.0));
        for (int a = 0; a < points; ++a) {
            for (int b = a + 1; b < points; ++b) {
                m[a][b] = m[b][a] = 0.5 * rng.uniform_int(0, 2);
            }
        }
        std::vector<std::vector<int>> unc(n);
        for (int v = 0; v < n; ++v) {
            for (int k = 0; k < sigma; ++k) {
                unc[v].push_back(v * sigma + k);
            }
        }
        Instance inst(g, MetricSpace::explicit_table(std::move(m), MetricFlavor::Gen),
                      std::move(unc), SpProblem{0, n - 1});
        const auto brute = oracle::robust_shortest_path(inst, 0, n - 1);
        CHECK(std::abs(solve_exact(inst, 0, n - 1).cost - brute.cost) <= 1e-9);
    }
}

TEST_CASE("path worst case by folding matches enumeration") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 5 + static_cast<int>(seed % 3);
        Instance inst = gen_random(Family::GeneralConnected, n, 3, kind_for(seed), seed + 31);
        const auto paths = oracle::all_simple_paths(inst.graph(), 0, n - 1);
        for (std::size_t k = 0; k < paths.size(); k += 3) {
            CHECK(path_worst_case_cost(inst, paths[k]) ==
                  doctest::Approx(oracle::path_worst_case(inst, paths[k])));
        }
    }
    Instance inst = line_instance();
    CHECK_THROWS_AS(path_worst_case_cost(inst, {0, 1, 0}), InputError);
    CHECK_THROWS_AS(path_worst_case_cost(inst, {}), InputError);
    CHECK_THROWS_AS(path_worst_case_cost(inst, {0, 2}), InputError);  // not an edge
}
