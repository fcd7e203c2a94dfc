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

#include "robust_locus/sp_fptas.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "robust_locus/errors.hpp"
#include "robust_locus/robust_approx.hpp"

namespace robust_locus {

namespace {

// Smallest integer multiple of `quantum` that is >= d, with entries within
// 1e-9 (in quantum units) of a multiple snapping onto it instead of the
// next one up.
std::int64_t quantize_up(double d, double quantum) {
    const double ratio = d / quantum;
    const double cand = std::ceil(ratio - 1e-9);
    if (cand <= 0.0) {
        return 0;
    }
    // Entries vastly above the upper bound are dead weight anyway; clamp
    // rather than overflow the integer grid.
    if (cand >= 9.0e18) {
        return static_cast<std::int64_t>(9.0e18);
    }
    return static_cast<std::int64_t>(cand);
}

}  // namespace

RoundingContext make_rounding_context(const Instance& instance, double upper_bound, double eps) {
    if (eps <= 0.0) {
        throw InputError("eps must be positive");
    }
    if (upper_bound <= 0.0) {
        throw InputError("the rounding quantum needs a positive upper bound");
    }
    const int n = instance.vertex_count();
    RoundingContext ctx;
    ctx.upper_bound = upper_bound;
    ctx.eps_prime = eps / (2.0 * n);
    ctx.quantum = ctx.eps_prime * upper_bound;
    ctx.good_cap = upper_bound * (1.0 + n * ctx.eps_prime);
    return ctx;
}

SeedResult seed_upper_bound(const Instance& instance, int s, int t, std::uint64_t cap,
                            Exec exec) {
    DmaxSolution dmax_sol =
        solve_via_dmax(instance.with_problem(SpProblem{s, t}), exec);
    SeedResult seed;
    seed.path = std::move(dmax_sol.sequence);
    EdgeSubgraph path_edges = std::move(dmax_sol.edges);
    try {
        seed.upper_bound = worst_case_cost(instance, path_edges, cap, exec).cost;
        seed.exact = true;
    } catch (const CapacityError&) {
        // The surrogate still upper-bounds the optimum within a factor 2.
        seed.upper_bound = cmax_cost(instance, path_edges);
        seed.exact = false;
    }
    return seed;
}

Instance round_distances(const Instance& instance, const RoundingContext& ctx) {
    if (!(ctx.quantum > 0.0)) {
        throw InputError("rounding quantum must be positive");
    }
    const MetricSpace& m = instance.metric();
    const int p_count = m.point_count();
    std::vector<std::vector<double>> matrix(p_count, std::vector<double>(p_count, 0.0));
    for (int p = 0; p < p_count; ++p) {
        for (int q = p + 1; q < p_count; ++q) {
            const double rounded =
                ctx.quantum * static_cast<double>(quantize_up(m.dist(p, q), ctx.quantum));
            matrix[p][q] = rounded;
            matrix[q][p] = rounded;
        }
    }
    return Instance(instance.graph(),
                    MetricSpace::explicit_table(std::move(matrix), MetricFlavor::Gen),
                    instance.uncertainty_sets(), instance.problem());
}

FptasSolution solve_fptas(const Instance& instance, int s, int t, double eps,
                          std::uint64_t cap, Exec exec) {
    if (eps <= 0.0) {
        throw InputError("eps must be positive");
    }
    const int n = instance.vertex_count();
    SeedResult seed = seed_upper_bound(instance, s, t, cap, exec);

    if (seed.upper_bound <= 0.0) {
        // The seed path already has worst-case cost zero, hence is optimal.
        return FptasSolution{std::move(seed.path), 0.0, 0.0, 0.0, DpStats{}};
    }

    const RoundingContext ctx = make_rounding_context(instance, seed.upper_bound, eps);

    // The rounded table is kept in integer quantum units so that profile
    // values, hash keys and the pruning threshold are all exact.
    const MetricSpace& m = instance.metric();
    const int p_count = m.point_count();
    std::vector<std::vector<double>> units(p_count, std::vector<double>(p_count, 0.0));
    for (int p = 0; p < p_count; ++p) {
        for (int q = p + 1; q < p_count; ++q) {
            const auto l = static_cast<double>(quantize_up(m.dist(p, q), ctx.quantum));
            units[p][q] = l;
            units[q][p] = l;
        }
    }
    Instance rounded(instance.graph(),
                     MetricSpace::explicit_table(std::move(units), MetricFlavor::Gen),
                     instance.uncertainty_sets(), instance.problem());

    // good_cap in quantum units: n + ceil(1/eps')
    const double unit_cap =
        static_cast<double>(n) + std::ceil(1.0 / ctx.eps_prime - 1e-9);

    DpOptions options;
    options.prune_cap = unit_cap;
    options.exec = exec;
    SpSolution rounded_sol = solve_exact(rounded, s, t, options);

    FptasSolution out;
    out.cost = path_worst_case_cost(instance, rounded_sol.path);
    out.path = std::move(rounded_sol.path);
    out.upper_bound = seed.upper_bound;
    out.quantum = ctx.quantum;
    out.stats = rounded_sol.stats;
    return out;
}

}  // namespace robust_locus
