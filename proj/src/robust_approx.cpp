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

#include "robust_locus/robust_approx.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <variant>

#include "robust_locus/errors.hpp"

namespace robust_locus {

namespace {

std::vector<double> edge_weights_from(const Instance& instance,
                                      const std::vector<Edge>& edges, bool use_dmax,
                                      const Scenario* u_star, Exec exec) {
    std::vector<double> weights(edges.size(), 0.0);
    const bool parallel = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (parallel)
    for (long long k = 0; k < static_cast<long long>(edges.size()); ++k) {
        const Edge& e = edges[k];
        weights[k] = use_dmax ? dmax(instance, e.u, e.v)
                              : instance.metric().dist(u_star->point[e.u], u_star->point[e.v]);
    }
    return weights;
}

DmaxSolution solve_on_view(const Instance& instance, const WeightedGraphView& view) {
    if (const auto* sp = std::get_if<SpProblem>(&instance.problem())) {
        PathResult path = shortest_path(view, sp->s, sp->t);
        EdgeSubgraph edges = path.edges();
        return DmaxSolution{std::move(edges), path.weight, std::move(path.vertices), 1.0,
                            FamilyTag::Path};
    }
    if (std::holds_alternative<MstProblem>(instance.problem())) {
        MstResult mst = minimum_spanning_tree(view);
        return DmaxSolution{std::move(mst.tree), mst.weight, {}, 1.0, FamilyTag::Tree};
    }
    if (std::holds_alternative<TspProblem>(instance.problem())) {
        TourResult tour = tsp_double_tree(view);
        EdgeSubgraph edges = tour.edges();
        return DmaxSolution{std::move(edges), tour.weight, std::move(tour.order), 2.0,
                            FamilyTag::Cycle};
    }
    throw InputError("evaluate instances carry a fixed subgraph; nothing to solve");
}

}  // namespace

DmaxSolution solve_via_dmax(const Instance& instance, Exec exec) {
    std::vector<double> weights =
        edge_weights_from(instance, instance.graph().edges(), true, nullptr, exec);
    WeightedGraphView view{&instance.graph(), std::move(weights)};
    return solve_on_view(instance, view);
}

double certified_bound(const Instance& instance, std::optional<FamilyTag> family) {
    double rho1;
    FamilyTag output_family;
    if (std::holds_alternative<SpProblem>(instance.problem())) {
        rho1 = 1.0;
        output_family = FamilyTag::Path;
    } else if (std::holds_alternative<MstProblem>(instance.problem())) {
        rho1 = 1.0;
        output_family = FamilyTag::Tree;
    } else if (std::holds_alternative<TspProblem>(instance.problem())) {
        rho1 = 2.0;
        output_family = FamilyTag::Cycle;
    } else {
        throw InputError("no certified bound for evaluate instances");
    }
    return rho1 * family_bound(family.value_or(output_family));
}

Scenario geometric_median_positions(const Instance& instance) {
    const MetricSpace& metric = instance.metric();
    Scenario scenario;
    scenario.point.reserve(instance.vertex_count());
    for (int v = 0; v < instance.vertex_count(); ++v) {
        const auto& positions = instance.positions(v);
        int best = positions[0];
        double best_sum = -1.0;
        for (int candidate : positions) {
            double sum = 0.0;
            for (int other : positions) {
                sum += metric.dist(candidate, other);
            }
            if (best_sum < 0.0 || sum < best_sum) {
                best_sum = sum;
                best = candidate;
            }
        }
        scenario.point.push_back(best);
    }
    return scenario;
}

EdgeSubgraph solve_via_representative(const Instance& instance, const Scenario& u_star) {
    const int n = instance.vertex_count();
    if (static_cast<int>(u_star.point.size()) != n) {
        throw InputError("representative scenario must cover every vertex");
    }
    for (int v = 0; v < n; ++v) {
        const auto& allowed = instance.positions(v);
        if (std::find(allowed.begin(), allowed.end(), u_star.point[v]) == allowed.end()) {
            throw InputError("representative position of vertex " + std::to_string(v) +
                             " is not in its uncertainty set");
        }
    }
    std::vector<double> weights =
        edge_weights_from(instance, instance.graph().edges(), false, &u_star, Exec::Serial);
    WeightedGraphView view{&instance.graph(), std::move(weights)};
    return solve_on_view(instance, view).edges;
}

}  // namespace robust_locus
