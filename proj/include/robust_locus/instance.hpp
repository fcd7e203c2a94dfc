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

#pragma once

#include <variant>
#include <vector>

#include "robust_locus/graph.hpp"
#include "robust_locus/metric.hpp"

namespace robust_locus {

/// Finite set of candidate positions (point ids) for one vertex.
struct UncertaintySet {
    int vertex;
    std::vector<int> positions;  // deduplicated, nonempty

    int size() const { return static_cast<int>(positions.size()); }
};

/// One simultaneous choice of a position for every vertex; point[i] is the
/// chosen point id and must belong to vertex i's uncertainty set.
struct Scenario {
    std::vector<int> point;

    bool operator==(const Scenario&) const = default;
};

struct SpProblem {
    int s;
    int t;
    bool operator==(const SpProblem&) const = default;
};
struct MstProblem {
    bool operator==(const MstProblem&) const = default;
};
struct TspProblem {
    bool operator==(const TspProblem&) const = default;
};
struct EvaluateProblem {
    std::vector<Edge> edge_set;
    bool operator==(const EvaluateProblem&) const = default;
};

using Problem = std::variant<SpProblem, MstProblem, TspProblem, EvaluateProblem>;

/// A graph whose vertices have uncertain locations in a metric space,
/// together with the problem to solve on it. Immutable after construction.
class Instance {
public:
    Instance(Graph graph, MetricSpace metric,
             std::vector<std::vector<int>> positions_per_vertex, Problem problem);

    const Graph& graph() const { return graph_; }
    const MetricSpace& metric() const { return metric_; }
    const Problem& problem() const { return problem_; }

    int vertex_count() const { return graph_.vertex_count(); }
    const UncertaintySet& uncertainty(int v) const;
    const std::vector<int>& positions(int v) const { return uncertainty(v).positions; }
    int set_size(int v) const { return uncertainty(v).size(); }
    /// sigma = max_i |U_i|
    int max_set_size() const;
    bool all_singletons() const;

    /// Same instance with a different problem tag.
    Instance with_problem(Problem problem) const;

    bool operator==(const Instance& other) const {
        return graph_ == other.graph_ && metric_ == other.metric_ &&
               uncertainty_sets() == other.uncertainty_sets() && problem_ == other.problem_;
    }

    std::vector<std::vector<int>> uncertainty_sets() const;

private:
    Graph graph_;
    MetricSpace metric_;
    std::vector<UncertaintySet> uncertainty_;
    Problem problem_;
};

/// Worst-case distance between vertices i and j: the maximum of the base
/// distance over all pairs of candidate positions.
double dmax(const Instance& instance, int i, int j);

/// The metric space on the vertex set whose distances are the worst-case
/// pairwise distances. This table satisfies the triangle inequality
/// whenever the base table does, so it is constructed with flavor Metric.
MetricSpace dmax_metric(const Instance& instance, Exec exec = Exec::Parallel);

struct DiameterResult {
    double value;
    int p;
    int q;
};

/// Largest pairwise distance within the set and one attaining pair
/// (singletons give (0, p, p)).
DiameterResult diameter(const UncertaintySet& uset, const MetricSpace& metric);

}  // namespace robust_locus
