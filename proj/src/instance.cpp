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

#include "robust_locus/instance.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "robust_locus/errors.hpp"

namespace robust_locus {

namespace {

void validate_problem(const Graph& graph, const Problem& problem) {
    const int n = graph.vertex_count();
    if (const auto* sp = std::get_if<SpProblem>(&problem)) {
        if (sp->s < 0 || sp->s >= n || sp->t < 0 || sp->t >= n) {
            throw InputError("sp endpoints out of range");
        }
        if (sp->s == sp->t) {
            throw InputError("sp requires distinct endpoints");
        }
    } else if (const auto* ev = std::get_if<EvaluateProblem>(&problem)) {
        std::unordered_set<long long> seen;
        for (const Edge& raw : ev->edge_set) {
            Edge e = make_edge(raw.u, raw.v);
            if (!graph.has_edge(e.u, e.v)) {
                throw InputError("evaluate edge {" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + "} not in the host graph");
            }
            if (!seen.insert(static_cast<long long>(e.u) * n + e.v).second) {
                throw InputError("evaluate edge {" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + "} listed twice");
            }
        }
    }
}

}  // namespace

Instance::Instance(Graph graph, MetricSpace metric,
                   std::vector<std::vector<int>> positions_per_vertex, Problem problem)
    : graph_(std::move(graph)), metric_(std::move(metric)), problem_(std::move(problem)) {
    const int n = graph_.vertex_count();
    if (static_cast<int>(positions_per_vertex.size()) != n) {
        throw InputError("expected exactly one uncertainty set per vertex");
    }
    uncertainty_.reserve(n);
    for (int v = 0; v < n; ++v) {
        UncertaintySet uset;
        uset.vertex = v;
        std::unordered_set<int> seen;
        for (int pid : positions_per_vertex[v]) {
            if (pid < 0 || pid >= metric_.point_count()) {
                throw InputError("position id " + std::to_string(pid) + " of vertex " +
                                 std::to_string(v) + " out of range");
            }
            if (seen.insert(pid).second) {
                uset.positions.push_back(pid);
            }
        }
        if (uset.positions.empty()) {
            throw InputError("empty uncertainty set for vertex " + std::to_string(v));
        }
        uncertainty_.push_back(std::move(uset));
    }
    validate_problem(graph_, problem_);
}

const UncertaintySet& Instance::uncertainty(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    return uncertainty_[v];
}

int Instance::max_set_size() const {
    int sigma = 0;
    for (const auto& uset : uncertainty_) {
        sigma = std::max(sigma, uset.size());
    }
    return sigma;
}

bool Instance::all_singletons() const {
    return std::all_of(uncertainty_.begin(), uncertainty_.end(),
                       [](const UncertaintySet& u) { return u.size() == 1; });
}

Instance Instance::with_problem(Problem problem) const {
    Instance copy = *this;
    validate_problem(copy.graph_, problem);
    copy.problem_ = std::move(problem);
    return copy;
}

std::vector<std::vector<int>> Instance::uncertainty_sets() const {
    std::vector<std::vector<int>> out;
    out.reserve(uncertainty_.size());
    for (const auto& uset : uncertainty_) {
        out.push_back(uset.positions);
    }
    return out;
}

double dmax(const Instance& instance, int i, int j) {
    if (i == j) {
        throw InputError("worst-case distance requires distinct vertices");
    }
    const auto& pi = instance.positions(i);  // validates the ids
    const auto& pj = instance.positions(j);
    const MetricSpace& m = instance.metric();
    double best = 0.0;
    for (int a : pi) {
        for (int b : pj) {
            best = std::max(best, m.dist(a, b));
        }
    }
    return best;
}

MetricSpace dmax_metric(const Instance& instance, Exec exec) {
    const int n = instance.vertex_count();
    std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));

    // Pairs are independent; flatten the upper triangle for the parallel loop.
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pairs.push_back({i, j});
        }
    }

    const auto fill = [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        const double d = dmax(instance, i, j);
        table[i][j] = d;
        table[j][i] = d;
    };

    if (exec == Exec::Serial) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            fill(k);
        }
    } else {
#pragma omp parallel for schedule(static)
        for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) {
            fill(static_cast<std::size_t>(k));
        }
    }

    return MetricSpace::explicit_table(std::move(table), MetricFlavor::Metric);
}

DiameterResult diameter(const UncertaintySet& uset, const MetricSpace& metric) {
    if (uset.positions.empty()) {
        throw InputError("diameter of an empty set");
    }
    DiameterResult best{0.0, uset.positions.front(), uset.positions.front()};
    for (std::size_t a = 0; a < uset.positions.size(); ++a) {
        for (std::size_t b = a + 1; b < uset.positions.size(); ++b) {
            const double d = metric.dist(uset.positions[a], uset.positions[b]);
            if (d > best.value) {
                best = {d, uset.positions[a], uset.positions[b]};
            }
        }
    }
    return best;
}

}  // namespace robust_locus
