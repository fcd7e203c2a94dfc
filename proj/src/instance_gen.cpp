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

#include "robust_locus/instance_gen.hpp"

#include <string>
#include <utility>
#include <vector>

#include "robust_locus/errors.hpp"
#include "robust_locus/rng.hpp"

namespace robust_locus {

namespace {

// Two points on a line at 0 and 1; the shared universe of the tight path,
// cycle, triangle and clique families.
MetricSpace unit_line_metric() {
    return MetricSpace::euclidean(1, {{0.0}, {1.0}});
}

Instance evaluate_all(Graph graph, MetricSpace metric,
                      std::vector<std::vector<int>> uncertainty) {
    EvaluateProblem problem{graph.edges()};
    return Instance(std::move(graph), std::move(metric), std::move(uncertainty),
                    std::move(problem));
}

}  // namespace

Instance gen_tight_path(int n) {
    if (n < 3) {
        throw InputError("tight path needs n >= 3");
    }
    std::vector<std::vector<int>> uncertainty(n, std::vector<int>{1});
    uncertainty[0] = {0};
    uncertainty[1] = {0, 1};
    return evaluate_all(Graph::path(n), unit_line_metric(), std::move(uncertainty));
}

Instance gen_tight_cycle(int n) {
    if (n < 4) {
        throw InputError("tight cycle needs n >= 4; the 3-cycle family is separate");
    }
    std::vector<std::vector<int>> uncertainty(n, std::vector<int>{0});
    uncertainty[0] = {0};
    uncertainty[1] = {0, 1};
    uncertainty[2] = {1};
    uncertainty[3] = {0, 1};
    return evaluate_all(Graph::cycle(n), unit_line_metric(), std::move(uncertainty));
}

Instance gen_tight_triangle() {
    std::vector<std::vector<int>> uncertainty = {{0}, {0, 1}, {1}};
    return evaluate_all(Graph::cycle(3), unit_line_metric(), std::move(uncertainty));
}

Instance gen_tight_clique(int k) {
    if (k < 2) {
        throw InputError("tight clique needs k >= 2");
    }
    std::vector<std::vector<int>> uncertainty(k, std::vector<int>{0, 1});
    return evaluate_all(Graph::complete(k), unit_line_metric(), std::move(uncertainty));
}

Instance gen_tight_star(int n) {
    if (n < 3) {
        throw InputError("tight star needs n >= 3");
    }
    // Point ids: center candidates c_1..c_{n-1} are 0..n-2, leaf positions
    // p_1..p_{n-1} are n-1..2n-3. Center candidate c_i is at distance 1
    // from "its" leaf p_i and 1/3 from every other leaf; everything else is
    // 2/3 apart.
    const int leaves = n - 1;
    const int points = 2 * leaves;
    std::vector<std::vector<double>> matrix(points, std::vector<double>(points, 0.0));
    const double third = 1.0 / 3.0;
    const double two_thirds = 2.0 / 3.0;
    for (int a = 0; a < points; ++a) {
        for (int b = 0; b < points; ++b) {
            if (a == b) {
                continue;
            }
            const bool a_center = a < leaves;
            const bool b_center = b < leaves;
            if (a_center == b_center) {
                matrix[a][b] = two_thirds;
            } else {
                const int center = a_center ? a : b;
                const int leaf = (a_center ? b : a) - leaves;
                matrix[a][b] = center == leaf ? 1.0 : third;
            }
        }
    }
    std::vector<std::vector<int>> uncertainty(n);
    for (int c = 0; c < leaves; ++c) {
        uncertainty[0].push_back(c);
    }
    for (int i = 1; i < n; ++i) {
        uncertainty[i] = {leaves + i - 1};
    }
    return evaluate_all(Graph::star(n),
                        MetricSpace::explicit_table(std::move(matrix), MetricFlavor::Metric),
                        std::move(uncertainty));
}

GmCounterexample gen_gm_counterexample(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw InputError("eps must lie strictly between 0 and 1");
    }
    // Point ids: 0 -> eps, 1 -> 0, 2 -> -1, 3 -> 1 on a line.
    MetricSpace metric = MetricSpace::euclidean(1, {{eps}, {0.0}, {-1.0}, {1.0}});
    std::vector<std::vector<int>> uncertainty = {{0}, {1}, {2, 1, 3}};
    Instance instance = evaluate_all(Graph::path(3), std::move(metric), std::move(uncertainty));
    GmCounterexample out{std::move(instance), EdgeSubgraph{{{0, 1}}}, EdgeSubgraph{{{1, 2}}},
                         eps};
    return out;
}

const char* family_name(Family family) {
    switch (family) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Tree: return "tree";
        case Family::Star: return "star";
        case Family::Clique: return "clique";
        case Family::Matching: return "matching";
        case Family::GeneralConnected: return "general-connected";
    }
    throw InputError("unknown family");
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::Path, Family::Cycle, Family::Tree, Family::Star, Family::Clique,
                     Family::Matching, Family::GeneralConnected}) {
        if (name == family_name(f)) {
            return f;
        }
    }
    throw InputError("unknown family: " + name);
}

const char* metric_kind_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Euclidean2d: return "euclidean2d";
        case MetricKind::GraphInduced: return "graph-induced";
        case MetricKind::RandomMetricClosure: return "random-metric-closure";
        case MetricKind::RandomGenTable: return "random-gen";
    }
    throw InputError("unknown metric kind");
}

MetricKind parse_metric_kind(const std::string& name) {
    for (MetricKind k : {MetricKind::Euclidean2d, MetricKind::GraphInduced,
                         MetricKind::RandomMetricClosure, MetricKind::RandomGenTable}) {
        if (name == metric_kind_name(k)) {
            return k;
        }
    }
    throw InputError("unknown metric kind: " + name);
}

int family_min_vertices(Family family) {
    switch (family) {
        case Family::Cycle: return 3;
        case Family::Star: return 3;
        default: return 2;
    }
}

namespace {

Graph random_family_graph(Family family, int n, Rng& rng) {
    switch (family) {
        case Family::Path: return Graph::path(n);
        case Family::Cycle: return Graph::cycle(n);
        case Family::Star: return Graph::star(n);
        case Family::Clique: return Graph::complete(n);
        case Family::Matching: return Graph::matching(n);
        case Family::Tree: {
            std::vector<Edge> edges;
            for (int v = 1; v < n; ++v) {
                edges.push_back(make_edge(v, rng.uniform_int(0, v - 1)));
            }
            return Graph(n, edges);
        }
        case Family::GeneralConnected: {
            std::vector<Edge> edges;
            for (int v = 1; v < n; ++v) {
                edges.push_back(make_edge(v, rng.uniform_int(0, v - 1)));
            }
            Graph tree(n, edges);
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    if (!tree.has_edge(a, b) && rng.bernoulli(0.3)) {
                        edges.push_back({a, b});
                    }
                }
            }
            return Graph(n, edges);
        }
    }
    throw InputError("unknown family");
}

MetricSpace random_metric(MetricKind kind, int points, Rng& rng) {
    switch (kind) {
        case MetricKind::Euclidean2d: {
            std::vector<std::vector<double>> coords(points);
            for (auto& c : coords) {
                c = {rng.uniform(), rng.uniform()};
            }
            return MetricSpace::euclidean(2, std::move(coords));
        }
        case MetricKind::GraphInduced: {
            std::vector<WeightedEdge> edges;
            for (int v = 1; v < points; ++v) {
                edges.push_back({rng.uniform_int(0, v - 1), v, rng.uniform(0.1, 1.0)});
            }
            for (int a = 0; a < points; ++a) {
                for (int b = a + 1; b < points; ++b) {
                    if (rng.bernoulli(0.3)) {
                        edges.push_back({a, b, rng.uniform(0.1, 1.0)});
                    }
                }
            }
            return MetricSpace::graph_induced(points, std::move(edges));
        }
        case MetricKind::RandomMetricClosure: {
            // Dense random weighted graph; its shortest-path closure is a
            // metric but usually fails the four-point inequality, which is
            // what the looser general bounds need for exercise.
            std::vector<WeightedEdge> edges;
            for (int v = 1; v < points; ++v) {
                edges.push_back({rng.uniform_int(0, v - 1), v, rng.uniform(0.5, 1.5)});
            }
            for (int a = 0; a < points; ++a) {
                for (int b = a + 1; b < points; ++b) {
                    if (rng.bernoulli(0.5)) {
                        edges.push_back({a, b, rng.uniform(0.5, 1.5)});
                    }
                }
            }
            return MetricSpace::graph_induced(points, std::move(edges));
        }
        case MetricKind::RandomGenTable: {
            std::vector<std::vector<double>> matrix(points, std::vector<double>(points, 0.0));
            for (int a = 0; a < points; ++a) {
                for (int b = a + 1; b < points; ++b) {
                    const double w = rng.uniform(0.2, 2.0);
                    matrix[a][b] = w;
                    matrix[b][a] = w;
                }
            }
            return MetricSpace::explicit_table(std::move(matrix), MetricFlavor::Gen);
        }
    }
    throw InputError("unknown metric kind");
}

}  // namespace

Instance gen_random(Family family, int n, int sigma, MetricKind kind, std::uint64_t seed) {
    if (n < family_min_vertices(family)) {
        throw InputError(std::string("family ") + family_name(family) + " needs at least " +
                         std::to_string(family_min_vertices(family)) + " vertices");
    }
    if (sigma < 1) {
        throw InputError("sigma must be at least 1");
    }
    // Fold every parameter into the stream so distinct cells never share it.
    std::uint64_t mix = seed;
    mix = mix * 6364136223846793005ULL + static_cast<std::uint64_t>(family) * 1000003ULL +
          static_cast<std::uint64_t>(kind) * 10007ULL + static_cast<std::uint64_t>(n) * 101ULL +
          static_cast<std::uint64_t>(sigma);
    Rng rng(mix);

    Graph graph = random_family_graph(family, n, rng);
    MetricSpace metric = random_metric(kind, n * sigma, rng);
    std::vector<std::vector<int>> uncertainty(n);
    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < sigma; ++k) {
            uncertainty[v].push_back(v * sigma + k);
        }
    }
    return evaluate_all(std::move(graph), std::move(metric), std::move(uncertainty));
}

FamilyTag campaign_family_tag(Family family, MetricKind kind) {
    const bool four_point = kind == MetricKind::Euclidean2d;
    switch (family) {
        case Family::Path: return FamilyTag::Path;
        case Family::Cycle: return FamilyTag::Cycle;
        case Family::Clique: return FamilyTag::Clique;
        case Family::Matching: return FamilyTag::Matching;
        case Family::Tree: return four_point ? FamilyTag::Ptolemaic : FamilyTag::Tree;
        case Family::Star: return four_point ? FamilyTag::StarPtolemaic : FamilyTag::Star;
        case Family::GeneralConnected:
            return four_point ? FamilyTag::Ptolemaic : FamilyTag::General;
    }
    throw InputError("unknown family");
}

}  // namespace robust_locus
