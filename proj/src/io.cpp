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

#include "robust_locus/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "robust_locus/errors.hpp"

namespace robust_locus {

namespace {

using nlohmann::json;

std::vector<Edge> edges_from_json(const json& j) {
    std::vector<Edge> edges;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw InputError("edge entries must be [i,j] pairs");
        }
        edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return edges;
}

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) {
        out.push_back({e.u, e.v});
    }
    return out;
}

Problem problem_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "sp") {
        return SpProblem{j.at("s").get<int>(), j.at("t").get<int>()};
    }
    if (type == "mst") {
        return MstProblem{};
    }
    if (type == "tsp") {
        return TspProblem{};
    }
    if (type == "evaluate") {
        return EvaluateProblem{edges_from_json(j.at("edge_set"))};
    }
    throw InputError("unknown problem type: " + type);
}

json problem_to_json(const Problem& problem) {
    if (const auto* sp = std::get_if<SpProblem>(&problem)) {
        return json{{"type", "sp"}, {"s", sp->s}, {"t", sp->t}};
    }
    if (std::holds_alternative<MstProblem>(problem)) {
        return json{{"type", "mst"}};
    }
    if (std::holds_alternative<TspProblem>(problem)) {
        return json{{"type", "tsp"}};
    }
    const auto& ev = std::get<EvaluateProblem>(problem);
    return json{{"type", "evaluate"}, {"edge_set", edges_to_json(ev.edge_set)}};
}

}  // namespace

MetricSpace metric_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "euclidean") {
        const int dim = j.at("dim").get<int>();
        auto points = j.at("points").get<std::vector<std::vector<double>>>();
        return MetricSpace::euclidean(dim, std::move(points));
    }
    if (type == "explicit") {
        auto matrix = j.at("matrix").get<std::vector<std::vector<double>>>();
        if (j.contains("size") &&
            j.at("size").get<int>() != static_cast<int>(matrix.size())) {
            throw InputError("explicit metric size does not match the matrix");
        }
        const std::string flavor = j.at("flavor").get<std::string>();
        if (flavor != "metric" && flavor != "gen") {
            throw InputError("metric flavor must be \"metric\" or \"gen\"");
        }
        return MetricSpace::explicit_table(
            std::move(matrix), flavor == "metric" ? MetricFlavor::Metric : MetricFlavor::Gen);
    }
    if (type == "graph") {
        const int nodes = j.at("nodes").get<int>();
        std::vector<WeightedEdge> edges;
        for (const auto& entry : j.at("weighted_edges")) {
            if (!entry.is_array() || entry.size() != 3) {
                throw InputError("weighted edges must be [a,b,w] triples");
            }
            edges.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<double>()});
        }
        return MetricSpace::graph_induced(nodes, std::move(edges));
    }
    throw InputError("unknown metric type: " + type);
}

json metric_to_json(const MetricSpace& metric) {
    switch (metric.source()) {
        case MetricSource::Euclidean:
            return json{{"type", "euclidean"},
                        {"dim", metric.dimension()},
                        {"points", metric.coordinates()}};
        case MetricSource::GraphInduced: {
            json edges = json::array();
            for (const auto& [a, b, w] : metric.auxiliary_edges()) {
                edges.push_back({a, b, w});
            }
            return json{{"type", "graph"},
                        {"nodes", metric.auxiliary_nodes()},
                        {"weighted_edges", std::move(edges)}};
        }
        case MetricSource::Explicit: {
            const int p = metric.point_count();
            std::vector<std::vector<double>> matrix(p, std::vector<double>(p, 0.0));
            for (int a = 0; a < p; ++a) {
                for (int b = 0; b < p; ++b) {
                    matrix[a][b] = metric.dist(a, b);
                }
            }
            return json{{"type", "explicit"},
                        {"size", p},
                        {"matrix", std::move(matrix)},
                        {"flavor", metric.flavor() == MetricFlavor::Metric ? "metric" : "gen"}};
        }
    }
    throw InputError("unknown metric source");
}

Instance instance_from_json(const json& j) {
    MetricSpace metric = metric_from_json(j.at("metric"));
    const int n = j.at("n").get<int>();
    auto uncertainty = j.at("uncertainty").get<std::vector<std::vector<int>>>();
    Graph graph(n, edges_from_json(j.at("edges")));
    Problem problem = problem_from_json(j.at("problem"));
    return Instance(std::move(graph), std::move(metric), std::move(uncertainty),
                    std::move(problem));
}

json instance_to_json(const Instance& instance) {
    return json{{"metric", metric_to_json(instance.metric())},
                {"n", instance.vertex_count()},
                {"uncertainty", instance.uncertainty_sets()},
                {"edges", edges_to_json(instance.graph().edges())},
                {"problem", problem_to_json(instance.problem())}};
}

Instance parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return instance_from_json(j);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad instance document: ") + e.what());
    }
}

std::string instance_to_text(const Instance& instance) {
    return instance_to_json(instance).dump();
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_text(buffer.str());
}

void save_instance_file(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << instance_to_text(instance) << "\n";
}

}  // namespace robust_locus
