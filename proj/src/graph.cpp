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

#include "robust_locus/graph.hpp"

#include <algorithm>
#include <string>

#include "robust_locus/errors.hpp"

namespace robust_locus {

Edge make_edge(int a, int b) {
    if (a == b) {
        throw InputError("self-loop {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) {
        throw InputError("negative vertex count");
    }
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        Edge e = make_edge(raw.u, raw.v);
        if (e.u < 0 || e.v >= n_) {
            throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} out of range for n=" + std::to_string(n_));
        }
        const long long key = static_cast<long long>(e.u) * n_ + e.v;
        if (!edge_index_.emplace(key, static_cast<int>(edges_.size())).second) {
            throw InputError("duplicate edge {" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + "}");
        }
        edges_.push_back(e);
    }
    adjacency_.assign(n_, {});
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    return adjacency_[v];
}

bool Graph::has_edge(int a, int b) const {
    return edge_index(a, b).has_value();
}

std::optional<int> Graph::edge_index(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) {
        return std::nullopt;
    }
    Edge e = make_edge(a, b);
    auto it = edge_index_.find(static_cast<long long>(e.u) * n_ + e.v);
    if (it == edge_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adjacency_) {
        best = std::max(best, static_cast<int>(nbrs.size()));
    }
    return best;
}

bool Graph::is_complete() const {
    return static_cast<long long>(edges_.size()) * 2 ==
           static_cast<long long>(n_) * (n_ - 1);
}

Graph Graph::path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, edges);
}

Graph Graph::cycle(int n) {
    if (n < 3) {
        throw InputError("cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    edges.push_back({0, n - 1});
    return Graph(n, edges);
}

Graph Graph::star(int n) {
    if (n < 2) {
        throw InputError("star needs at least 2 vertices");
    }
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        edges.push_back({0, i});
    }
    return Graph(n, edges);
}

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
        }
    }
    return Graph(n, edges);
}

Graph Graph::matching(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; i += 2) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, edges);
}

}  // namespace robust_locus
