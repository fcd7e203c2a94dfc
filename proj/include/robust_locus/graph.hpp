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

#include <optional>
#include <unordered_map>
#include <vector>

namespace robust_locus {

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
    int u;
    int v;

    bool operator==(const Edge&) const = default;
};

/// Returns {min, max} of the pair. Throws InputError on a self-loop.
Edge make_edge(int a, int b);

/// Simple undirected graph over vertices [0, n). Immutable after
/// construction; adjacency lists are kept sorted ascending.
class Graph {
public:
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;

    bool has_edge(int a, int b) const;
    /// Index of edge {a,b} in edges(), if present.
    std::optional<int> edge_index(int a, int b) const;

    int max_degree() const;
    bool is_complete() const;

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int n);  // center 0, leaves 1..n-1
    static Graph complete(int n);
    static Graph matching(int n);  // edges {0,1},{2,3},...

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::unordered_map<long long, int> edge_index_;
};

}  // namespace robust_locus
