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

#include "robust_locus/cost_oracle.hpp"
#include "robust_locus/graph.hpp"

namespace robust_locus {

/// A graph together with one nonnegative weight per edge (indexed like
/// Graph::edges()).
struct WeightedGraphView {
    const Graph* graph;
    std::vector<double> weight;

    double weight_of(int a, int b) const;
};

struct PathResult {
    std::vector<int> vertices;  // s first, t last
    double weight;

    EdgeSubgraph edges() const;
};

/// Exact minimum-weight simple s-t path. Among equal-weight optima returns
/// the lexicographically smallest vertex sequence.
PathResult shortest_path(const WeightedGraphView& view, int s, int t);

struct MstResult {
    EdgeSubgraph tree;
    double weight;
};

/// Exact minimum spanning tree (Kruskal); weight ties broken by edge index.
MstResult minimum_spanning_tree(const WeightedGraphView& view);

struct TourResult {
    std::vector<int> order;  // visiting order; implicitly closes back to order[0]
    double weight;

    EdgeSubgraph edges() const;
};

/// 2-approximate tour on a complete graph with triangle-inequality weights:
/// preorder shortcut of the minimum spanning tree rooted at vertex 0.
TourResult tsp_double_tree(const WeightedGraphView& view);

}  // namespace robust_locus
