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

#include "robust_locus/det_solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "robust_locus/errors.hpp"
#include "robust_locus/metric.hpp"

namespace robust_locus {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_view(const WeightedGraphView& view) {
    if (view.graph == nullptr) {
        throw InputError("weighted view has no graph");
    }
    if (view.weight.size() != view.graph->edges().size()) {
        throw InputError("weighted view needs one weight per edge");
    }
    for (double w : view.weight) {
        if (!(w >= 0.0)) {
            throw InputError("edge weights must be nonnegative");
        }
    }
}

// Single-source distances, ignoring excluded vertices entirely.
std::vector<double> dijkstra(const WeightedGraphView& view, int src,
                             const std::vector<char>& excluded) {
    const Graph& g = *view.graph;
    std::vector<double> dist(g.vertex_count(), kInf);
    if (excluded[src]) {
        return dist;
    }
    dist[src] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.push({0.0, src});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) {
            continue;
        }
        for (int w : g.neighbors(v)) {
            if (excluded[w]) {
                continue;
            }
            const double cand = d + view.weight_of(v, w);
            if (cand < dist[w]) {
                dist[w] = cand;
                heap.push({cand, w});
            }
        }
    }
    return dist;
}

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[b] = a;
        return true;
    }
};

}  // namespace

double WeightedGraphView::weight_of(int a, int b) const {
    auto idx = graph->edge_index(a, b);
    if (!idx) {
        throw InputError("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    return weight[*idx];
}

EdgeSubgraph PathResult::edges() const {
    EdgeSubgraph sub;
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
        sub.edges.push_back(make_edge(vertices[k], vertices[k + 1]));
    }
    return sub;
}

EdgeSubgraph TourResult::edges() const {
    EdgeSubgraph sub;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        sub.edges.push_back(make_edge(order[k], order[k + 1]));
    }
    if (order.size() > 2) {
        sub.edges.push_back(make_edge(order.back(), order.front()));
    }
    return sub;
}

PathResult shortest_path(const WeightedGraphView& view, int s, int t) {
    validate_view(view);
    const Graph& g = *view.graph;
    const int n = g.vertex_count();
    if (s < 0 || s >= n || t < 0 || t >= n || s == t) {
        throw InputError("shortest path needs distinct valid endpoints");
    }

    // Greedy construction of the lexicographically smallest optimal path:
    // at every step, distances from t are recomputed in the graph without
    // the vertices used so far, and the smallest neighbor on a shortest
    // completion is appended. Recomputing keeps the walk simple even in the
    // presence of zero-weight edges.
    std::vector<char> used(n, 0);
    std::vector<int> path{s};
    used[s] = 1;
    int cur = s;
    double weight_sum = 0.0;

    while (cur != t) {
        used[cur] = 1;
        const std::vector<double> dist = dijkstra(view, t, used);
        int best_j = -1;
        double best_completion = kInf;
        for (int j : g.neighbors(cur)) {
            if (used[j] || dist[j] == kInf) {
                continue;
            }
            const double completion = view.weight_of(cur, j) + dist[j];
            if (completion < best_completion - kLengthTolerance) {
                best_completion = completion;
                best_j = j;
            }
        }
        if (best_j == -1) {
            throw InfeasibleError("no path from " + std::to_string(s) + " to " +
                                  std::to_string(t));
        }
        weight_sum += view.weight_of(cur, best_j);
        path.push_back(best_j);
        used[best_j] = 1;
        cur = best_j;
    }
    return PathResult{std::move(path), weight_sum};
}

MstResult minimum_spanning_tree(const WeightedGraphView& view) {
    validate_view(view);
    const Graph& g = *view.graph;
    const int n = g.vertex_count();

    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return view.weight[a] < view.weight[b]; });

    DisjointSets sets(n);
    MstResult result;
    result.weight = 0.0;
    for (int idx : order) {
        const Edge& e = g.edges()[idx];
        if (sets.unite(e.u, e.v)) {
            result.tree.edges.push_back(e);
            result.weight += view.weight[idx];
        }
    }
    if (static_cast<int>(result.tree.edges.size()) != std::max(0, n - 1)) {
        throw InfeasibleError("graph is disconnected; no spanning tree");
    }
    std::sort(result.tree.edges.begin(), result.tree.edges.end(),
              [](const Edge& a, const Edge& b) {
                  return a.u != b.u ? a.u < b.u : a.v < b.v;
              });
    return result;
}

TourResult tsp_double_tree(const WeightedGraphView& view) {
    validate_view(view);
    const Graph& g = *view.graph;
    const int n = g.vertex_count();
    if (n < 3) {
        throw InputError("tour construction needs at least 3 vertices");
    }
    if (!g.is_complete()) {
        throw InputError("tour construction needs a complete graph");
    }

    const MstResult mst = minimum_spanning_tree(view);
    std::vector<std::vector<int>> children(n);
    for (const Edge& e : mst.tree.edges) {
        children[e.u].push_back(e.v);
        children[e.v].push_back(e.u);
    }
    for (auto& c : children) {
        std::sort(c.begin(), c.end());
    }

    // Preorder walk of the tree rooted at vertex 0, children ascending.
    TourResult tour;
    tour.order.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (seen[v]) {
            continue;
        }
        seen[v] = 1;
        tour.order.push_back(v);
        for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) {
            if (!seen[*it]) {
                stack.push_back(*it);
            }
        }
    }

    tour.weight = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
        tour.weight += view.weight_of(tour.order[k], tour.order[k + 1]);
    }
    tour.weight += view.weight_of(tour.order.back(), tour.order.front());
    return tour;
}

}  // namespace robust_locus
