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

#include "robust_locus/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "robust_locus/rng.hpp"

namespace robust_locus {

namespace {

constexpr int kFullTriangleCheckLimit = 300;
constexpr std::uint64_t kSampledTriangleChecks = 1'000'000;

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

}  // namespace

MetricSpace MetricSpace::euclidean(int dim, std::vector<std::vector<double>> points) {
    if (dim <= 0) {
        throw InputError("euclidean metric needs a positive dimension");
    }
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim) {
            throw InputError("coordinate row does not match dimension " + std::to_string(dim));
        }
    }
    MetricSpace m;
    m.points_ = static_cast<int>(points.size());
    m.flavor_ = MetricFlavor::Metric;
    m.source_ = MetricSource::Euclidean;
    m.dim_ = dim;
    m.table_.assign(static_cast<std::size_t>(m.points_) * m.points_, 0.0);
    for (int p = 0; p < m.points_; ++p) {
        for (int q = p + 1; q < m.points_; ++q) {
            const double d = euclidean_distance(points[p], points[q]);
            m.table_[static_cast<std::size_t>(p) * m.points_ + q] = d;
            m.table_[static_cast<std::size_t>(q) * m.points_ + p] = d;
        }
    }
    m.coordinates_ = std::move(points);
    return m;
}

MetricSpace MetricSpace::explicit_table(std::vector<std::vector<double>> matrix,
                                        MetricFlavor flavor) {
    const int p_count = static_cast<int>(matrix.size());
    MetricSpace m;
    m.points_ = p_count;
    m.flavor_ = flavor;
    m.source_ = MetricSource::Explicit;
    m.table_.assign(static_cast<std::size_t>(p_count) * p_count, 0.0);
    for (int p = 0; p < p_count; ++p) {
        if (static_cast<int>(matrix[p].size()) != p_count) {
            throw InputError("distance matrix is not square");
        }
        for (int q = 0; q < p_count; ++q) {
            const double a = matrix[p][q];
            const double b = matrix[q][p];
            if (std::abs(a - b) > kLengthTolerance) {
                throw InputError("distance matrix is not symmetric at (" + std::to_string(p) +
                                 "," + std::to_string(q) + ")");
            }
            if (a < -kLengthTolerance) {
                throw InputError("negative distance at (" + std::to_string(p) + "," +
                                 std::to_string(q) + ")");
            }
            double v = 0.5 * (a + b);
            if (p == q) {
                if (std::abs(v) > kLengthTolerance) {
                    throw InputError("nonzero diagonal at " + std::to_string(p));
                }
                v = 0.0;
            }
            m.table_[static_cast<std::size_t>(p) * p_count + q] = std::max(v, 0.0);
        }
    }
    m.validate_table();
    return m;
}

MetricSpace MetricSpace::graph_induced(int nodes, std::vector<WeightedEdge> weighted_edges) {
    if (nodes <= 0) {
        throw InputError("graph metric needs at least one node");
    }
    std::vector<std::vector<std::pair<int, double>>> adjacency(nodes);
    for (const auto& [a, b, w] : weighted_edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) {
            throw InputError("bad auxiliary edge {" + std::to_string(a) + "," +
                             std::to_string(b) + "}");
        }
        if (w < 0.0) {
            throw InputError("negative auxiliary edge weight");
        }
        adjacency[a].push_back({b, w});
        adjacency[b].push_back({a, w});
    }

    const double inf = std::numeric_limits<double>::infinity();
    MetricSpace m;
    m.points_ = nodes;
    m.flavor_ = MetricFlavor::Metric;
    m.source_ = MetricSource::GraphInduced;
    m.aux_edges_ = std::move(weighted_edges);
    m.aux_nodes_ = nodes;
    m.table_.assign(static_cast<std::size_t>(nodes) * nodes, 0.0);

    std::vector<double> dist(nodes);
    using Item = std::pair<double, int>;
    for (int src = 0; src < nodes; ++src) {
        std::fill(dist.begin(), dist.end(), inf);
        dist[src] = 0.0;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        heap.push({0.0, src});
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d > dist[v]) {
                continue;
            }
            for (const auto& [w, len] : adjacency[v]) {
                const double cand = d + len;
                if (cand < dist[w]) {
                    dist[w] = cand;
                    heap.push({cand, w});
                }
            }
        }
        for (int q = 0; q < nodes; ++q) {
            if (!std::isfinite(dist[q])) {
                throw InputError("auxiliary graph is disconnected; node " +
                                 std::to_string(q) + " unreachable from " + std::to_string(src));
            }
            m.table_[static_cast<std::size_t>(src) * nodes + q] = dist[q];
        }
    }
    // Per-source relaxation orders differ, so mirror entries can drift by an
    // ulp; pin the table to the lower-triangle values.
    for (int p = 0; p < nodes; ++p) {
        m.table_[static_cast<std::size_t>(p) * nodes + p] = 0.0;
        for (int q = 0; q < p; ++q) {
            m.table_[static_cast<std::size_t>(q) * nodes + p] =
                m.table_[static_cast<std::size_t>(p) * nodes + q];
        }
    }
    m.validate_table();
    return m;
}

void MetricSpace::validate_table() {
    if (flavor_ != MetricFlavor::Metric || points_ < 3) {
        return;
    }
    auto check_triple = [&](int a, int b, int c) {
        const double ab = dist(a, b);
        const double bc = dist(b, c);
        const double ac = dist(a, c);
        if (ac > ab + bc + kLengthTolerance || ab > ac + bc + kLengthTolerance ||
            bc > ab + ac + kLengthTolerance) {
            throw InputError("triangle inequality violated on points (" + std::to_string(a) +
                             "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
    };
    if (points_ <= kFullTriangleCheckLimit) {
        for (int a = 0; a < points_; ++a) {
            for (int b = a + 1; b < points_; ++b) {
                for (int c = b + 1; c < points_; ++c) {
                    check_triple(a, b, c);
                }
            }
        }
    } else {
        Rng rng(0x7261646f6dULL);
        for (std::uint64_t k = 0; k < kSampledTriangleChecks; ++k) {
            const int a = rng.uniform_int(0, points_ - 1);
            const int b = rng.uniform_int(0, points_ - 1);
            const int c = rng.uniform_int(0, points_ - 1);
            if (a == b || b == c || a == c) {
                continue;
            }
            check_triple(a, b, c);
        }
    }
}

double MetricSpace::max_entry() const {
    double best = 0.0;
    for (double v : table_) {
        best = std::max(best, v);
    }
    return best;
}

std::size_t PtolemyReport::violating_quadruple_count() const {
    std::size_t count = 0;
    std::array<int, 4> last{-1, -1, -1, -1};
    for (const auto& v : violations) {
        std::array<int, 4> sorted = v.points;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != last) {
            ++count;
            last = sorted;
        }
    }
    return count;
}

namespace {

// The three pairings of a quadruple (a<b<c<d), each written so that the
// product on the left uses the "diagonal" pairs of the arrangement.
void check_quadruple(const MetricSpace& m, int a, int b, int c, int d,
                     std::vector<PtolemyViolation>& out) {
    const std::array<std::array<int, 4>, 3> arrangements = {{
        {a, b, c, d},  // d(a,c)d(b,d) <= d(a,b)d(c,d) + d(b,c)d(a,d)
        {b, a, c, d},
        {a, c, b, d},
    }};
    for (const auto& [p0, p1, p2, p3] : arrangements) {
        const double lhs = m.dist(p0, p2) * m.dist(p1, p3);
        const double rhs = m.dist(p0, p1) * m.dist(p2, p3) + m.dist(p1, p2) * m.dist(p0, p3);
        if (lhs > rhs + 1e-9 * std::max(1.0, rhs)) {
            out.push_back({{p0, p1, p2, p3}, lhs, rhs});
        }
    }
}

}  // namespace

PtolemyReport check_ptolemy(const MetricSpace& metric, Exec exec) {
    if (metric.flavor() != MetricFlavor::Metric) {
        throw UnsupportedError("four-point inequality check requires a metric-flavor table");
    }
    const int n = metric.point_count();
    PtolemyReport report;
    if (n < 4) {
        return report;  // vacuously holds
    }

    std::vector<std::vector<PtolemyViolation>> per_first(n);
    std::uint64_t checked = 0;

    if (exec == Exec::Serial) {
        for (int a = 0; a + 3 < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                for (int c = b + 1; c < n; ++c) {
                    for (int d = c + 1; d < n; ++d) {
                        ++checked;
                        check_quadruple(metric, a, b, c, d, per_first[a]);
                    }
                }
            }
        }
    } else {
#pragma omp parallel for schedule(dynamic) reduction(+ : checked)
        for (int a = 0; a < n - 3; ++a) {
            for (int b = a + 1; b < n; ++b) {
                for (int c = b + 1; c < n; ++c) {
                    for (int d = c + 1; d < n; ++d) {
                        ++checked;
                        check_quadruple(metric, a, b, c, d, per_first[a]);
                    }
                }
            }
        }
    }

    report.quadruples_checked = checked;
    for (auto& chunk : per_first) {
        report.violations.insert(report.violations.end(), chunk.begin(), chunk.end());
    }
    return report;
}

}  // namespace robust_locus
