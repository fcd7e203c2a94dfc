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

#include <array>
#include <cstdint>
#include <tuple>
#include <vector>

#include "robust_locus/errors.hpp"

namespace robust_locus {

/// Absolute comparison tolerance used throughout. Inputs are expected to be
/// normalized so that the largest table entry stays below 1e6.
inline constexpr double kLengthTolerance = 1e-9;

/// "Metric" tables satisfy the triangle inequality (checked at
/// construction); "Gen" tables are only symmetric and nonnegative.
enum class MetricFlavor { Metric, Gen };

/// How the space was built; kept so instances can be serialized back in
/// their original form.
enum class MetricSource { Euclidean, Explicit, GraphInduced };

/// A weighted edge {a, b, w} of an auxiliary graph.
using WeightedEdge = std::tuple<int, int, double>;

/// Finite point universe with a symmetric nonnegative distance table.
class MetricSpace {
public:
    /// Pairwise Euclidean distances of the given coordinate rows.
    static MetricSpace euclidean(int dim, std::vector<std::vector<double>> points);

    /// Explicit table. Validates symmetry, nonnegativity and zero diagonal;
    /// for flavor Metric also the triangle inequality (all triples when the
    /// space has at most 300 points, otherwise one million sampled triples).
    static MetricSpace explicit_table(std::vector<std::vector<double>> matrix,
                                      MetricFlavor flavor);

    /// All-pairs shortest-path closure of an auxiliary weighted graph,
    /// materialized by repeated single-source relaxation.
    static MetricSpace graph_induced(int nodes, std::vector<WeightedEdge> weighted_edges);

    int point_count() const { return points_; }
    double dist(int p, int q) const { return table_[static_cast<std::size_t>(p) * points_ + q]; }
    MetricFlavor flavor() const { return flavor_; }
    MetricSource source() const { return source_; }

    bool has_coordinates() const { return !coordinates_.empty(); }
    int dimension() const { return dim_; }
    const std::vector<std::vector<double>>& coordinates() const { return coordinates_; }
    const std::vector<WeightedEdge>& auxiliary_edges() const { return aux_edges_; }
    int auxiliary_nodes() const { return aux_nodes_; }

    double max_entry() const;

    bool operator==(const MetricSpace& other) const {
        return points_ == other.points_ && table_ == other.table_ && flavor_ == other.flavor_;
    }

private:
    MetricSpace() = default;
    void validate_table();

    int points_ = 0;
    std::vector<double> table_;  // row-major points_ x points_
    MetricFlavor flavor_ = MetricFlavor::Metric;
    MetricSource source_ = MetricSource::Explicit;
    int dim_ = 0;
    std::vector<std::vector<double>> coordinates_;
    std::vector<WeightedEdge> aux_edges_;
    int aux_nodes_ = 0;
};

/// One failed four-point inequality: with points (a,b,c,d),
/// d(a,c)*d(b,d) > d(a,b)*d(c,d) + d(b,c)*d(a,d) beyond tolerance.
struct PtolemyViolation {
    std::array<int, 4> points;
    double lhs;
    double rhs;

    bool operator==(const PtolemyViolation&) const = default;
};

struct PtolemyReport {
    std::vector<PtolemyViolation> violations;
    std::uint64_t quadruples_checked = 0;

    bool ptolemaic() const { return violations.empty(); }
    /// Number of distinct quadruples with at least one failing pairing.
    std::size_t violating_quadruple_count() const;
};

/// Exhaustively tests every unordered quadruple of points (all three
/// pairings each) against the four-point product inequality, with relative
/// tolerance 1e-9. Requires flavor Metric.
PtolemyReport check_ptolemy(const MetricSpace& metric, Exec exec = Exec::Parallel);

}  // namespace robust_locus
