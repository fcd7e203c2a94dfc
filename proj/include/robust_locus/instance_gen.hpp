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

#include <cstdint>
#include <string>

#include "robust_locus/cost_oracle.hpp"
#include "robust_locus/instance.hpp"

namespace robust_locus {

// Constructors for the tight families (instances attaining the proven
// worst-case ratios exactly) and seeded random generators for the bound
// verification harness. All generated instances carry an evaluate problem
// over the full edge set; rebind with Instance::with_problem as needed.

/// Path on n >= 3 vertices on a line, ratio exactly 2.
Instance gen_tight_path(int n);

/// Cycle on n >= 4 vertices on a line, ratio exactly 2.
Instance gen_tight_cycle(int n);

/// 3-cycle over the tight-path position sets; ratio exactly 3/2.
Instance gen_tight_triangle();

/// Complete graph on k >= 2 vertices with binary line positions:
/// surrogate cost k(k-1)/2, exact cost floor(k^2/4) (a maximum cut).
Instance gen_tight_clique(int k);

/// Star on n >= 3 vertices over an explicit metric; ratio exactly
/// 3(n-1)/(n+1).
Instance gen_tight_star(int n);

/// The two-edge family on which the in-set median representative fails:
/// picking medians selects the far edge (cost 1) over the near edge
/// (cost eps).
struct GmCounterexample {
    Instance instance;       // 3-vertex path graph, evaluate over both edges
    EdgeSubgraph near_edge;  // {0,1}, worst-case cost eps
    EdgeSubgraph far_edge;   // {1,2}, worst-case cost 1
    double eps;
};

GmCounterexample gen_gm_counterexample(double eps);

enum class Family {
    Path,
    Cycle,
    Tree,
    Star,
    Clique,
    Matching,
    GeneralConnected,
};

enum class MetricKind {
    Euclidean2d,
    GraphInduced,
    RandomMetricClosure,
    RandomGenTable,  // symmetric nonnegative table, triangle not enforced
};

const char* family_name(Family family);
Family parse_family(const std::string& name);
const char* metric_kind_name(MetricKind kind);
MetricKind parse_metric_kind(const std::string& name);

/// Reproducible random instance: `sigma` candidate positions per vertex,
/// drawn in [0,1]^2 for Euclidean2d or over a random weighted graph's
/// shortest-path closure otherwise. Deterministic in (parameters, seed).
Instance gen_random(Family family, int n, int sigma, MetricKind kind, std::uint64_t seed);

/// Smallest vertex count that makes the family well-formed.
int family_min_vertices(Family family);

/// Bound applicable to a generated (family, metric kind) cell: Euclidean
/// metrics use the tighter four-point bounds where available.
FamilyTag campaign_family_tag(Family family, MetricKind kind);

}  // namespace robust_locus
