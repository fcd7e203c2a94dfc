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

#include "robust_locus/cost_oracle.hpp"
#include "robust_locus/det_solvers.hpp"

namespace robust_locus {

// Approximation pipeline for robust subgraph problems: replace the uncertain
// distances by the worst-case pairwise distances and solve the resulting
// deterministic problem. The returned subgraph's true worst-case cost is
// within rho1 * rho2 of the optimum, where rho1 is the deterministic
// solver's ratio and rho2 the structure-specific surrogate ratio.

struct DmaxSolution {
    EdgeSubgraph edges;
    double cmax_value;          // surrogate cost of the chosen subgraph
    std::vector<int> sequence;  // path vertices / tour order; empty for trees
    double rho1;                // 1 for sp and mst, 2 for the tour heuristic
    FamilyTag output_family;    // Path, Tree, or Cycle
};

/// Solves the instance's problem (sp, mst, or tsp) on worst-case pairwise
/// distance weights.
DmaxSolution solve_via_dmax(const Instance& instance, Exec exec = Exec::Parallel);

/// Certified approximation factor rho1 * rho2 for solve_via_dmax on this
/// instance. rho2 defaults to the bound of the output family; pass a family
/// override (e.g. Ptolemaic) when more is known about the metric.
double certified_bound(const Instance& instance, std::optional<FamilyTag> family = {});

/// Per-vertex in-set 1-median: the candidate minimizing the sum of
/// distances to the rest of its own set, ties to the smallest position
/// index. A tempting but unreliable representative choice.
Scenario geometric_median_positions(const Instance& instance);

/// Solves the instance's problem deterministically with every vertex pinned
/// to its position in u_star.
EdgeSubgraph solve_via_representative(const Instance& instance, const Scenario& u_star);

}  // namespace robust_locus
