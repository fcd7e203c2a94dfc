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

#include "robust_locus/instance.hpp"

namespace robust_locus {

/// Subset of the host graph's edges.
struct EdgeSubgraph {
    std::vector<Edge> edges;

    static EdgeSubgraph all_edges(const Graph& g) { return EdgeSubgraph{g.edges()}; }
    bool operator==(const EdgeSubgraph&) const = default;
};

/// Default cap on the number of scenarios an exact worst-case evaluation may
/// enumerate; override per call or via ROBUST_LOCUS_ORACLE_CAP.
inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// Reads ROBUST_LOCUS_ORACLE_CAP, falling back to kDefaultOracleCap.
std::uint64_t oracle_cap_from_env();

/// Total edge length of the subgraph under one fixed choice of positions.
double scenario_cost(const Instance& instance, const EdgeSubgraph& sub, const Scenario& u);

struct WorstCase {
    double cost;
    Scenario scenario;
};

/// Exact worst-case cost: the maximum of scenario_cost over every
/// combination of positions of the vertices incident to `sub` (positions of
/// untouched vertices do not affect the sum and are pinned to their first
/// candidate). Ties are broken toward the lexicographically smallest vector
/// of position indices. Throws CapacityError when the scenario product
/// exceeds `cap`.
WorstCase worst_case_cost(const Instance& instance, const EdgeSubgraph& sub,
                          std::uint64_t cap = kDefaultOracleCap, Exec exec = Exec::Parallel);

/// Surrogate cost: sum of worst-case pairwise distances over the subgraph's
/// edges. Always an upper bound on worst_case_cost.
double cmax_cost(const Instance& instance, const EdgeSubgraph& sub);

/// Structure classes with proven worst-case ratios between the surrogate
/// and the exact cost.
enum class FamilyTag {
    General,
    Ptolemaic,
    Path,
    Cycle,
    Clique,
    Star,
    StarPtolemaic,
    Tree,
    Matching,
    Triangle,
};

double family_bound(FamilyTag family);
const char* family_tag_name(FamilyTag family);
FamilyTag parse_family_tag(const std::string& name);

struct RatioReport {
    FamilyTag family;
    double c_max;
    double c;
    double ratio;  // c_max / c, defined as 1 when both are 0
    double bound;
    bool tight;  // |ratio - bound| <= 1e-9
    Scenario worst_scenario;
};

RatioReport ratio_report(const Instance& instance, const EdgeSubgraph& sub, FamilyTag family,
                         std::uint64_t cap = kDefaultOracleCap, Exec exec = Exec::Parallel);

/// Fixed 9-decimal rendering used for all lengths in CSV and reports.
std::string format_length(double value);

/// One CSV row: family,c_max,c,ratio,bound,tight (lengths with 9 decimals).
std::string ratio_report_csv(const RatioReport& report);

}  // namespace robust_locus
