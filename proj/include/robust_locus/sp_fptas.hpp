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

#include "robust_locus/cost_oracle.hpp"
#include "robust_locus/sp_dp.hpp"

namespace robust_locus {

// (1+eps)-approximation for the robust shortest path: distances are rounded
// up to multiples of a quantum derived from a 2-approximate upper bound, and
// the profile DP runs on the rounded table keeping only paths whose rounded
// cost stays within the bound.

struct RoundingContext {
    double upper_bound;  // A, with OPT <= A <= 2*OPT
    double eps_prime;    // eps / (2n)
    double quantum;      // eps_prime * A
    double good_cap;     // A * (1 + n * eps_prime)
};

RoundingContext make_rounding_context(const Instance& instance, double upper_bound, double eps);

struct SeedResult {
    std::vector<int> path;
    double upper_bound;  // A
    bool exact;          // false when the enumeration cap forced the surrogate fallback
};

/// 2-approximate upper bound: the worst-case cost of the shortest path
/// under worst-case pairwise distances. If the exact evaluation exceeds the
/// enumeration cap, falls back to the surrogate cost of the same path
/// (still an upper bound within twice the optimum).
SeedResult seed_upper_bound(const Instance& instance, int s, int t,
                            std::uint64_t cap = kDefaultOracleCap, Exec exec = Exec::Parallel);

/// Every table entry rounded up to the closest multiple of ctx.quantum
/// (entries within 1e-9 of a multiple snap to it). The result is flavor Gen:
/// rounding can break the triangle inequality.
Instance round_distances(const Instance& instance, const RoundingContext& ctx);

struct FptasSolution {
    std::vector<int> path;
    double cost;         // exact worst-case cost of `path` on the original instance
    double upper_bound;  // A
    double quantum;
    DpStats stats;       // from the rounded run; values counted in quantum units
};

/// Returns a path whose worst-case cost is at most (1+eps) times the
/// optimum. Internally runs the profile DP on the rounded instance with
/// distances kept as integer multiples of the quantum, discarding profiles
/// whose rounded worst-case cost exceeds good_cap.
FptasSolution solve_fptas(const Instance& instance, int s, int t, double eps,
                          std::uint64_t cap = kDefaultOracleCap, Exec exec = Exec::Parallel);

}  // namespace robust_locus
