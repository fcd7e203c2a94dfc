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

#include <cstddef>
#include <optional>
#include <vector>

#include "robust_locus/instance.hpp"

namespace robust_locus {

// Exact solver for the robust shortest path by dynamic programming over
// profiles. A profile of an i-t path holds, for each candidate position of
// the anchor vertex i, the worst-case cost of the path conditioned on i
// sitting there. The distance table may be flavor Gen (no triangle
// inequality required).

struct Profile {
    std::vector<double> values;  // one entry per position of the anchor vertex

    double max_value() const;
    bool operator==(const Profile&) const = default;
};

/// Profile of the one-edge-longer path i -> (path of `suffix`), where
/// `suffix` is anchored at j and j is adjacent to i:
///   out[l] = max_l' dist(u_i^l, u_j^l') + suffix[l'].
Profile extend_profile(const Instance& instance, int i, int j, const Profile& suffix);

struct ProfileEntry {
    Profile profile;
    std::vector<int> path;  // representative simple path, anchor first, t last
};

struct ProfileTable {
    int anchor;
    int budget;  // max number of edges covered by this table
    std::vector<ProfileEntry> entries;  // insertion order; profiles distinct
};

struct DpStats {
    std::size_t n_profiles = 0;  // distinct profiles across all anchors and layers
    std::size_t n_values = 0;    // distinct conditional cost values stored
};

struct DpOptions {
    std::optional<int> max_budget;    // default: n-1 (all simple-path lengths)
    std::optional<double> prune_cap;  // drop profiles whose largest entry exceeds this
    Exec exec = Exec::Parallel;
};

struct DpResult {
    ProfileTable source_table;             // anchor s at the final budget
    std::vector<ProfileTable> all_tables;  // one per anchor
    DpStats stats;
};

/// Builds the profile tables layer by layer (base case: the trivial path at
/// t with the all-zero profile). Profiles are deduplicated on a 1e-9 grid,
/// keeping the first-inserted representative; an extension is skipped when
/// the new anchor already occurs on the stored representative, so every
/// stored path is simple. Throws InfeasibleError when t is unreachable.
DpResult dp_tables(const Instance& instance, int s, int t, const DpOptions& options = {});

struct SpSolution {
    std::vector<int> path;
    double cost;
    DpStats stats;
};

/// Optimal robust s-t path: the stored source profile with the smallest
/// worst entry, together with its representative path.
SpSolution solve_exact(const Instance& instance, int s, int t, const DpOptions& options = {});

/// Exact worst-case cost of one fixed path, computed by folding
/// extend_profile along it (no scenario enumeration, so no cap).
double path_worst_case_cost(const Instance& instance, const std::vector<int>& path);

}  // namespace robust_locus
