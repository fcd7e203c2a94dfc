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

#include "robust_locus/sp_dp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "robust_locus/errors.hpp"

namespace robust_locus {

namespace {

// Profiles are deduplicated on a 1e-9 grid so that set membership is exact
// despite float noise. The rounding-scheme solver feeds integer-valued
// tables through this path, for which the grid keys are exact identities.
std::int64_t quantize_value(double v) {
    const double scaled = v * 1e9;
    if (scaled >= 9.0e18) {
        return static_cast<std::int64_t>(9.0e18);
    }
    if (scaled <= -9.0e18) {
        return static_cast<std::int64_t>(-9.0e18);
    }
    return std::llround(scaled);
}

using ProfileKey = std::vector<std::int64_t>;

struct ProfileKeyHash {
    std::size_t operator()(const ProfileKey& key) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : key) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

ProfileKey key_of(const Profile& p) {
    ProfileKey key;
    key.reserve(p.values.size());
    for (double v : p.values) {
        key.push_back(quantize_value(v));
    }
    return key;
}

using Mask = std::vector<std::uint64_t>;

bool mask_test(const Mask& mask, int v) {
    return (mask[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
}

void mask_set(Mask& mask, int v) {
    mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

struct AnchorState {
    std::vector<ProfileEntry> entries;  // insertion order
    std::vector<Mask> masks;            // vertex set of each representative
    std::unordered_map<ProfileKey, std::size_t, ProfileKeyHash> index;
    std::size_t frontier_begin = 0;
    std::size_t frontier_end = 0;
};

struct Candidate {
    ProfileKey key;
    Profile profile;
    std::vector<int> path;
    Mask mask;
};

Profile extend_unchecked(const Instance& instance, int i, int j, const Profile& suffix) {
    const auto& pi = instance.positions(i);
    const auto& pj = instance.positions(j);
    const MetricSpace& metric = instance.metric();
    Profile out;
    out.values.resize(pi.size());
    for (std::size_t l = 0; l < pi.size(); ++l) {
        double best = -1.0;
        for (std::size_t lp = 0; lp < pj.size(); ++lp) {
            best = std::max(best, metric.dist(pi[l], pj[lp]) + suffix.values[lp]);
        }
        out.values[l] = best;
    }
    return out;
}

}  // namespace

double Profile::max_value() const {
    double best = 0.0;
    for (double v : values) {
        best = std::max(best, v);
    }
    return best;
}

Profile extend_profile(const Instance& instance, int i, int j, const Profile& suffix) {
    if (!instance.graph().has_edge(i, j)) {
        throw InputError("profile extension requires adjacent vertices " + std::to_string(i) +
                         " and " + std::to_string(j));
    }
    if (suffix.values.size() != instance.positions(j).size()) {
        throw InputError("suffix profile length does not match the uncertainty set of vertex " +
                         std::to_string(j));
    }
    return extend_unchecked(instance, i, j, suffix);
}

DpResult dp_tables(const Instance& instance, int s, int t, const DpOptions& options) {
    const int n = instance.vertex_count();
    if (s < 0 || s >= n || t < 0 || t >= n) {
        throw InputError("endpoints out of range");
    }
    if (s == t) {
        throw InputError("endpoints must differ");
    }
    const int full_budget = std::max(0, n - 1);
    int budget = options.max_budget.value_or(full_budget);
    budget = std::clamp(budget, 0, full_budget);
    const bool parallel = options.exec == Exec::Parallel;
    const std::size_t mask_words = static_cast<std::size_t>(n + 63) / 64;

    std::vector<AnchorState> state(n);
    {
        ProfileEntry base;
        base.profile.values.assign(instance.positions(t).size(), 0.0);
        base.path = {t};
        Mask mask(mask_words, 0);
        mask_set(mask, t);
        AnchorState& at = state[t];
        at.index.emplace(key_of(base.profile), 0);
        at.entries.push_back(std::move(base));
        at.masks.push_back(std::move(mask));
        at.frontier_begin = 0;
        at.frontier_end = 1;
    }

    std::vector<std::vector<Candidate>> candidates(n);
    for (int layer = 1; layer <= budget; ++layer) {
        bool any_frontier = false;
        for (const AnchorState& as : state) {
            if (as.frontier_begin < as.frontier_end) {
                any_frontier = true;
                break;
            }
        }
        if (!any_frontier) {
            break;
        }

#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int i = 0; i < n; ++i) {
            candidates[i].clear();
            if (i == t) {
                continue;
            }
            std::unordered_set<ProfileKey, ProfileKeyHash> local_seen;
            for (int j : instance.graph().neighbors(i)) {
                const AnchorState& from = state[j];
                for (std::size_t idx = from.frontier_begin; idx < from.frontier_end; ++idx) {
                    if (mask_test(from.masks[idx], i)) {
                        continue;  // extension would revisit i
                    }
                    Profile extended =
                        extend_unchecked(instance, i, j, from.entries[idx].profile);
                    if (options.prune_cap && extended.max_value() > *options.prune_cap) {
                        continue;
                    }
                    ProfileKey key = key_of(extended);
                    if (state[i].index.count(key) != 0 || local_seen.count(key) != 0) {
                        continue;
                    }
                    Candidate cand;
                    cand.profile = std::move(extended);
                    cand.path.reserve(from.entries[idx].path.size() + 1);
                    cand.path.push_back(i);
                    cand.path.insert(cand.path.end(), from.entries[idx].path.begin(),
                                     from.entries[idx].path.end());
                    cand.mask = from.masks[idx];
                    mask_set(cand.mask, i);
                    local_seen.insert(key);
                    cand.key = std::move(key);
                    candidates[i].push_back(std::move(cand));
                }
            }
        }

        // Sequential commit, anchors ascending: other anchors only ever read
        // entries below frontier_end, so appends are invisible mid-layer.
        for (int i = 0; i < n; ++i) {
            AnchorState& as = state[i];
            as.frontier_begin = as.entries.size();
            for (Candidate& cand : candidates[i]) {
                as.index.emplace(std::move(cand.key), as.entries.size());
                as.entries.push_back(ProfileEntry{std::move(cand.profile), std::move(cand.path)});
                as.masks.push_back(std::move(cand.mask));
            }
            as.frontier_end = as.entries.size();
        }
    }

    if (budget == full_budget && state[s].entries.empty()) {
        throw InfeasibleError("vertex " + std::to_string(t) + " unreachable from " +
                              std::to_string(s));
    }

    DpResult result;
    std::unordered_set<ProfileKey, ProfileKeyHash> profile_set;
    std::unordered_set<std::int64_t> value_set;
    result.all_tables.reserve(n);
    for (int i = 0; i < n; ++i) {
        for (const ProfileEntry& entry : state[i].entries) {
            ProfileKey key = key_of(entry.profile);
            for (std::int64_t v : key) {
                value_set.insert(v);
            }
            profile_set.insert(std::move(key));
        }
        result.all_tables.push_back(ProfileTable{i, budget, std::move(state[i].entries)});
    }
    result.stats.n_profiles = profile_set.size();
    result.stats.n_values = value_set.size();
    result.source_table = result.all_tables[s];
    return result;
}

SpSolution solve_exact(const Instance& instance, int s, int t, const DpOptions& options) {
    DpResult dp = dp_tables(instance, s, t, options);
    const auto& entries = dp.source_table.entries;
    if (entries.empty()) {
        throw InfeasibleError("vertex " + std::to_string(t) + " unreachable from " +
                              std::to_string(s));
    }
    std::size_t best = 0;
    double best_value = entries[0].profile.max_value();
    for (std::size_t k = 1; k < entries.size(); ++k) {
        const double value = entries[k].profile.max_value();
        if (value < best_value) {
            best_value = value;
            best = k;
        }
    }
    return SpSolution{entries[best].path, best_value, dp.stats};
}

double path_worst_case_cost(const Instance& instance, const std::vector<int>& path) {
    if (path.empty()) {
        throw InputError("empty path");
    }
    std::vector<char> seen(instance.vertex_count(), 0);
    for (int v : path) {
        if (v < 0 || v >= instance.vertex_count()) {
            throw InputError("path vertex out of range");
        }
        if (seen[v]) {
            throw InputError("path revisits vertex " + std::to_string(v));
        }
        seen[v] = 1;
    }
    Profile profile;
    profile.values.assign(instance.positions(path.back()).size(), 0.0);
    for (std::size_t k = path.size() - 1; k-- > 0;) {
        profile = extend_profile(instance, path[k], path[k + 1], profile);
    }
    return profile.max_value();
}

}  // namespace robust_locus
