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

#include "robust_locus/cost_oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <unordered_set>
#include <cstdlib>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace robust_locus {

namespace {

void validate_subgraph(const Graph& graph, const EdgeSubgraph& sub) {
    std::unordered_set<long long> seen;
    for (const Edge& raw : sub.edges) {
        Edge e = make_edge(raw.u, raw.v);
        if (!graph.has_edge(e.u, e.v)) {
            throw InputError("subgraph edge {" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + "} not in the host graph");
        }
        if (!seen.insert(static_cast<long long>(e.u) * graph.vertex_count() + e.v).second) {
            throw InputError("subgraph edge {" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + "} listed twice");
        }
    }
}

std::vector<int> touched_vertices(int n, const EdgeSubgraph& sub) {
    std::vector<char> seen(n, 0);
    for (const Edge& e : sub.edges) {
        seen[e.u] = 1;
        seen[e.v] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) {
            out.push_back(v);
        }
    }
    return out;
}

// Enumeration state over the touched vertices only: vertex order ascending,
// first vertex most significant, so the linear index order coincides with
// the lexicographic order of position-index vectors.
struct ScenarioSpace {
    std::vector<int> vertices;            // touched, ascending
    std::vector<int> slot_of;             // vertex -> slot, -1 if untouched
    std::vector<const std::vector<int>*> positions;  // per slot
    std::vector<std::pair<int, int>> edge_slots;     // per sub edge
    std::uint64_t product = 1;

    ScenarioSpace(const Instance& instance, const EdgeSubgraph& sub, std::uint64_t cap) {
        const int n = instance.vertex_count();
        vertices = touched_vertices(n, sub);
        slot_of.assign(n, -1);
        for (std::size_t s = 0; s < vertices.size(); ++s) {
            slot_of[vertices[s]] = static_cast<int>(s);
        }
        positions.reserve(vertices.size());
        for (int v : vertices) {
            positions.push_back(&instance.positions(v));
            const auto b = static_cast<std::uint64_t>(positions.back()->size());
            if (product > cap / b) {
                // Report the full product (saturating) so the error names it.
                long double full = 1.0L;
                for (int w : vertices) {
                    full *= static_cast<long double>(instance.set_size(w));
                }
                const auto shown = full > 1e18L ? static_cast<std::uint64_t>(1e18)
                                                : static_cast<std::uint64_t>(full);
                throw CapacityError("scenario product " + std::to_string(shown) +
                                        " exceeds enumeration cap " + std::to_string(cap),
                                    shown);
            }
            product *= b;
        }
        edge_slots.reserve(sub.edges.size());
        for (const Edge& e : sub.edges) {
            edge_slots.push_back({slot_of[e.u], slot_of[e.v]});
        }
    }

    void decode(std::uint64_t index, std::vector<int>& digits) const {
        digits.resize(vertices.size());
        for (std::size_t s = vertices.size(); s-- > 0;) {
            const auto b = static_cast<std::uint64_t>(positions[s]->size());
            digits[s] = static_cast<int>(index % b);
            index /= b;
        }
    }

    // Advances to the next index (least significant slot last).
    void advance(std::vector<int>& digits) const {
        for (std::size_t s = digits.size(); s-- > 0;) {
            if (++digits[s] < static_cast<int>(positions[s]->size())) {
                return;
            }
            digits[s] = 0;
        }
    }

    double cost(const MetricSpace& metric, const std::vector<int>& digits) const {
        double total = 0.0;
        for (const auto& [sa, sb] : edge_slots) {
            total += metric.dist((*positions[sa])[digits[sa]], (*positions[sb])[digits[sb]]);
        }
        return total;
    }
};

struct ChunkBest {
    double cost = -1.0;
    std::uint64_t index = 0;
};

ChunkBest scan_range(const ScenarioSpace& space, const MetricSpace& metric,
                     std::uint64_t begin, std::uint64_t end) {
    ChunkBest best;
    std::vector<int> digits;
    space.decode(begin, digits);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const double c = space.cost(metric, digits);
        if (c > best.cost) {
            best.cost = c;
            best.index = idx;
        }
        space.advance(digits);
    }
    return best;
}

}  // namespace

std::uint64_t oracle_cap_from_env() {
    const char* raw = std::getenv("ROBUST_LOCUS_ORACLE_CAP");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultOracleCap;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) {
        throw InputError("ROBUST_LOCUS_ORACLE_CAP must be a positive integer");
    }
    return static_cast<std::uint64_t>(value);
}

double scenario_cost(const Instance& instance, const EdgeSubgraph& sub, const Scenario& u) {
    validate_subgraph(instance.graph(), sub);
    const int n = instance.vertex_count();
    if (static_cast<int>(u.point.size()) != n) {
        throw InputError("scenario must choose a position for every vertex");
    }
    for (int v : touched_vertices(n, sub)) {
        const auto& allowed = instance.positions(v);
        if (std::find(allowed.begin(), allowed.end(), u.point[v]) == allowed.end()) {
            throw InputError("scenario position of vertex " + std::to_string(v) +
                             " is not in its uncertainty set");
        }
    }
    double total = 0.0;
    for (const Edge& e : sub.edges) {
        total += instance.metric().dist(u.point[e.u], u.point[e.v]);
    }
    return total;
}

WorstCase worst_case_cost(const Instance& instance, const EdgeSubgraph& sub,
                          std::uint64_t cap, Exec exec) {
    validate_subgraph(instance.graph(), sub);
    ScenarioSpace space(instance, sub, cap);
    const MetricSpace& metric = instance.metric();

    ChunkBest best;
    if (space.product > 0) {
        if (exec == Exec::Serial || space.product < 1024) {
            best = scan_range(space, metric, 0, space.product);
        } else {
#ifdef _OPENMP
            const int max_chunks = omp_get_max_threads() * 8;
#else
            const int max_chunks = 8;
#endif
            const auto chunks =
                static_cast<std::uint64_t>(std::min<std::uint64_t>(max_chunks, space.product));
            std::vector<ChunkBest> partial(chunks);
#pragma omp parallel for schedule(dynamic)
            for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
                const auto wide = static_cast<unsigned __int128>(space.product);
                const auto begin = static_cast<std::uint64_t>(wide * c / chunks);
                const auto end = static_cast<std::uint64_t>(wide * (c + 1) / chunks);
                partial[c] = scan_range(space, metric, begin, end);
            }
            // Fold in chunk order: larger cost wins, ties keep the smaller
            // index, i.e. the lexicographically smallest position vector.
            best = partial[0];
            for (std::uint64_t c = 1; c < chunks; ++c) {
                if (partial[c].cost > best.cost) {
                    best = partial[c];
                }
            }
        }
    }

    Scenario scenario;
    scenario.point.resize(instance.vertex_count());
    for (int v = 0; v < instance.vertex_count(); ++v) {
        scenario.point[v] = instance.positions(v).front();
    }
    std::vector<int> digits;
    space.decode(best.index, digits);
    for (std::size_t s = 0; s < space.vertices.size(); ++s) {
        scenario.point[space.vertices[s]] = (*space.positions[s])[digits[s]];
    }
    return WorstCase{std::max(best.cost, 0.0), std::move(scenario)};
}

double cmax_cost(const Instance& instance, const EdgeSubgraph& sub) {
    validate_subgraph(instance.graph(), sub);
    double total = 0.0;
    for (const Edge& e : sub.edges) {
        total += dmax(instance, e.u, e.v);
    }
    return total;
}

double family_bound(FamilyTag family) {
    switch (family) {
        case FamilyTag::General: return 9.0;
        case FamilyTag::Ptolemaic: return 4.0;
        case FamilyTag::Path: return 2.0;
        case FamilyTag::Cycle: return 2.0;
        case FamilyTag::Clique: return 2.0;
        case FamilyTag::Star: return 3.0;
        case FamilyTag::StarPtolemaic: return 2.0;
        case FamilyTag::Tree: return 6.0;
        case FamilyTag::Matching: return 1.0;
        case FamilyTag::Triangle: return 1.5;
    }
    throw InputError("unknown family tag");
}

const char* family_tag_name(FamilyTag family) {
    switch (family) {
        case FamilyTag::General: return "general";
        case FamilyTag::Ptolemaic: return "ptolemaic";
        case FamilyTag::Path: return "path";
        case FamilyTag::Cycle: return "cycle";
        case FamilyTag::Clique: return "clique";
        case FamilyTag::Star: return "star";
        case FamilyTag::StarPtolemaic: return "star_ptolemaic";
        case FamilyTag::Tree: return "tree";
        case FamilyTag::Matching: return "matching";
        case FamilyTag::Triangle: return "triangle";
    }
    throw InputError("unknown family tag");
}

FamilyTag parse_family_tag(const std::string& name) {
    for (FamilyTag tag :
         {FamilyTag::General, FamilyTag::Ptolemaic, FamilyTag::Path, FamilyTag::Cycle,
          FamilyTag::Clique, FamilyTag::Star, FamilyTag::StarPtolemaic, FamilyTag::Tree,
          FamilyTag::Matching, FamilyTag::Triangle}) {
        if (name == family_tag_name(tag)) {
            return tag;
        }
    }
    throw InputError("unknown family tag: " + name);
}

RatioReport ratio_report(const Instance& instance, const EdgeSubgraph& sub, FamilyTag family,
                         std::uint64_t cap, Exec exec) {
    const double c_max = cmax_cost(instance, sub);
    WorstCase worst = worst_case_cost(instance, sub, cap, exec);
    double ratio;
    if (worst.cost <= 0.0) {
        assert(c_max <= kLengthTolerance);
        if (c_max > kLengthTolerance) {
            throw std::logic_error("surrogate positive while the exact cost is zero");
        }
        ratio = 1.0;
    } else {
        ratio = c_max / worst.cost;
    }
    const double bound = family_bound(family);
    return RatioReport{family,
                       c_max,
                       worst.cost,
                       ratio,
                       bound,
                       std::abs(ratio - bound) <= 1e-9,
                       std::move(worst.scenario)};
}

std::string format_length(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9f", value);
    return buffer;
}

std::string ratio_report_csv(const RatioReport& report) {
    std::string row = family_tag_name(report.family);
    row += ',';
    row += format_length(report.c_max);
    row += ',';
    row += format_length(report.c);
    row += ',';
    row += format_length(report.ratio);
    row += ',';
    row += format_length(report.bound);
    row += ',';
    row += report.tight ? "true" : "false";
    return row;
}

}  // namespace robust_locus
