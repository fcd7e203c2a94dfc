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

// Benchmarks the OpenMP kernels against their serial reference
// implementations and verifies that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "robust_locus/cost_oracle.hpp"
#include "robust_locus/instance_gen.hpp"
#include "robust_locus/sp_dp.hpp"

namespace rl = robust_locus;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel calls run serially\n\n");
#endif

    {
        // Scenario enumeration: 8 vertices, 7 positions each -> 7^8 ~ 5.8M.
        rl::Instance clique = rl::gen_random(rl::Family::Clique, 8, 7,
                                             rl::MetricKind::Euclidean2d, 17);
        const rl::EdgeSubgraph sub = rl::EdgeSubgraph::all_edges(clique.graph());
        const std::uint64_t cap = 10'000'000;
        rl::WorstCase serial{}, parallel{};
        const double t_serial =
            time_ms([&] { serial = rl::worst_case_cost(clique, sub, cap, rl::Exec::Serial); });
        const double t_parallel =
            time_ms([&] { parallel = rl::worst_case_cost(clique, sub, cap, rl::Exec::Parallel); });
        report("worst_case_cost (5.8M)", t_serial, t_parallel,
               serial.cost == parallel.cost && serial.scenario == parallel.scenario);
    }

    {
        // Worst-case distance table: 150 vertices x 30 positions.
        rl::Instance wide = rl::gen_random(rl::Family::GeneralConnected, 150, 30,
                                           rl::MetricKind::Euclidean2d, 23);
        rl::MetricSpace serial = rl::dmax_metric(wide, rl::Exec::Serial);
        rl::MetricSpace parallel = rl::dmax_metric(wide, rl::Exec::Parallel);
        const double t_serial = time_ms([&] { serial = rl::dmax_metric(wide, rl::Exec::Serial); });
        const double t_parallel =
            time_ms([&] { parallel = rl::dmax_metric(wide, rl::Exec::Parallel); });
        report("dmax_metric (150x30)", t_serial, t_parallel, serial == parallel);
    }

    {
        // Four-point inequality scan: 90 points -> ~2.5M quadruples.
        rl::Instance pts = rl::gen_random(rl::Family::Path, 45, 2,
                                          rl::MetricKind::Euclidean2d, 31);
        const rl::MetricSpace& metric = pts.metric();
        rl::PtolemyReport serial, parallel;
        const double t_serial =
            time_ms([&] { serial = rl::check_ptolemy(metric, rl::Exec::Serial); });
        const double t_parallel =
            time_ms([&] { parallel = rl::check_ptolemy(metric, rl::Exec::Parallel); });
        report("check_ptolemy (90 pts)", t_serial, t_parallel,
               serial.violations == parallel.violations &&
                   serial.quadruples_checked == parallel.quadruples_checked);
    }

    {
        // Profile dynamic program on a dense 20-vertex instance.
        rl::Instance inst = rl::gen_random(rl::Family::GeneralConnected, 20, 3,
                                           rl::MetricKind::RandomMetricClosure, 41);
        rl::DpOptions serial_opt, parallel_opt;
        serial_opt.exec = rl::Exec::Serial;
        serial_opt.max_budget = 6;
        parallel_opt.exec = rl::Exec::Parallel;
        parallel_opt.max_budget = 6;
        rl::DpResult serial, parallel;
        const double t_serial =
            time_ms([&] { serial = rl::dp_tables(inst, 0, 19, serial_opt); });
        const double t_parallel =
            time_ms([&] { parallel = rl::dp_tables(inst, 0, 19, parallel_opt); });
        bool equal = serial.stats.n_profiles == parallel.stats.n_profiles &&
                     serial.stats.n_values == parallel.stats.n_values &&
                     serial.source_table.entries.size() == parallel.source_table.entries.size();
        for (std::size_t k = 0; equal && k < serial.source_table.entries.size(); ++k) {
            equal = serial.source_table.entries[k].profile ==
                        parallel.source_table.entries[k].profile &&
                    serial.source_table.entries[k].path == parallel.source_table.entries[k].path;
        }
        report("profile dp (n=20, k<=6)", t_serial, t_parallel, equal);
    }

    return 0;
}
