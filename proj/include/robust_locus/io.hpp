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

#include <string>

#include <json.hpp>

#include "robust_locus/instance.hpp"

namespace robust_locus {

// JSON instance format:
//   {"metric": {"type":"euclidean","dim":D,"points":[[x,...],...]}
//            | {"type":"explicit","size":P,"matrix":[[...]],"flavor":"metric"|"gen"}
//            | {"type":"graph","nodes":P,"weighted_edges":[[a,b,w],...]},
//    "n":N,
//    "uncertainty":[[pid,...],...],
//    "edges":[[i,j],...],
//    "problem":{"type":"sp","s":S,"t":T} | {"type":"mst"} | {"type":"tsp"}
//             | {"type":"evaluate","edge_set":[[i,j],...]}}

MetricSpace metric_from_json(const nlohmann::json& j);
nlohmann::json metric_to_json(const MetricSpace& metric);

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& instance);

Instance parse_instance_text(const std::string& text);
std::string instance_to_text(const Instance& instance);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& instance, const std::string& path);

}  // namespace robust_locus
