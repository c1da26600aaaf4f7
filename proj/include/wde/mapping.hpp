// Copyright 2026 The Nucleus WDE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WDE_MAPPING_HPP_
#define WDE_MAPPING_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wde/data_format.hpp"

namespace wde {

enum class BindingKind {
  Flavor,  // nucleus kernel bound to a flavor id
  Pe,      // non-nucleus (or fallback) kernel bound to a PE id
};

struct BoundTarget {
  BindingKind kind = BindingKind::Pe;
  std::string id;

  friend bool operator==(const BoundTarget&, const BoundTarget&) = default;
};

/// Inserted format conversion on a producer->consumer edge, always placed on
/// the consumer's PE.
struct GlueTask {
  std::string src;  // edge endpoints (kernel ids)
  std::string dst;
  std::size_t edge_index = 0;  // index of the edge in the waveform graph
  DataFormat from_format;
  DataFormat to_format;
  std::string placed_on;  // consumer's PE
  std::int64_t cycles = 1;

  std::string task_id() const { return "glue:" + src + "->" + dst; }

  friend bool operator==(const GlueTask&, const GlueTask&) = default;
};

/// Spatial mapping: every kernel bound exactly once (nuclei to flavors,
/// non-nuclei to PEs) plus the glue tasks the binding induces.
struct Mapping {
  std::map<std::string, BoundTarget> binding;
  std::vector<GlueTask> glue;

  friend bool operator==(const Mapping&, const Mapping&) = default;
};

}  // namespace wde

#endif  // WDE_MAPPING_HPP_
