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

#include "wde/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wde {

const KernelSpec* WaveformGraph::find_kernel(const std::string& id) const {
  for (const KernelSpec& kernel : kernels) {
    if (kernel.id == id) return &kernel;
  }
  return nullptr;
}

bool WaveformGraph::has_edge(const std::string& src, const std::string& dst) const {
  return std::any_of(edges.begin(), edges.end(), [&](const EdgeSpec& e) {
    return e.src == src && e.dst == dst;
  });
}

namespace {

void add(std::vector<Violation>& out, std::string code, std::string message) {
  out.push_back(Violation{std::move(code), std::move(message)});
}

// Kahn's algorithm over kernel indices; anything left over sits on a cycle.
bool has_cycle(const WaveformGraph& graph) {
  std::map<std::string, int> in_degree;
  std::map<std::string, std::vector<std::string>> successors;
  for (const KernelSpec& kernel : graph.kernels) in_degree[kernel.id] = 0;
  for (const EdgeSpec& edge : graph.edges) {
    if (in_degree.count(edge.src) == 0 || in_degree.count(edge.dst) == 0) continue;
    successors[edge.src].push_back(edge.dst);
    ++in_degree[edge.dst];
  }
  std::vector<std::string> ready;
  for (const auto& [id, degree] : in_degree) {
    if (degree == 0) ready.push_back(id);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    std::string id = ready.back();
    ready.pop_back();
    ++visited;
    for (const std::string& next : successors[id]) {
      if (--in_degree[next] == 0) ready.push_back(next);
    }
  }
  return visited != in_degree.size();
}

}  // namespace

std::vector<Violation> validate_graph(const WaveformGraph& graph) {
  std::vector<Violation> out;

  std::set<std::string> seen_ids;
  for (const KernelSpec& kernel : graph.kernels) {
    if (kernel.id.empty()) add(out, "empty-id", "kernel with empty id");
    if (!seen_ids.insert(kernel.id).second) {
      add(out, "duplicate-kernel", "duplicate kernel id '" + kernel.id + "'");
    }
    if (kernel.invocations < 1) {
      add(out, "bad-invocations",
          "kernel '" + kernel.id + "' has invocations < 1");
    }
    if (const NucleusKernel* nucleus = kernel.as_nucleus()) {
      if (nucleus->nucleus.name.empty()) {
        add(out, "empty-nucleus", "kernel '" + kernel.id + "' names an empty nucleus");
      }
      auto size = nucleus->size();
      if (!size.has_value()) {
        add(out, "missing-size",
            "nucleus kernel '" + kernel.id + "' is missing the 'size' parameter");
      } else if (*size < 1) {
        add(out, "bad-size", "nucleus kernel '" + kernel.id + "' has size < 1");
      }
      if (nucleus->fallback_load.has_value() && *nucleus->fallback_load < 1) {
        add(out, "bad-load", "kernel '" + kernel.id + "' has fallback_load < 1");
      }
    } else if (const NonNucleusKernel* nn = kernel.as_non_nucleus()) {
      if (nn->load_ops < 1) {
        add(out, "bad-load", "non-nucleus kernel '" + kernel.id + "' has load < 1");
      }
    }
  }

  for (const EdgeSpec& edge : graph.edges) {
    const std::string label = edge.src + "->" + edge.dst;
    if (graph.find_kernel(edge.src) == nullptr) {
      add(out, "dangling-edge", "edge " + label + " references unknown kernel '" + edge.src + "'");
    }
    if (graph.find_kernel(edge.dst) == nullptr) {
      add(out, "dangling-edge", "edge " + label + " references unknown kernel '" + edge.dst + "'");
    }
    if (edge.src == edge.dst) {
      add(out, "self-edge", "edge " + label + " is a self-loop");
    }
    if (edge.tokens < 1) {
      add(out, "bad-tokens", "edge " + label + " has tokens < 1");
    }
    if (edge.format.block_size < 1) {
      add(out, "bad-block-size", "edge " + label + " has format block size < 1");
    }
  }

  if (has_cycle(graph)) {
    add(out, "cycle", "cycle detected: the waveform graph must be a DAG");
  }

  for (std::size_t i = 0; i < graph.constraints.size(); ++i) {
    const ConstraintSpec& constraint = graph.constraints[i];
    std::ostringstream label;
    label << "constraint #" << (i + 1);
    if (const PathLatencyConstraint* latency = constraint.as_path_latency()) {
      if (latency->path.empty()) {
        add(out, "empty-path", label.str() + " has an empty path");
      }
      for (const std::string& id : latency->path) {
        if (graph.find_kernel(id) == nullptr) {
          add(out, "constraint-unknown-kernel",
              label.str() + " references unknown kernel '" + id + "'");
        }
      }
      for (std::size_t k = 0; k + 1 < latency->path.size(); ++k) {
        if (!graph.has_edge(latency->path[k], latency->path[k + 1])) {
          add(out, "path-not-connected",
              label.str() + ": no edge " + latency->path[k] + "->" + latency->path[k + 1]);
        }
      }
      if (!(latency->bound_us > 0.0)) {
        add(out, "bad-bound", label.str() + " has a non-positive latency bound");
      }
    } else if (const ThroughputConstraint* throughput = constraint.as_throughput()) {
      if (!(throughput->min_frames_per_s > 0.0)) {
        add(out, "bad-bound", label.str() + " has a non-positive throughput bound");
      }
    }
  }

  return out;
}

}  // namespace wde
