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

#ifndef WDE_GRAPH_HPP_
#define WDE_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wde/data_format.hpp"

namespace wde {

/// Name of an algorithmic kernel in the nucleus library (e.g. "FFT").
/// Case-sensitive exact-match identity.
struct NucleusId {
  std::string name;

  friend bool operator==(const NucleusId&, const NucleusId&) = default;
  friend auto operator<=>(const NucleusId&, const NucleusId&) = default;
};

/// Kernel realized by a nucleus flavor from the BSP. `params` holds the
/// integer parameters the WDL declared; "size" is mandatory. A kernel with
/// `fallback_load` degrades to a plain software task when no flavor matches.
struct NucleusKernel {
  NucleusId nucleus;
  std::map<std::string, std::int64_t> params;
  std::optional<std::int64_t> fallback_load;

  std::optional<std::int64_t> size() const {
    auto it = params.find("size");
    if (it == params.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const NucleusKernel&, const NucleusKernel&) = default;
};

/// Computationally light kernel with no optimized flavor; modeled by an
/// abstract operation count per invocation.
struct NonNucleusKernel {
  std::int64_t load_ops = 1;

  friend bool operator==(const NonNucleusKernel&, const NonNucleusKernel&) = default;
};

struct KernelSpec {
  std::string id;
  std::variant<NucleusKernel, NonNucleusKernel> kind;
  std::int64_t invocations = 1;  // executions per frame

  bool is_nucleus() const { return std::holds_alternative<NucleusKernel>(kind); }
  const NucleusKernel* as_nucleus() const { return std::get_if<NucleusKernel>(&kind); }
  const NonNucleusKernel* as_non_nucleus() const { return std::get_if<NonNucleusKernel>(&kind); }

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

struct EdgeSpec {
  std::string src;
  std::string dst;
  std::int64_t tokens = 1;  // samples per frame
  DataFormat format;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct PathLatencyConstraint {
  std::vector<std::string> path;  // ordered kernel ids forming a directed path
  double bound_us = 0.0;

  friend bool operator==(const PathLatencyConstraint&, const PathLatencyConstraint&) = default;
};

struct ThroughputConstraint {
  double min_frames_per_s = 0.0;

  friend bool operator==(const ThroughputConstraint&, const ThroughputConstraint&) = default;
};

struct ConstraintSpec {
  std::variant<PathLatencyConstraint, ThroughputConstraint> kind;

  const PathLatencyConstraint* as_path_latency() const {
    return std::get_if<PathLatencyConstraint>(&kind);
  }
  const ThroughputConstraint* as_throughput() const {
    return std::get_if<ThroughputConstraint>(&kind);
  }

  friend bool operator==(const ConstraintSpec&, const ConstraintSpec&) = default;
};

/// The WDL model: a DAG of kernels and communication edges plus the
/// waveform's constraints. Declaration order is preserved and canonical.
struct WaveformGraph {
  std::string name;
  std::vector<KernelSpec> kernels;
  std::vector<EdgeSpec> edges;
  std::vector<ConstraintSpec> constraints;

  const KernelSpec* find_kernel(const std::string& id) const;
  bool has_edge(const std::string& src, const std::string& dst) const;

  friend bool operator==(const WaveformGraph&, const WaveformGraph&) = default;
};

/// One invariant violation found by validate_graph. Violations are data,
/// not failures; a valid graph yields an empty list.
struct Violation {
  std::string code;     // stable machine-readable tag, e.g. "cycle"
  std::string message;  // human-readable description

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every graph invariant: unique kernel ids, edge endpoints exist
/// and differ, the graph is acyclic, nucleus kernels carry a size >= 1,
/// loads/tokens/invocations are positive, and constraint paths are
/// connected directed paths with positive bounds.
std::vector<Violation> validate_graph(const WaveformGraph& graph);

}  // namespace wde

#endif  // WDE_GRAPH_HPP_
