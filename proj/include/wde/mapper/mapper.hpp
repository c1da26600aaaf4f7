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

#ifndef WDE_MAPPER_MAPPER_HPP_
#define WDE_MAPPER_MAPPER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wde/bsp.hpp"
#include "wde/evaluator/evaluator.hpp"
#include "wde/graph.hpp"
#include "wde/mapping.hpp"
#include "wde/schedule.hpp"

namespace wde::mapper {

/// One spatial-mapping option for a kernel: a flavor (nucleus) or a PE
/// (non-nucleus and fallback kernels).
struct BindingCandidate {
  std::string kernel;
  BoundTarget target;
  double est_cycles = 0.0;
  double format_penalty_cycles = 0.0;
};

using CandidateMap = std::map<std::string, std::vector<BindingCandidate>>;

/// A flavor implements a nucleus kernel iff the nucleus names match and the
/// kernel's size is supported. Genre members declared under the same nucleus
/// bind to the same flavors.
bool compatible(const KernelSpec& kernel, const Flavor& flavor);

/// All options per kernel, sorted by target id. Nucleus kernels with no
/// compatible flavor degrade to PE candidates when they declare a fallback
/// load; otherwise their list is empty (and reported as such).
CandidateMap enumerate_candidates(const WaveformGraph& graph, const Bsp& bsp);

/// Glue tasks for every edge whose producer-side format differs from the
/// consumer-side format, placed on the consumer's PE. Throws
/// UnmappableFormatError when the BSP has no conversion rule for a needed
/// format-kind pair.
std::vector<GlueTask> insert_glue(const WaveformGraph& graph,
                                  const std::map<std::string, BoundTarget>& binding,
                                  const Bsp& bsp);

/// Normalization bounds covering every reachable binding of this instance.
eval::InstanceBounds compute_instance_bounds(const WaveformGraph& graph, const Bsp& bsp,
                                             const CandidateMap& candidates,
                                             double non_nucleus_energy_per_op_j = 1e-10);

struct MapConfig {
  eval::ScoreWeights weights;
  double non_nucleus_energy_per_op_j = 1e-10;
  std::int64_t enumeration_bound = 1'000'000;
  int move_budget = 1000;
  int top_k = 1;
  unsigned threads = 0;  // 0 = pick a default

  eval::EvalConfig eval_config() const {
    return eval::EvalConfig{weights, non_nucleus_energy_per_op_j};
  }
};

struct EvaluatedMapping {
  Mapping mapping;
  Schedule schedule;
  eval::EvaluationReport report;
};

struct InfeasibilityReport {
  std::vector<std::string> kernels_without_candidates;
  std::vector<std::string> notes;  // structural failures, violated constraints
};

enum class MapStatus { Found, Infeasible, BoundExceeded };

struct MapOutcome {
  MapStatus status = MapStatus::Infeasible;
  std::optional<EvaluatedMapping> best;      // set when status == Found
  std::vector<EvaluatedMapping> ranked;      // up to top_k results, best first
  InfeasibilityReport infeasibility;         // set when status == Infeasible
  double candidate_product = 0.0;            // set when status == BoundExceeded
  std::uint64_t evaluated_bindings = 0;
};

/// Enumerates every total binding, schedules and evaluates each, and returns
/// the feasible mapping with the lowest score. Ties resolve to the binding
/// that is lexicographically first by (kernel id, target id). Refuses when
/// the candidate product exceeds config.enumeration_bound.
MapOutcome map_exhaustive(const WaveformGraph& graph, const Bsp& bsp, const MapConfig& config);

/// Cheapest-candidate construction in topological order (est_cycles plus
/// format penalty against already-bound neighbors), then single-kernel
/// rebind local search accepting strictly improving moves until a fixpoint
/// or the move budget.
MapOutcome map_greedy(const WaveformGraph& graph, const Bsp& bsp, const MapConfig& config);

}  // namespace wde::mapper

#endif  // WDE_MAPPER_MAPPER_HPP_
