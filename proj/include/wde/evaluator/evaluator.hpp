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

#ifndef WDE_EVALUATOR_EVALUATOR_HPP_
#define WDE_EVALUATOR_EVALUATOR_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wde/bsp.hpp"
#include "wde/graph.hpp"
#include "wde/mapping.hpp"
#include "wde/schedule.hpp"

namespace wde::eval {

/// The mapping-quality metric vector: data localization, communication
/// volume/time, synchronization points, PE utilization, and energy.
struct Metrics {
  double data_localization = 1.0;  // fraction of edge bytes staying on one PE
  std::int64_t comm_bytes = 0;
  double comm_time_s = 0.0;
  std::int64_t sync_count = 0;  // cross-PE dependency edges incl. glue boundaries
  std::map<std::string, double> utilization;  // per PE, busy / makespan
  double mean_utilization = 0.0;
  double energy_j = 0.0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

enum class ConstraintKind { PathLatency, Throughput };

struct ConstraintVerdict {
  ConstraintKind kind = ConstraintKind::PathLatency;
  std::string description;
  bool satisfied = false;
  double measured = 0.0;  // us for latency, frames/s for throughput
  double bound = 0.0;

  friend bool operator==(const ConstraintVerdict&, const ConstraintVerdict&) = default;
};

struct EvaluationReport {
  Metrics metrics;
  std::vector<ConstraintVerdict> verdicts;
  bool feasible = true;  // conjunction of all verdicts
  double score = 0.0;

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

struct ScoreWeights {
  double latency = 1.0;
  double communication = 1.0;
  double synchronization = 0.5;
  double utilization = 0.5;
  double energy = 1.0;

  bool all_zero() const {
    return latency == 0 && communication == 0 && synchronization == 0 && utilization == 0 &&
           energy == 0;
  }
};

/// Instance-wide upper bounds used to normalize score terms so weights stay
/// dimensionless. The bounds depend only on the instance (graph + BSP +
/// candidate sets), never on one particular binding.
struct InstanceBounds {
  double time_bound_s = 0.0;
  double bytes_bound = 0.0;
  double sync_bound = 0.0;
  double energy_bound_j = 0.0;
};

struct EvalConfig {
  ScoreWeights weights;
  double non_nucleus_energy_per_op_j = 1e-10;
};

Metrics compute_metrics(const WaveformGraph& graph, const Mapping& mapping,
                        const Schedule& schedule, const Bsp& bsp, const EvalConfig& config = {});

/// Checks every waveform constraint against the schedule. Throws
/// std::logic_error if a constraint references an unscheduled kernel.
std::vector<ConstraintVerdict> check_constraints(const WaveformGraph& graph,
                                                 const Schedule& schedule,
                                                 double throughput_fps);

/// Weighted sum of normalized metric terms; lower is better. Throws
/// std::invalid_argument when all weights are zero.
double score(const Metrics& metrics, double makespan_s, const InstanceBounds& bounds,
             const ScoreWeights& weights);

/// Full report: metrics, verdicts, feasibility, and score.
EvaluationReport evaluate(const WaveformGraph& graph, const Mapping& mapping,
                          const Schedule& schedule, const Bsp& bsp, const InstanceBounds& bounds,
                          const EvalConfig& config = {});

/// True when `a` ranks strictly better than `b`: feasible mappings beat
/// infeasible ones, then lower scores win.
bool ranks_better(const EvaluationReport& a, const EvaluationReport& b);

}  // namespace wde::eval

#endif  // WDE_EVALUATOR_EVALUATOR_HPP_
