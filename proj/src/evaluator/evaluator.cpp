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

#include "wde/evaluator/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wde/errors.hpp"
#include "wde/scheduler/scheduler.hpp"

namespace wde::eval {

namespace {

double edge_bytes(const EdgeSpec& edge) {
  return static_cast<double>(edge.tokens) * bytes_per_sample(edge.format.kind);
}

}  // namespace

Metrics compute_metrics(const WaveformGraph& graph, const Mapping& mapping,
                        const Schedule& schedule, const Bsp& bsp, const EvalConfig& config) {
  Metrics metrics;

  double total_bytes = 0.0;
  double local_bytes = 0.0;
  for (const EdgeSpec& edge : graph.edges) {
    const std::string src_pe = sched::pe_of(mapping.binding.at(edge.src), bsp);
    const std::string dst_pe = sched::pe_of(mapping.binding.at(edge.dst), bsp);
    const double bytes = edge_bytes(edge);
    total_bytes += bytes;
    if (src_pe == dst_pe) {
      local_bytes += bytes;
    } else {
      metrics.comm_bytes += static_cast<std::int64_t>(bytes);
      ++metrics.sync_count;
      auto hops = sched::route_between(bsp.platform, src_pe, dst_pe, bytes);
      if (hops.has_value()) {
        for (const sched::RouteHop& hop : *hops) metrics.energy_j += hop.energy_j;
      }
    }
  }
  metrics.data_localization = total_bytes > 0.0 ? local_bytes / total_bytes : 1.0;

  for (const LinkEntry& entry : schedule.link_entries) {
    metrics.comm_time_s += entry.end_s - entry.start_s;
  }

  std::map<std::string, double> busy;
  for (const ScheduleEntry& entry : schedule.entries) {
    busy[entry.pe] += entry.end_s - entry.start_s;
  }
  double utilization_sum = 0.0;
  for (const ProcessingElement& pe : bsp.platform.pes) {
    const double value =
        schedule.makespan_s > 0.0 ? busy[pe.id] / schedule.makespan_s : 0.0;
    metrics.utilization[pe.id] = value;
    utilization_sum += value;
  }
  metrics.mean_utilization =
      bsp.platform.pes.empty() ? 0.0 : utilization_sum / static_cast<double>(bsp.platform.pes.size());

  for (const KernelSpec& kernel : graph.kernels) {
    const BoundTarget& target = mapping.binding.at(kernel.id);
    const double invocations = static_cast<double>(kernel.invocations);
    if (target.kind == BindingKind::Flavor) {
      const Flavor* flavor = bsp.find_flavor(target.id);
      const NucleusKernel* nucleus = kernel.as_nucleus();
      metrics.energy_j += invocations * energy_per_invocation_j(flavor->cost, *nucleus->size());
    } else {
      std::int64_t load = 0;
      if (const NonNucleusKernel* nn = kernel.as_non_nucleus()) {
        load = nn->load_ops;
      } else if (kernel.as_nucleus()->fallback_load.has_value()) {
        load = *kernel.as_nucleus()->fallback_load;
      }
      metrics.energy_j +=
          invocations * static_cast<double>(load) * config.non_nucleus_energy_per_op_j;
    }
  }
  return metrics;
}

std::vector<ConstraintVerdict> check_constraints(const WaveformGraph& graph,
                                                 const Schedule& schedule,
                                                 double throughput_fps) {
  std::map<std::string, const ScheduleEntry*> by_task;
  for (const ScheduleEntry& entry : schedule.entries) by_task[entry.task] = &entry;

  std::vector<ConstraintVerdict> verdicts;
  for (const ConstraintSpec& constraint : graph.constraints) {
    if (const PathLatencyConstraint* latency = constraint.as_path_latency()) {
      for (const std::string& id : latency->path) {
        if (by_task.count(id) == 0) {
          throw std::logic_error("constraint references unscheduled kernel '" + id + "'");
        }
      }
      const double start = by_task.at(latency->path.front())->start_s;
      const double end = by_task.at(latency->path.back())->end_s;
      const double measured_us = (end - start) * 1e6;
      std::ostringstream description;
      description << "latency(path = [";
      for (std::size_t i = 0; i < latency->path.size(); ++i) {
        if (i != 0) description << ", ";
        description << latency->path[i];
      }
      description << "])";
      verdicts.push_back(ConstraintVerdict{ConstraintKind::PathLatency, description.str(),
                                           measured_us <= latency->bound_us, measured_us,
                                           latency->bound_us});
    } else if (const ThroughputConstraint* throughput = constraint.as_throughput()) {
      verdicts.push_back(ConstraintVerdict{ConstraintKind::Throughput, "throughput",
                                           throughput_fps >= throughput->min_frames_per_s,
                                           throughput_fps, throughput->min_frames_per_s});
    }
  }
  return verdicts;
}

double score(const Metrics& metrics, double makespan_s, const InstanceBounds& bounds,
             const ScoreWeights& weights) {
  if (weights.all_zero()) {
    throw std::invalid_argument("score: all weights are zero");
  }
  auto normalized = [](double value, double bound) { return bound > 0.0 ? value / bound : 0.0; };
  return weights.latency * normalized(makespan_s, bounds.time_bound_s) +
         weights.communication * normalized(static_cast<double>(metrics.comm_bytes), bounds.bytes_bound) +
         weights.synchronization * normalized(static_cast<double>(metrics.sync_count), bounds.sync_bound) +
         weights.utilization * (1.0 - metrics.mean_utilization) +
         weights.energy * normalized(metrics.energy_j, bounds.energy_bound_j);
}

EvaluationReport evaluate(const WaveformGraph& graph, const Mapping& mapping,
                          const Schedule& schedule, const Bsp& bsp, const InstanceBounds& bounds,
                          const EvalConfig& config) {
  EvaluationReport report;
  report.metrics = compute_metrics(graph, mapping, schedule, bsp, config);
  const double throughput = sched::steady_state_throughput(schedule, bsp.platform);
  report.verdicts = check_constraints(graph, schedule, throughput);
  report.feasible = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                                [](const ConstraintVerdict& v) { return v.satisfied; });
  report.score = score(report.metrics, schedule.makespan_s, bounds, config.weights);
  return report;
}

bool ranks_better(const EvaluationReport& a, const EvaluationReport& b) {
  if (a.feasible != b.feasible) return a.feasible;
  return a.score < b.score;
}

}  // namespace wde::eval
