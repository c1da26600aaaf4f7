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

#include "wde/mapper/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "wde/errors.hpp"
#include "wde/scheduler/scheduler.hpp"

namespace wde::mapper {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double edge_bytes(const EdgeSpec& edge) {
  return static_cast<double>(edge.tokens) * bytes_per_sample(edge.format.kind);
}

}  // namespace

bool compatible(const KernelSpec& kernel, const Flavor& flavor) {
  const NucleusKernel* nucleus = kernel.as_nucleus();
  if (nucleus == nullptr) return false;
  if (flavor.nucleus != nucleus->nucleus) return false;
  const auto size = nucleus->size();
  if (!size.has_value()) return false;
  // No PE saturation model in v1: a flavor's PE is always available.
  return flavor.sizes.contains(*size);
}

CandidateMap enumerate_candidates(const WaveformGraph& graph, const Bsp& bsp) {
  CandidateMap candidates;
  for (const KernelSpec& kernel : graph.kernels) {
    std::vector<BindingCandidate>& list = candidates[kernel.id];
    if (const NucleusKernel* nucleus = kernel.as_nucleus()) {
      for (const Flavor& flavor : bsp.flavors) {
        if (!compatible(kernel, flavor)) continue;
        BindingCandidate candidate;
        candidate.kernel = kernel.id;
        candidate.target = BoundTarget{BindingKind::Flavor, flavor.id};
        candidate.est_cycles = static_cast<double>(kernel.invocations) *
                               cycles_of(flavor.cost, *nucleus->size());
        list.push_back(candidate);
      }
      if (list.empty() && nucleus->fallback_load.has_value()) {
        // No flavor in the BSP: build it the conventional way on any
        // programmable PE.
        for (const ProcessingElement& pe : bsp.platform.pes) {
          if (pe.cls == PeClass::Hwacc) continue;
          BindingCandidate candidate;
          candidate.kernel = kernel.id;
          candidate.target = BoundTarget{BindingKind::Pe, pe.id};
          candidate.est_cycles = static_cast<double>(kernel.invocations) *
                                 static_cast<double>(*nucleus->fallback_load) /
                                 pe.gpp_efficiency;
          list.push_back(candidate);
        }
      }
    } else {
      const NonNucleusKernel* nn = kernel.as_non_nucleus();
      for (const ProcessingElement& pe : bsp.platform.pes) {
        if (pe.cls == PeClass::Hwacc) continue;
        BindingCandidate candidate;
        candidate.kernel = kernel.id;
        candidate.target = BoundTarget{BindingKind::Pe, pe.id};
        candidate.est_cycles = static_cast<double>(kernel.invocations) *
                               static_cast<double>(nn->load_ops) / pe.gpp_efficiency;
        list.push_back(candidate);
      }
    }
    std::sort(list.begin(), list.end(), [](const BindingCandidate& a, const BindingCandidate& b) {
      return a.target.id < b.target.id;
    });
  }
  return candidates;
}

namespace {

/// Format seen on the producer or consumer side of an edge: the bound
/// flavor's interface format, or the edge's declared format for kernels
/// running as plain software.
DataFormat side_format(const EdgeSpec& edge, const BoundTarget& target, bool producer,
                       const Bsp& bsp) {
  if (target.kind == BindingKind::Flavor) {
    const Flavor* flavor = bsp.find_flavor(target.id);
    return producer ? flavor->output_format : flavor->input_format;
  }
  return edge.format;
}

}  // namespace

std::vector<GlueTask> insert_glue(const WaveformGraph& graph,
                                  const std::map<std::string, BoundTarget>& binding,
                                  const Bsp& bsp) {
  std::vector<GlueTask> glue;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const EdgeSpec& edge = graph.edges[e];
    const BoundTarget& src_target = binding.at(edge.src);
    const BoundTarget& dst_target = binding.at(edge.dst);
    const DataFormat from = side_format(edge, src_target, /*producer=*/true, bsp);
    const DataFormat to = side_format(edge, dst_target, /*producer=*/false, bsp);
    if (from == to) continue;
    const auto cycles_per_sample = bsp.glue.cycles_per_sample(from.kind, to.kind);
    if (!cycles_per_sample.has_value()) {
      throw UnmappableFormatError(
          edge.src, edge.dst,
          "edge " + edge.src + "->" + edge.dst + ": no conversion rule " +
              std::string(format_kind_name(from.kind)) + " -> " +
              std::string(format_kind_name(to.kind)));
    }
    GlueTask task;
    task.src = edge.src;
    task.dst = edge.dst;
    task.edge_index = e;
    task.from_format = from;
    task.to_format = to;
    task.placed_on = sched::pe_of(dst_target, bsp);
    task.cycles = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(
               std::ceil(*cycles_per_sample * static_cast<double>(edge.tokens))));
    glue.push_back(std::move(task));
  }
  return glue;
}

eval::InstanceBounds compute_instance_bounds(const WaveformGraph& graph, const Bsp& bsp,
                                             const CandidateMap& candidates,
                                             double non_nucleus_energy_per_op_j) {
  eval::InstanceBounds bounds;
  for (const KernelSpec& kernel : graph.kernels) {
    auto it = candidates.find(kernel.id);
    if (it == candidates.end()) continue;
    double max_duration = 0.0;
    double max_energy = 0.0;
    for (const BindingCandidate& candidate : it->second) {
      max_duration =
          std::max(max_duration, sched::kernel_duration_s(kernel, candidate.target, bsp));
      const double invocations = static_cast<double>(kernel.invocations);
      if (candidate.target.kind == BindingKind::Flavor) {
        const Flavor* flavor = bsp.find_flavor(candidate.target.id);
        max_energy = std::max(
            max_energy,
            invocations * energy_per_invocation_j(flavor->cost, *kernel.as_nucleus()->size()));
      } else {
        std::int64_t load = 0;
        if (const NonNucleusKernel* nn = kernel.as_non_nucleus()) {
          load = nn->load_ops;
        } else if (kernel.as_nucleus()->fallback_load.has_value()) {
          load = *kernel.as_nucleus()->fallback_load;
        }
        max_energy = std::max(
            max_energy, invocations * static_cast<double>(load) * non_nucleus_energy_per_op_j);
      }
    }
    bounds.time_bound_s += max_duration;
    bounds.energy_bound_j += max_energy;
  }

  double max_glue_cost = 0.0;
  for (FormatKind from : {FormatKind::Q15, FormatKind::Q31, FormatKind::Float32, FormatKind::CFloat32}) {
    for (FormatKind to : {FormatKind::Q15, FormatKind::Q31, FormatKind::Float32, FormatKind::CFloat32}) {
      if (auto cost = bsp.glue.cycles_per_sample(from, to)) {
        max_glue_cost = std::max(max_glue_cost, *cost);
      }
    }
  }
  double min_clock = kInfinity;
  for (const ProcessingElement& pe : bsp.platform.pes) min_clock = std::min(min_clock, pe.clock_hz);

  for (const EdgeSpec& edge : graph.edges) {
    const double bytes = edge_bytes(edge);
    bounds.bytes_bound += bytes;
    double max_transfer = 0.0;
    double max_route_energy = 0.0;
    for (const ProcessingElement& a : bsp.platform.pes) {
      for (const ProcessingElement& b : bsp.platform.pes) {
        if (a.id == b.id) continue;
        auto hops = sched::route_between(bsp.platform, a.id, b.id, bytes);
        if (!hops.has_value()) continue;
        double duration = 0.0;
        double energy = 0.0;
        for (const sched::RouteHop& hop : *hops) {
          duration += hop.duration_s;
          energy += hop.energy_j;
        }
        max_transfer = std::max(max_transfer, duration);
        max_route_energy = std::max(max_route_energy, energy);
      }
    }
    bounds.time_bound_s += max_transfer;
    bounds.energy_bound_j += max_route_energy;
    if (min_clock < kInfinity && max_glue_cost > 0.0) {
      bounds.time_bound_s += std::ceil(max_glue_cost * static_cast<double>(edge.tokens)) / min_clock;
    }
  }
  bounds.sync_bound = static_cast<double>(graph.edges.size());
  return bounds;
}

namespace {

// Category 0 = feasible, 1 = schedulable but constraint-violating,
// 2 = structurally unmappable (glue or routing failed).
struct BindingEvaluation {
  int category = 2;
  double score = kInfinity;
  std::optional<EvaluatedMapping> result;
  std::string note;
};

BindingEvaluation evaluate_binding(const WaveformGraph& graph, const Bsp& bsp,
                                   std::map<std::string, BoundTarget> binding,
                                   const eval::InstanceBounds& bounds,
                                   const eval::EvalConfig& config) {
  BindingEvaluation out;
  try {
    Mapping mapping;
    mapping.glue = insert_glue(graph, binding, bsp);
    mapping.binding = std::move(binding);
    Schedule schedule = sched::list_schedule(graph, mapping, bsp);
    eval::EvaluationReport report = eval::evaluate(graph, mapping, schedule, bsp, bounds, config);
    out.category = report.feasible ? 0 : 1;
    out.score = report.score;
    out.result = EvaluatedMapping{std::move(mapping), std::move(schedule), std::move(report)};
  } catch (const UnmappableFormatError& error) {
    out.note = error.what();
  } catch (const UnroutableEdgeError& error) {
    out.note = error.what();
  }
  return out;
}

// Deterministic ranking key for search: category, then score, then the
// lexicographic position of the binding itself.
using RankKey = std::tuple<int, double, std::uint64_t>;

struct SearchSpace {
  std::vector<std::string> kernel_ids;                       // sorted
  std::vector<const std::vector<BindingCandidate>*> options; // aligned with kernel_ids
};

std::map<std::string, BoundTarget> decode(const SearchSpace& space, std::uint64_t index) {
  std::map<std::string, BoundTarget> binding;
  for (std::size_t k = space.kernel_ids.size(); k-- > 0;) {
    const auto& list = *space.options[k];
    binding[space.kernel_ids[k]] = list[index % list.size()].target;
    index /= list.size();
  }
  return binding;
}

InfeasibilityReport summarize_infeasibility(const std::vector<std::string>& empty_kernels,
                                            const BindingEvaluation* best,
                                            const std::vector<std::string>& structural_notes) {
  InfeasibilityReport report;
  report.kernels_without_candidates = empty_kernels;
  if (best != nullptr && best->category == 1 && best->result.has_value()) {
    for (const eval::ConstraintVerdict& verdict : best->result->report.verdicts) {
      if (verdict.satisfied) continue;
      std::ostringstream note;
      note << "best candidate violates " << verdict.description << ": measured "
           << verdict.measured << ", bound " << verdict.bound;
      report.notes.push_back(note.str());
    }
  }
  std::set<std::string> seen;
  for (const std::string& note : structural_notes) {
    if (seen.insert(note).second && seen.size() <= 5) report.notes.push_back(note);
  }
  return report;
}

unsigned effective_threads(unsigned requested, std::uint64_t work_items) {
  unsigned threads = requested;
  if (threads == 0) {
    threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
  }
  if (work_items < 512) return 1;  // not worth spawning workers
  return static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, work_items / 64)));
}

}  // namespace

MapOutcome map_exhaustive(const WaveformGraph& graph, const Bsp& bsp, const MapConfig& config) {
  MapOutcome outcome;
  const CandidateMap candidates = enumerate_candidates(graph, bsp);

  std::vector<std::string> empty_kernels;
  for (const auto& [kernel_id, list] : candidates) {
    if (list.empty()) empty_kernels.push_back(kernel_id);
  }
  if (!empty_kernels.empty()) {
    outcome.status = MapStatus::Infeasible;
    outcome.infeasibility = summarize_infeasibility(empty_kernels, nullptr, {});
    return outcome;
  }

  SearchSpace space;
  double product = 1.0;
  for (const auto& [kernel_id, list] : candidates) {
    space.kernel_ids.push_back(kernel_id);
    space.options.push_back(&list);
    product *= static_cast<double>(list.size());
  }
  outcome.candidate_product = product;
  if (product > static_cast<double>(config.enumeration_bound)) {
    outcome.status = MapStatus::BoundExceeded;
    return outcome;
  }
  const std::uint64_t total = space.kernel_ids.empty() ? 1 : static_cast<std::uint64_t>(product);

  const eval::InstanceBounds bounds =
      compute_instance_bounds(graph, bsp, candidates, config.non_nucleus_energy_per_op_j);
  const eval::EvalConfig eval_config = config.eval_config();
  const std::size_t top_k = static_cast<std::size_t>(std::max(1, config.top_k));

  struct WorkerState {
    std::optional<RankKey> best_key;
    std::optional<BindingEvaluation> best;
    std::vector<std::pair<RankKey, EvaluatedMapping>> top;
    std::vector<std::string> structural_notes;
    std::uint64_t evaluated = 0;
  };

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, WorkerState& state) {
    for (std::uint64_t index = begin; index < end; ++index) {
      BindingEvaluation evaluation =
          evaluate_binding(graph, bsp, decode(space, index), bounds, eval_config);
      ++state.evaluated;
      if (evaluation.category == 2) {
        if (state.structural_notes.size() < 8) state.structural_notes.push_back(evaluation.note);
        continue;
      }
      const RankKey key{evaluation.category, evaluation.score, index};
      if (!state.best_key.has_value() || key < *state.best_key) {
        state.best_key = key;
        state.best = evaluation;
      }
      state.top.push_back({key, *evaluation.result});
      std::sort(state.top.begin(), state.top.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (state.top.size() > top_k) state.top.resize(top_k);
    }
  };

  const unsigned threads = effective_threads(config.threads, total);
  std::vector<WorkerState> states(threads);
  if (threads == 1) {
    run_range(0, total, states[0]);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
      workers.emplace_back([&, begin, end, w] { run_range(begin, end, states[w]); });
    }
    for (std::thread& worker : workers) worker.join();
  }

  // Deterministic reduction: keys embed the binding's lexicographic index,
  // so the merged order is independent of thread interleaving.
  std::optional<RankKey> best_key;
  std::optional<BindingEvaluation> best;
  std::vector<std::pair<RankKey, EvaluatedMapping>> merged_top;
  std::vector<std::string> structural_notes;
  for (WorkerState& state : states) {
    outcome.evaluated_bindings += state.evaluated;
    if (state.best_key.has_value() && (!best_key.has_value() || *state.best_key < *best_key)) {
      best_key = state.best_key;
      best = std::move(state.best);
    }
    for (auto& entry : state.top) merged_top.push_back(std::move(entry));
    for (auto& note : state.structural_notes) structural_notes.push_back(std::move(note));
  }
  std::sort(merged_top.begin(), merged_top.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (merged_top.size() > top_k) merged_top.resize(top_k);
  for (auto& [key, mapping] : merged_top) outcome.ranked.push_back(std::move(mapping));

  if (best.has_value() && best->category == 0) {
    outcome.status = MapStatus::Found;
    outcome.best = best->result;
  } else {
    outcome.status = MapStatus::Infeasible;
    std::sort(structural_notes.begin(), structural_notes.end());
    outcome.infeasibility = summarize_infeasibility(
        {}, best.has_value() ? &*best : nullptr, structural_notes);
  }
  return outcome;
}

namespace {

std::vector<std::string> topological_kernel_order(const WaveformGraph& graph) {
  std::map<std::string, int> in_degree;
  std::map<std::string, std::vector<std::string>> successors;
  for (const KernelSpec& kernel : graph.kernels) in_degree[kernel.id] = 0;
  for (const EdgeSpec& edge : graph.edges) {
    successors[edge.src].push_back(edge.dst);
    ++in_degree[edge.dst];
  }
  std::set<std::string> ready;
  for (const auto& [id, degree] : in_degree) {
    if (degree == 0) ready.insert(id);
  }
  std::vector<std::string> order;
  while (!ready.empty()) {
    const std::string id = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(id);
    for (const std::string& next : successors[id]) {
      if (--in_degree[next] == 0) ready.insert(next);
    }
  }
  return order;
}

/// Glue cycles this candidate would induce against already-bound neighbors;
/// forbidden conversions count as effectively infinite.
double format_penalty(const WaveformGraph& graph, const Bsp& bsp, const std::string& kernel_id,
                      const BoundTarget& target,
                      const std::map<std::string, BoundTarget>& bound_so_far) {
  double penalty = 0.0;
  for (const EdgeSpec& edge : graph.edges) {
    const bool is_producer = edge.src == kernel_id;
    const bool is_consumer = edge.dst == kernel_id;
    if (!is_producer && !is_consumer) continue;
    const std::string& other = is_producer ? edge.dst : edge.src;
    auto other_it = bound_so_far.find(other);
    if (other_it == bound_so_far.end()) continue;
    const DataFormat from = is_producer ? side_format(edge, target, true, bsp)
                                        : side_format(edge, other_it->second, true, bsp);
    const DataFormat to = is_consumer ? side_format(edge, target, false, bsp)
                                      : side_format(edge, other_it->second, false, bsp);
    if (from == to) continue;
    const auto cycles_per_sample = bsp.glue.cycles_per_sample(from.kind, to.kind);
    if (!cycles_per_sample.has_value()) {
      penalty += 1e18;  // steer away from unmappable pairings
    } else {
      penalty += *cycles_per_sample * static_cast<double>(edge.tokens);
    }
  }
  return penalty;
}

}  // namespace

MapOutcome map_greedy(const WaveformGraph& graph, const Bsp& bsp, const MapConfig& config) {
  MapOutcome outcome;
  const CandidateMap candidates = enumerate_candidates(graph, bsp);

  std::vector<std::string> empty_kernels;
  for (const auto& [kernel_id, list] : candidates) {
    if (list.empty()) empty_kernels.push_back(kernel_id);
  }
  if (!empty_kernels.empty()) {
    outcome.status = MapStatus::Infeasible;
    outcome.infeasibility = summarize_infeasibility(empty_kernels, nullptr, {});
    return outcome;
  }

  const eval::InstanceBounds bounds =
      compute_instance_bounds(graph, bsp, candidates, config.non_nucleus_energy_per_op_j);
  const eval::EvalConfig eval_config = config.eval_config();

  // Construction: cheapest candidate given the neighbors bound so far.
  std::map<std::string, BoundTarget> binding;
  for (const std::string& kernel_id : topological_kernel_order(graph)) {
    const std::vector<BindingCandidate>& list = candidates.at(kernel_id);
    const BindingCandidate* chosen = nullptr;
    double chosen_cost = kInfinity;
    for (const BindingCandidate& candidate : list) {
      const double cost = candidate.est_cycles +
                          format_penalty(graph, bsp, kernel_id, candidate.target, binding);
      if (chosen == nullptr || cost < chosen_cost) {
        chosen = &candidate;
        chosen_cost = cost;
      }
    }
    binding[kernel_id] = chosen->target;
  }

  BindingEvaluation current = evaluate_binding(graph, bsp, binding, bounds, eval_config);
  outcome.evaluated_bindings = 1;
  std::vector<std::string> structural_notes;
  if (current.category == 2) structural_notes.push_back(current.note);

  // Local search: first-improvement single-kernel rebinds.
  int moves = 0;
  bool improved = true;
  while (improved && moves < config.move_budget) {
    improved = false;
    for (const auto& [kernel_id, list] : candidates) {
      for (const BindingCandidate& candidate : list) {
        if (candidate.target == binding.at(kernel_id)) continue;
        std::map<std::string, BoundTarget> trial = binding;
        trial[kernel_id] = candidate.target;
        BindingEvaluation evaluation = evaluate_binding(graph, bsp, trial, bounds, eval_config);
        ++outcome.evaluated_bindings;
        if (evaluation.category == 2) {
          if (structural_notes.size() < 8) structural_notes.push_back(evaluation.note);
          continue;
        }
        if (std::make_pair(evaluation.category, evaluation.score) <
            std::make_pair(current.category, current.score)) {
          binding = std::move(trial);
          current = std::move(evaluation);
          improved = true;
          if (++moves >= config.move_budget) break;
        }
      }
      if (moves >= config.move_budget) break;
    }
  }

  if (current.category == 0) {
    outcome.status = MapStatus::Found;
    outcome.best = current.result;
    outcome.ranked.push_back(*current.result);
  } else {
    outcome.status = MapStatus::Infeasible;
    std::sort(structural_notes.begin(), structural_notes.end());
    outcome.infeasibility = summarize_infeasibility(
        {}, current.category == 1 ? &current : nullptr, structural_notes);
    if (current.result.has_value()) outcome.ranked.push_back(*current.result);
  }
  return outcome;
}

}  // namespace wde::mapper
