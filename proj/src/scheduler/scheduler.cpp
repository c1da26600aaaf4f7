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

#include "wde/scheduler/scheduler.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <stdexcept>

#include "wde/errors.hpp"

namespace wde::sched {

std::string pe_of(const BoundTarget& target, const Bsp& bsp) {
  if (target.kind == BindingKind::Pe) return target.id;
  const Flavor* flavor = bsp.find_flavor(target.id);
  if (flavor == nullptr) {
    throw Error("unknown flavor '" + target.id + "' in binding");
  }
  return flavor->pe;
}

double kernel_duration_s(const KernelSpec& kernel, const BoundTarget& target, const Bsp& bsp) {
  const double invocations = static_cast<double>(kernel.invocations);
  if (target.kind == BindingKind::Flavor) {
    const Flavor* flavor = bsp.find_flavor(target.id);
    if (flavor == nullptr) throw Error("unknown flavor '" + target.id + "' in binding");
    const ProcessingElement* pe = bsp.platform.find_pe(flavor->pe);
    if (pe == nullptr) throw Error("flavor '" + flavor->id + "' sits on unknown PE");
    const NucleusKernel* nucleus = kernel.as_nucleus();
    if (nucleus == nullptr) throw Error("non-nucleus kernel bound to a flavor");
    return invocations * cycles_of(flavor->cost, *nucleus->size()) / pe->clock_hz;
  }
  const ProcessingElement* pe = bsp.platform.find_pe(target.id);
  if (pe == nullptr) throw Error("unknown PE '" + target.id + "' in binding");
  std::int64_t load = 0;
  if (const NonNucleusKernel* nn = kernel.as_non_nucleus()) {
    load = nn->load_ops;
  } else {
    const NucleusKernel* nucleus = kernel.as_nucleus();
    if (!nucleus->fallback_load.has_value()) {
      throw Error("nucleus kernel '" + kernel.id + "' bound to a PE without a fallback load");
    }
    load = *nucleus->fallback_load;
  }
  return invocations * static_cast<double>(load) / (pe->gpp_efficiency * pe->clock_hz);
}

double glue_duration_s(const GlueTask& glue, const Platform& platform) {
  const ProcessingElement* pe = platform.find_pe(glue.placed_on);
  if (pe == nullptr) throw Error("glue task placed on unknown PE '" + glue.placed_on + "'");
  return static_cast<double>(glue.cycles) / pe->clock_hz;
}

namespace {

double hop_duration(const InterconnectLink& link, double bytes) {
  return link.latency_s + bytes / link.bandwidth_bytes_per_s;
}

}  // namespace

std::optional<std::vector<RouteHop>> route_between(const Platform& platform,
                                                   const std::string& src_pe,
                                                   const std::string& dst_pe, double bytes) {
  if (const InterconnectLink* direct = platform.find_link_between(src_pe, dst_pe)) {
    return std::vector<RouteHop>{
        {direct->id, hop_duration(*direct, bytes), bytes * direct->energy_per_byte_j}};
  }
  // Two-hop fallback: cheapest total duration, ties by intermediate PE id.
  const InterconnectLink* best_first = nullptr;
  const InterconnectLink* best_second = nullptr;
  double best_duration = std::numeric_limits<double>::infinity();
  std::string best_via;
  for (const ProcessingElement& via : platform.pes) {
    if (via.id == src_pe || via.id == dst_pe) continue;
    const InterconnectLink* first = platform.find_link_between(src_pe, via.id);
    const InterconnectLink* second = platform.find_link_between(via.id, dst_pe);
    if (first == nullptr || second == nullptr) continue;
    const double total = hop_duration(*first, bytes) + hop_duration(*second, bytes);
    if (total < best_duration || (total == best_duration && via.id < best_via)) {
      best_duration = total;
      best_first = first;
      best_second = second;
      best_via = via.id;
    }
  }
  if (best_first == nullptr) return std::nullopt;
  return std::vector<RouteHop>{
      {best_first->id, hop_duration(*best_first, bytes), bytes * best_first->energy_per_byte_j},
      {best_second->id, hop_duration(*best_second, bytes),
       bytes * best_second->energy_per_byte_j}};
}

namespace {

double edge_bytes(const EdgeSpec& edge) {
  return static_cast<double>(edge.tokens) * bytes_per_sample(edge.format.kind);
}

const BoundTarget& binding_of(const Mapping& mapping, const std::string& kernel_id) {
  auto it = mapping.binding.find(kernel_id);
  if (it == mapping.binding.end()) {
    throw Error("kernel '" + kernel_id + "' is not bound");
  }
  return it->second;
}

std::optional<std::vector<RouteHop>> edge_route(const EdgeSpec& edge, const Mapping& mapping,
                                                const Bsp& bsp) {
  const std::string src_pe = pe_of(binding_of(mapping, edge.src), bsp);
  const std::string dst_pe = pe_of(binding_of(mapping, edge.dst), bsp);
  if (src_pe == dst_pe) return std::vector<RouteHop>{};
  return route_between(bsp.platform, src_pe, dst_pe, edge_bytes(edge));
}

}  // namespace

double transfer_duration_s(const EdgeSpec& edge, const Mapping& mapping, const Bsp& bsp) {
  auto hops = edge_route(edge, mapping, bsp);
  if (!hops.has_value()) {
    throw UnroutableEdgeError(edge.src, edge.dst,
                              "no route for edge " + edge.src + "->" + edge.dst +
                                  ": PEs are not connected within two hops");
  }
  double total = 0.0;
  for (const RouteHop& hop : *hops) total += hop.duration_s;
  return total;
}

namespace {

struct Task {
  std::string id;
  std::string pe;
  double duration_s = 0.0;
  std::vector<std::size_t> incoming;  // arc indices
  std::vector<std::size_t> outgoing;
};

struct Arc {
  std::size_t tail = 0;  // task indices
  std::size_t head = 0;
  // Edge the arc realizes, when data moves between kernels or into glue;
  // glue->consumer arcs stay local and carry no transfer.
  std::optional<std::size_t> edge_index;
  double comm_estimate_s = 0.0;
};

}  // namespace

namespace {

Schedule schedule_impl(const WaveformGraph& graph, const Mapping& mapping, const Bsp& bsp,
                       const std::vector<std::string>* explicit_order) {
  std::vector<Task> tasks;
  std::map<std::string, std::size_t> task_index;

  for (const KernelSpec& kernel : graph.kernels) {
    const BoundTarget& target = binding_of(mapping, kernel.id);
    Task task;
    task.id = kernel.id;
    task.pe = pe_of(target, bsp);
    task.duration_s = kernel_duration_s(kernel, target, bsp);
    task_index[task.id] = tasks.size();
    tasks.push_back(std::move(task));
  }
  std::map<std::size_t, std::size_t> glue_by_edge;  // edge index -> task index
  for (const GlueTask& glue : mapping.glue) {
    Task task;
    task.id = glue.task_id();
    task.pe = glue.placed_on;
    task.duration_s = glue_duration_s(glue, bsp.platform);
    glue_by_edge[glue.edge_index] = tasks.size();
    task_index[task.id] = tasks.size();
    tasks.push_back(std::move(task));
  }

  std::vector<Arc> arcs;
  auto add_arc = [&](std::size_t tail, std::size_t head, std::optional<std::size_t> edge_index,
                     double comm) {
    const std::size_t arc_index = arcs.size();
    arcs.push_back(Arc{tail, head, edge_index, comm});
    tasks[tail].outgoing.push_back(arc_index);
    tasks[head].incoming.push_back(arc_index);
  };

  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const EdgeSpec& edge = graph.edges[e];
    const std::size_t src = task_index.at(edge.src);
    const std::size_t dst = task_index.at(edge.dst);
    const double comm = transfer_duration_s(edge, mapping, bsp);
    auto glue_it = glue_by_edge.find(e);
    if (glue_it != glue_by_edge.end()) {
      add_arc(src, glue_it->second, e, comm);
      add_arc(glue_it->second, dst, std::nullopt, 0.0);
    } else {
      add_arc(src, dst, e, comm);
    }
  }

  // Upward ranks in reverse topological order. Arcs always point from
  // producer to consumer, and the kernel graph is a DAG, so a topological
  // order exists.
  const std::size_t n = tasks.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  {
    std::vector<std::size_t> in_degree(n, 0);
    for (const Arc& arc : arcs) ++in_degree[arc.head];
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_degree[i] == 0) ready.push_back(i);
    }
    while (!ready.empty()) {
      const std::size_t t = ready.back();
      ready.pop_back();
      order.push_back(t);
      for (std::size_t arc_index : tasks[t].outgoing) {
        if (--in_degree[arcs[arc_index].head] == 0) ready.push_back(arcs[arc_index].head);
      }
    }
    if (order.size() != n) throw Error("mapping produced a cyclic task graph");
  }

  std::vector<double> rank(n, 0.0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t t = *it;
    double downstream = 0.0;
    for (std::size_t arc_index : tasks[t].outgoing) {
      const Arc& arc = arcs[arc_index];
      downstream = std::max(downstream, arc.comm_estimate_s + rank[arc.head]);
    }
    rank[t] = tasks[t].duration_s + downstream;
  }

  // Priority order: rank descending, task id ascending. Every predecessor
  // outranks its successors (durations are positive), so this order is
  // topological.
  std::vector<std::size_t> priority(n);
  for (std::size_t i = 0; i < n; ++i) priority[i] = i;
  std::sort(priority.begin(), priority.end(), [&](std::size_t a, std::size_t b) {
    if (rank[a] != rank[b]) return rank[a] > rank[b];
    return tasks[a].id < tasks[b].id;
  });

  Schedule schedule;
  std::map<std::string, double> pe_free;
  std::map<std::string, double> link_free;
  std::vector<double> task_end(n, 0.0);

  for (std::size_t t : priority) {
    double ready_time = 0.0;
    for (std::size_t arc_index : tasks[t].incoming) {
      const Arc& arc = arcs[arc_index];
      double arrival = task_end[arc.tail];
      if (arc.edge_index.has_value() && tasks[arc.tail].pe != tasks[t].pe) {
        const EdgeSpec& edge = graph.edges[*arc.edge_index];
        auto hops = route_between(bsp.platform, tasks[arc.tail].pe, tasks[t].pe, edge_bytes(edge));
        assert(hops.has_value());  // transfer_duration_s above already routed it
        for (const RouteHop& hop : *hops) {
          double start = std::max(arrival, link_free[hop.link_id]);
          double end = start + hop.duration_s;
          link_free[hop.link_id] = end;
          schedule.link_entries.push_back(
              LinkEntry{edge.src + "->" + edge.dst, hop.link_id, start, end});
          arrival = end;
        }
      }
      ready_time = std::max(ready_time, arrival);
    }
    const double start = std::max(ready_time, pe_free[tasks[t].pe]);
    const double end = start + tasks[t].duration_s;
    pe_free[tasks[t].pe] = end;
    task_end[t] = end;
    schedule.entries.push_back(ScheduleEntry{tasks[t].id, tasks[t].pe, start, end});
    schedule.makespan_s = std::max(schedule.makespan_s, end);
  }
  return schedule;
}

double steady_state_throughput(const Schedule& schedule, const Platform&) {
  std::map<std::string, double> busy;
  for (const ScheduleEntry& entry : schedule.entries) {
    busy["pe:" + entry.pe] += entry.end_s - entry.start_s;
  }
  for (const LinkEntry& entry : schedule.link_entries) {
    busy["link:" + entry.link] += entry.end_s - entry.start_s;
  }
  double bottleneck = 0.0;
  for (const auto& [resource, time] : busy) bottleneck = std::max(bottleneck, time);
  if (bottleneck <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / bottleneck;
}

}  // namespace wde::sched
