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

#ifndef WDE_SCHEDULER_SCHEDULER_HPP_
#define WDE_SCHEDULER_SCHEDULER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wde/bsp.hpp"
#include "wde/graph.hpp"
#include "wde/mapping.hpp"
#include "wde/schedule.hpp"

namespace wde::sched {

/// PE id a bound kernel executes on (the flavor's PE for nucleus bindings).
std::string pe_of(const BoundTarget& target, const Bsp& bsp);

/// Execution time of one kernel under its binding: nucleus tasks run
/// invocations * cycles(size) / clock; non-nucleus (and fallback) tasks run
/// invocations * load / (efficiency * clock).
double kernel_duration_s(const KernelSpec& kernel, const BoundTarget& target, const Bsp& bsp);

/// Glue conversion time: cycles / clock of the PE it is placed on.
double glue_duration_s(const GlueTask& glue, const Platform& platform);

struct RouteHop {
  std::string link_id;
  double duration_s = 0.0;
  double energy_j = 0.0;
};

/// Cheapest route between two distinct PEs for a transfer of `bytes`: the
/// direct link, or the cheapest two-hop path when no direct link exists.
/// Empty optional when the PEs cannot be connected within two hops.
std::optional<std::vector<RouteHop>> route_between(const Platform& platform,
                                                   const std::string& src_pe,
                                                   const std::string& dst_pe, double bytes);

/// End-to-end transfer time of an edge under a mapping: 0 on the same PE,
/// otherwise the routed latency + serialization time. Throws
/// UnroutableEdgeError when no route exists.
double transfer_duration_s(const EdgeSpec& edge, const Mapping& mapping, const Bsp& bsp);

/// Static non-preemptive list schedule over kernels, glue tasks, and link
/// transfers. Priorities are upward ranks (longest downstream path including
/// transfer estimates), ties broken by task id; transfers serialize per link.
Schedule list_schedule(const WaveformGraph& graph, const Mapping& mapping, const Bsp& bsp);

/// Same machine model with an explicit processing order. `priority_order`
/// must list every task id (kernels and glue) exactly once, predecessors
/// before successors.
Schedule list_schedule(const WaveformGraph& graph, const Mapping& mapping, const Bsp& bsp,
                       const std::vector<std::string>& priority_order);

/// Frame-pipelined steady-state rate: 1 / (largest per-resource busy time).
double steady_state_throughput(const Schedule& schedule, const Platform& platform);

}  // namespace wde::sched

#endif  // WDE_SCHEDULER_SCHEDULER_HPP_
