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

#include "wde/frontend/printer.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace wde::frontend {

std::string double_to_string(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

namespace {

/// Prints an SI value in the first preferred unit that reproduces the stored
/// double exactly when scaled back; the last entry must be the base unit.
std::string quantity(double si_value,
                     const std::vector<std::pair<const char*, double>>& units) {
  for (std::size_t i = 0; i + 1 < units.size(); ++i) {
    const double scaled = si_value / units[i].second;
    if (scaled * units[i].second == si_value) {
      return double_to_string(scaled) + " " + units[i].first;
    }
  }
  return double_to_string(si_value) + " " + units.back().first;
}

const std::vector<std::pair<const char*, double>> kClockUnits = {{"mhz", 1e6}, {"hz", 1.0}};
const std::vector<std::pair<const char*, double>> kTimeUnits = {{"us", 1e-6}, {"s", 1.0}};
const std::vector<std::pair<const char*, double>> kBandwidthUnits = {{"mbytes_per_s", 1e6},
                                                                     {"bytes_per_s", 1.0}};
const std::vector<std::pair<const char*, double>> kEnergyUnits = {{"pj_per_byte", 1e-12},
                                                                  {"j_per_byte", 1.0}};

}  // namespace

std::string pretty_print(const WaveformGraph& graph) {
  std::ostringstream out;
  out << "waveform \"" << graph.name << "\" {\n";
  for (const KernelSpec& kernel : graph.kernels) {
    out << "  kernel " << kernel.id << " : ";
    if (const NucleusKernel* nucleus = kernel.as_nucleus()) {
      out << "nucleus(" << nucleus->nucleus.name << ") {\n";
      for (const auto& [name, value] : nucleus->params) {
        out << "    " << name << " = " << value << ";\n";
      }
      out << "    invocations = " << kernel.invocations << ";\n";
      if (nucleus->fallback_load.has_value()) {
        out << "    fallback_load = " << *nucleus->fallback_load << ";\n";
      }
    } else {
      const NonNucleusKernel* nn = kernel.as_non_nucleus();
      out << "nonnucleus {\n";
      out << "    load = " << nn->load_ops << ";\n";
      out << "    invocations = " << kernel.invocations << ";\n";
    }
    out << "  }\n";
  }
  for (const EdgeSpec& edge : graph.edges) {
    out << "  edge " << edge.src << " -> " << edge.dst << " {\n";
    out << "    tokens = " << edge.tokens << ";\n";
    out << "    format = " << format_to_string(edge.format) << ";\n";
    out << "  }\n";
  }
  for (const ConstraintSpec& constraint : graph.constraints) {
    if (const PathLatencyConstraint* latency = constraint.as_path_latency()) {
      out << "  constraint latency(path = [";
      for (std::size_t i = 0; i < latency->path.size(); ++i) {
        if (i != 0) out << ", ";
        out << latency->path[i];
      }
      out << "]) <= " << double_to_string(latency->bound_us) << " us;\n";
    } else if (const ThroughputConstraint* throughput = constraint.as_throughput()) {
      out << "  constraint throughput >= " << double_to_string(throughput->min_frames_per_s)
          << " fps;\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string pretty_print(const Bsp& bsp) {
  std::ostringstream out;
  out << "bsp \"" << bsp.platform.name << "\" {\n";
  for (const ProcessingElement& pe : bsp.platform.pes) {
    out << "  pe " << pe.id << " : " << pe_class_name(pe.cls) << " {\n";
    out << "    clock = " << quantity(pe.clock_hz, kClockUnits) << ";\n";
    out << "    efficiency = " << double_to_string(pe.gpp_efficiency) << ";\n";
    out << "  }\n";
  }
  for (const InterconnectLink& link : bsp.platform.links) {
    out << "  link " << link.id << " : " << link.pe_a << " <-> " << link.pe_b << " {\n";
    out << "    bandwidth = " << quantity(link.bandwidth_bytes_per_s, kBandwidthUnits) << ";\n";
    out << "    latency = " << quantity(link.latency_s, kTimeUnits) << ";\n";
    out << "    energy = " << quantity(link.energy_per_byte_j, kEnergyUnits) << ";\n";
    out << "  }\n";
  }
  for (const Flavor& flavor : bsp.flavors) {
    out << "  flavor " << flavor.id << " : nucleus(" << flavor.nucleus.name << ") on "
        << flavor.pe << " {\n";
    if (!flavor.algorithm.empty()) out << "    algorithm = \"" << flavor.algorithm << "\";\n";
    if (!flavor.vendor.empty()) out << "    vendor = \"" << flavor.vendor << "\";\n";
    out << "    sizes = ";
    if (const Pow2Range* range = std::get_if<Pow2Range>(&flavor.sizes.values)) {
      out << "[" << range->lo << ".." << range->hi << " pow2]";
    } else {
      const auto& list = std::get<std::vector<std::int64_t>>(flavor.sizes.values);
      out << "[";
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i != 0) out << ", ";
        out << list[i];
      }
      out << "]";
    }
    out << ";\n";
    out << "    input = " << format_to_string(flavor.input_format) << ";\n";
    out << "    output = " << format_to_string(flavor.output_format) << ";\n";
    out << "    cycles = " << double_to_string(flavor.cost.base_cycles) << " + "
        << double_to_string(flavor.cost.cycles_per_n) << "*n + "
        << double_to_string(flavor.cost.cycles_per_nlogn) << "*nlogn;\n";
    out << "    energy = " << double_to_string(flavor.cost.energy_base_j) << " + "
        << double_to_string(flavor.cost.energy_per_n_j) << "*n;\n";
    out << "  }\n";
  }
  for (const auto& [pair, cycles] : bsp.glue.non_default_entries()) {
    out << "  glue " << format_kind_name(pair.first) << " -> " << format_kind_name(pair.second)
        << " { ";
    if (cycles.has_value()) {
      out << "cycles_per_sample = " << double_to_string(*cycles) << ";";
    } else {
      out << "forbidden = true;";
    }
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wde::frontend
