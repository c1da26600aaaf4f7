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

#ifndef WDE_PLATFORM_HPP_
#define WDE_PLATFORM_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wde {

enum class PeClass { Dsp, Asip, Gpp, Hwacc };

std::string_view pe_class_name(PeClass cls);
std::optional<PeClass> pe_class_from_name(std::string_view name);

struct ProcessingElement {
  std::string id;
  PeClass cls = PeClass::Gpp;
  double clock_hz = 1.0;
  double gpp_efficiency = 1.0;  // ops/cycle, used only for non-nuclei kernels

  friend bool operator==(const ProcessingElement&, const ProcessingElement&) = default;
};

struct InterconnectLink {
  std::string id;
  std::string pe_a;  // unordered endpoint pair
  std::string pe_b;
  double bandwidth_bytes_per_s = 1.0;
  double latency_s = 0.0;
  double energy_per_byte_j = 0.0;

  bool connects(const std::string& x, const std::string& y) const {
    return (pe_a == x && pe_b == y) || (pe_a == y && pe_b == x);
  }

  friend bool operator==(const InterconnectLink&, const InterconnectLink&) = default;
};

/// The BSP hardware model: PEs plus the interconnect between them.
struct Platform {
  std::string name;
  std::vector<ProcessingElement> pes;
  std::vector<InterconnectLink> links;

  const ProcessingElement* find_pe(const std::string& id) const;
  const InterconnectLink* find_link_between(const std::string& pe_x, const std::string& pe_y) const;

  friend bool operator==(const Platform&, const Platform&) = default;
};

}  // namespace wde

#endif  // WDE_PLATFORM_HPP_
