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

#include "wde/platform.hpp"

namespace wde {

std::string_view pe_class_name(PeClass cls) {
  switch (cls) {
    case PeClass::Dsp:
      return "DSP";
    case PeClass::Asip:
      return "ASIP";
    case PeClass::Gpp:
      return "GPP";
    case PeClass::Hwacc:
      return "HWACC";
  }
  return "?";
}

std::optional<PeClass> pe_class_from_name(std::string_view name) {
  if (name == "DSP") return PeClass::Dsp;
  if (name == "ASIP") return PeClass::Asip;
  if (name == "GPP") return PeClass::Gpp;
  if (name == "HWACC") return PeClass::Hwacc;
  return std::nullopt;
}

const ProcessingElement* Platform::find_pe(const std::string& id) const {
  for (const ProcessingElement& pe : pes) {
    if (pe.id == id) return &pe;
  }
  return nullptr;
}

const InterconnectLink* Platform::find_link_between(const std::string& pe_x,
                                                    const std::string& pe_y) const {
  for (const InterconnectLink& link : links) {
    if (link.connects(pe_x, pe_y)) return &link;
  }
  return nullptr;
}

}  // namespace wde
