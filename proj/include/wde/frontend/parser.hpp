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

#ifndef WDE_FRONTEND_PARSER_HPP_
#define WDE_FRONTEND_PARSER_HPP_

#include <string>
#include <string_view>

#include "wde/bsp.hpp"
#include "wde/frontend/diagnostics.hpp"
#include "wde/graph.hpp"

namespace wde::frontend {

/// Parses a WDL waveform description. On success the returned graph passes
/// validate_graph; on failure at least one Error diagnostic carries a span
/// into the source.
ParseResult<WaveformGraph> parse_waveform(std::string_view source,
                                          const std::string& file = "<wdl>");

/// Parses a BSP file: platform (PEs + links), flavors, and glue-cost
/// overrides. Every flavor is checked against the declared PEs.
ParseResult<Bsp> parse_bsp(std::string_view source, const std::string& file = "<bsp>");

}  // namespace wde::frontend

#endif  // WDE_FRONTEND_PARSER_HPP_
