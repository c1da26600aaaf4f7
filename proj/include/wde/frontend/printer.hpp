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

#ifndef WDE_FRONTEND_PRINTER_HPP_
#define WDE_FRONTEND_PRINTER_HPP_

#include <string>

#include "wde/bsp.hpp"
#include "wde/graph.hpp"

namespace wde::frontend {

/// Canonical text form. Re-parsing the output reconstructs a structurally
/// equal value, and printing is idempotent.
std::string pretty_print(const WaveformGraph& graph);
std::string pretty_print(const Bsp& bsp);

/// Shortest decimal form that parses back to exactly the same double.
std::string double_to_string(double value);

}  // namespace wde::frontend

#endif  // WDE_FRONTEND_PRINTER_HPP_
