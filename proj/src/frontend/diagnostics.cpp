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

#include "wde/frontend/diagnostics.hpp"

#include <sstream>

namespace wde::frontend {

std::string ParseDiagnostic::to_string() const {
  std::ostringstream out;
  out << span.file << ":" << span.line << ":" << span.column << ": "
      << (severity == Severity::Error ? "error" : "warning") << ": " << message << " [" << code
      << "]";
  return out.str();
}

}  // namespace wde::frontend
