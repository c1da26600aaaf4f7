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

#ifndef WDE_FRONTEND_DIAGNOSTICS_HPP_
#define WDE_FRONTEND_DIAGNOSTICS_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace wde::frontend {

struct SourceSpan {
  std::string file;
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 1;  // characters
};

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  Severity severity = Severity::Error;
  std::string code;  // stable tag, e.g. "sem.duplicate-kernel"
  std::string message;
  SourceSpan span;

  /// "file:line:col: error: message [code]"
  std::string to_string() const;
};

/// Outcome of a parse: a value when no Error diagnostic was raised, plus all
/// diagnostics (warnings survive a successful parse).
template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  bool has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [](const ParseDiagnostic& d) {
      return d.severity == Severity::Error;
    });
  }
};

}  // namespace wde::frontend

#endif  // WDE_FRONTEND_DIAGNOSTICS_HPP_
