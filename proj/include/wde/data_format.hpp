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

#ifndef WDE_DATA_FORMAT_HPP_
#define WDE_DATA_FORMAT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wde {

enum class FormatKind { Q15, Q31, Float32, CFloat32 };
enum class Scaling { None, PerStage, Block };
enum class Rounding { Truncate, RoundNearest };

/// Sample format carried on an edge or required at a flavor boundary.
/// Equality is field-wise; any difference forces glue insertion.
struct DataFormat {
  FormatKind kind = FormatKind::Float32;
  std::int64_t block_size = 1;
  Scaling scaling = Scaling::None;
  Rounding rounding = Rounding::RoundNearest;

  friend bool operator==(const DataFormat&, const DataFormat&) = default;
};

constexpr bool is_q_format(FormatKind kind) {
  return kind == FormatKind::Q15 || kind == FormatKind::Q31;
}

constexpr int bytes_per_sample(FormatKind kind) {
  switch (kind) {
    case FormatKind::Q15:
      return 2;
    case FormatKind::Q31:
      return 4;
    case FormatKind::Float32:
      return 4;
    case FormatKind::CFloat32:
      return 8;
  }
  return 0;
}

std::string_view format_kind_name(FormatKind kind);
std::optional<FormatKind> format_kind_from_name(std::string_view name);

std::string_view scaling_name(Scaling scaling);
std::optional<Scaling> scaling_from_name(std::string_view name);

std::string_view rounding_name(Rounding rounding);
std::optional<Rounding> rounding_from_name(std::string_view name);

/// Canonical literal as the frontend prints it, e.g.
/// `q15(block = 64, scaling = perstage, rounding = nearest)`.
std::string format_to_string(const DataFormat& format);

}  // namespace wde

#endif  // WDE_DATA_FORMAT_HPP_
