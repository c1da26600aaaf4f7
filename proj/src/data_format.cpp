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

#include "wde/data_format.hpp"

#include <sstream>

namespace wde {

std::string_view format_kind_name(FormatKind kind) {
  switch (kind) {
    case FormatKind::Q15:
      return "q15";
    case FormatKind::Q31:
      return "q31";
    case FormatKind::Float32:
      return "float32";
    case FormatKind::CFloat32:
      return "cfloat32";
  }
  return "?";
}

std::optional<FormatKind> format_kind_from_name(std::string_view name) {
  if (name == "q15") return FormatKind::Q15;
  if (name == "q31") return FormatKind::Q31;
  if (name == "float32") return FormatKind::Float32;
  if (name == "cfloat32") return FormatKind::CFloat32;
  return std::nullopt;
}

std::string_view scaling_name(Scaling scaling) {
  switch (scaling) {
    case Scaling::None:
      return "none";
    case Scaling::PerStage:
      return "perstage";
    case Scaling::Block:
      return "block";
  }
  return "?";
}

std::optional<Scaling> scaling_from_name(std::string_view name) {
  if (name == "none") return Scaling::None;
  if (name == "perstage") return Scaling::PerStage;
  if (name == "block") return Scaling::Block;
  return std::nullopt;
}

std::string_view rounding_name(Rounding rounding) {
  switch (rounding) {
    case Rounding::Truncate:
      return "trunc";
    case Rounding::RoundNearest:
      return "nearest";
  }
  return "?";
}

std::optional<Rounding> rounding_from_name(std::string_view name) {
  if (name == "trunc") return Rounding::Truncate;
  if (name == "nearest") return Rounding::RoundNearest;
  return std::nullopt;
}

std::string format_to_string(const DataFormat& format) {
  std::ostringstream out;
  out << format_kind_name(format.kind) << "(block = " << format.block_size;
  if (is_q_format(format.kind)) {
    out << ", scaling = " << scaling_name(format.scaling)
        << ", rounding = " << rounding_name(format.rounding);
  }
  out << ")";
  return out.str();
}

}  // namespace wde
