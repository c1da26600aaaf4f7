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

#include "wde/kernels/q15.hpp"

#include <cmath>

namespace wde::kernels {

namespace {

// Scale, round, clamp. The clamp runs on the double value so the cast to the
// integer type is always in range.
double quantize(double x, double scale, double lo, double hi, Rounding rounding) {
  if (std::isnan(x)) return 0.0;
  const double scaled = x * scale;
  const double rounded = rounding == Rounding::RoundNearest ? std::round(scaled) : std::trunc(scaled);
  if (rounded < lo) return lo;
  if (rounded > hi) return hi;
  return rounded;
}

}  // namespace

std::int16_t float_to_q15(double x, Rounding rounding) {
  return static_cast<std::int16_t>(quantize(x, 32768.0, -32768.0, 32767.0, rounding));
}

double q15_to_float(std::int16_t q) { return static_cast<double>(q) / 32768.0; }

std::int32_t float_to_q31(double x, Rounding rounding) {
  return static_cast<std::int32_t>(quantize(x, 2147483648.0, -2147483648.0, 2147483647.0, rounding));
}

double q31_to_float(std::int32_t q) { return static_cast<double>(q) / 2147483648.0; }

}  // namespace wde::kernels
