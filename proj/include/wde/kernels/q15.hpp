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

#ifndef WDE_KERNELS_Q15_HPP_
#define WDE_KERNELS_Q15_HPP_

#include <cstdint>

#include "wde/data_format.hpp"

namespace wde::kernels {

/// Saturating float -> Q15 conversion. RoundNearest rounds half away from
/// zero; Truncate drops fractional bits toward zero. Out-of-range inputs
/// clamp to [-32768, 32767].
std::int16_t float_to_q15(double x, Rounding rounding);

/// Interpreted value q / 2^15.
double q15_to_float(std::int16_t q);

/// Q31 counterparts, clamped to [-2^31, 2^31 - 1].
std::int32_t float_to_q31(double x, Rounding rounding);
double q31_to_float(std::int32_t q);

}  // namespace wde::kernels

#endif  // WDE_KERNELS_Q15_HPP_
