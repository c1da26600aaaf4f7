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

#ifndef WDE_KERNELS_FFT_HPP_
#define WDE_KERNELS_FFT_HPP_

#include <complex>
#include <cstdint>
#include <vector>

namespace wde::kernels {

using Signal = std::vector<std::complex<double>>;

/// Unnormalized forward DFT, X[k] = sum_n x[n]*exp(-2*pi*i*n*k/N), computed
/// by an iterative radix-2 Cooley-Tukey decomposition. N must be a power of
/// two, N >= 2; throws UnsupportedSizeError otherwise.
Signal fft_radix2(const Signal& input);

/// Same transform contract as fft_radix2, computed with radix-4 butterflies.
/// N must be a power of four, N >= 4.
Signal fft_radix4(const Signal& input);

/// Inverse DFT, realized as conj -> fft -> conj -> scale by 1/N around the
/// FFT nucleus. ifft(fft(x)) == x.
Signal ifft(const Signal& input);

/// Unnormalized DCT-II, X[k] = sum_n x[n]*cos(pi*(n+0.5)*k/N): even-symmetric
/// pre-arrangement, one N-point FFT, and a twiddle post-multiply.
std::vector<double> dct2_via_fft(const std::vector<double>& input);

/// Discrete Hartley transform, H[k] = sum_n x[n]*cas(2*pi*n*k/N), computed as
/// Re(FFT) - Im(FFT) of the real input (post-processing only).
std::vector<double> dht_via_fft(const std::vector<double>& input);

/// Butterfly stage counts: log2(N) for radix-2, log4(N) for radix-4. A
/// radix-2 flavor has more stages and hence more intermediate scaling points.
int fft_radix2_stage_count(std::int64_t n);
int fft_radix4_stage_count(std::int64_t n);

/// Number of FFT-nucleus invocations since start (or the last reset).
/// Genre members built on the FFT kernel bump this exactly once per call.
std::uint64_t fft_invocation_count();
void reset_fft_invocation_count();

}  // namespace wde::kernels

#endif  // WDE_KERNELS_FFT_HPP_
