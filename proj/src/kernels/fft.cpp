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

#include "wde/kernels/fft.hpp"

#include <atomic>
#include <cmath>
#include <utility>

#include "wde/errors.hpp"

namespace wde::kernels {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::atomic<std::uint64_t> g_fft_invocations{0};

bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

bool is_power_of_four(std::size_t n) {
  return is_power_of_two(n) && (n & 0x5555555555555555ULL) != 0;
}

// W[j] = exp(-2*pi*i*j/n). Computed per call; transforms stay reentrant.
std::vector<std::complex<double>> forward_twiddles(std::size_t n, std::size_t count) {
  std::vector<std::complex<double>> w(count);
  for (std::size_t j = 0; j < count; ++j) {
    w[j] = std::polar(1.0, -2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
  }
  return w;
}

void bit_reverse_permute(Signal& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
}

void digit_reverse_permute_base4(Signal& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t reversed = 0;
    std::size_t rest = i;
    for (std::size_t m = n; m > 1; m >>= 2) {
      reversed = (reversed << 2) | (rest & 3);
      rest >>= 2;
    }
    if (reversed > i) std::swap(x[i], x[reversed]);
  }
}

}  // namespace

Signal fft_radix2(const Signal& input) {
  const std::size_t n = input.size();
  if (n < 2 || !is_power_of_two(n)) {
    throw UnsupportedSizeError("fft_radix2: size must be a power of two >= 2, got " +
                               std::to_string(n));
  }
  g_fft_invocations.fetch_add(1, std::memory_order_relaxed);

  Signal x = input;
  const auto twiddle = forward_twiddles(n, n / 2);
  bit_reverse_permute(x);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::complex<double> u = x[start + j];
        const std::complex<double> v = x[start + j + half] * twiddle[j * stride];
        x[start + j] = u + v;
        x[start + j + half] = u - v;
      }
    }
  }
  return x;
}

Signal fft_radix4(const Signal& input) {
  const std::size_t n = input.size();
  if (n < 4 || !is_power_of_four(n)) {
    throw UnsupportedSizeError("fft_radix4: size must be a power of four >= 4, got " +
                               std::to_string(n));
  }
  g_fft_invocations.fetch_add(1, std::memory_order_relaxed);

  Signal x = input;
  const auto twiddle = forward_twiddles(n, n);
  const std::complex<double> minus_i{0.0, -1.0};
  // Decimation in frequency; output lands in base-4 digit-reversed order.
  for (std::size_t len = n; len >= 4; len >>= 2) {
    const std::size_t quarter = len / 4;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < quarter; ++j) {
        const std::complex<double> a = x[start + j];
        const std::complex<double> b = x[start + j + quarter];
        const std::complex<double> c = x[start + j + 2 * quarter];
        const std::complex<double> d = x[start + j + 3 * quarter];
        const std::complex<double> sum_ac = a + c;
        const std::complex<double> diff_ac = a - c;
        const std::complex<double> sum_bd = b + d;
        const std::complex<double> rot_bd = minus_i * (b - d);
        x[start + j] = sum_ac + sum_bd;
        x[start + j + quarter] = (diff_ac + rot_bd) * twiddle[j * stride];
        x[start + j + 2 * quarter] = (sum_ac - sum_bd) * twiddle[2 * j * stride];
        x[start + j + 3 * quarter] = (diff_ac - rot_bd) * twiddle[3 * j * stride];
      }
    }
  }
  digit_reverse_permute_base4(x);
  return x;
}

Signal ifft(const Signal& input) {
  const std::size_t n = input.size();
  Signal x = input;
  for (auto& v : x) v = std::conj(v);
  x = fft_radix2(x);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : x) v = std::conj(v) * scale;
  return x;
}

std::vector<double> dct2_via_fft(const std::vector<double>& input) {
  const std::size_t n = input.size();
  if (n < 2 || !is_power_of_two(n)) {
    throw UnsupportedSizeError("dct2_via_fft: size must be a power of two >= 2, got " +
                               std::to_string(n));
  }
  // Even-indexed samples ascending, odd-indexed samples descending; one FFT;
  // quarter-sample phase shift picks out the cosine sums.
  Signal rearranged(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) rearranged[i] = {input[2 * i], 0.0};
  for (std::size_t i = 0; i < n / 2; ++i) rearranged[n - 1 - i] = {input[2 * i + 1], 0.0};
  const Signal spectrum = fft_radix2(rearranged);
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::complex<double> phase =
        std::polar(1.0, -kPi * static_cast<double>(k) / (2.0 * static_cast<double>(n)));
    out[k] = (spectrum[k] * phase).real();
  }
  return out;
}

std::vector<double> dht_via_fft(const std::vector<double>& input) {
  const std::size_t n = input.size();
  if (n < 2 || !is_power_of_two(n)) {
    throw UnsupportedSizeError("dht_via_fft: size must be a power of two >= 2, got " +
                               std::to_string(n));
  }
  Signal complex_input(n);
  for (std::size_t i = 0; i < n; ++i) complex_input[i] = {input[i], 0.0};
  const Signal spectrum = fft_radix2(complex_input);
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = spectrum[k].real() - spectrum[k].imag();
  }
  return out;
}

int fft_radix2_stage_count(std::int64_t n) {
  if (n < 2 || !is_power_of_two(static_cast<std::size_t>(n))) {
    throw UnsupportedSizeError("fft_radix2_stage_count: size must be a power of two >= 2");
  }
  int stages = 0;
  for (std::int64_t v = n; v > 1; v >>= 1) ++stages;
  return stages;
}

int fft_radix4_stage_count(std::int64_t n) {
  if (n < 4 || !is_power_of_four(static_cast<std::size_t>(n))) {
    throw UnsupportedSizeError("fft_radix4_stage_count: size must be a power of four >= 4");
  }
  int stages = 0;
  for (std::int64_t v = n; v > 1; v >>= 2) ++stages;
  return stages;
}

std::uint64_t fft_invocation_count() {
  return g_fft_invocations.load(std::memory_order_relaxed);
}

void reset_fft_invocation_count() { g_fft_invocations.store(0, std::memory_order_relaxed); }

}  // namespace wde::kernels
