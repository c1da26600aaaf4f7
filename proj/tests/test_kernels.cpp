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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "wde/errors.hpp"
#include "wde/kernels/fft.hpp"
#include "wde/kernels/q15.hpp"

using wde::Rounding;
using wde::UnsupportedSizeError;
using wde::kernels::Signal;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Definitional O(N^2) oracles, written against the summation formulas and
// kept independent of the FFT implementation they check.

Signal naive_dft(const Signal& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> twiddle(n);
  for (std::size_t j = 0; j < n; ++j) {
    twiddle[j] = std::polar(1.0, -2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
  }
  Signal out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      acc += x[j] * twiddle[(j * k) % n];
    }
    out[k] = acc;
  }
  return out;
}

Signal naive_idft(const Signal& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> twiddle(n);
  for (std::size_t j = 0; j < n; ++j) {
    twiddle[j] = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
  }
  Signal out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      acc += x[j] * twiddle[(j * k) % n];
    }
    out[k] = acc / static_cast<double>(n);
  }
  return out;
}

std::vector<double> naive_dct2(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += x[j] * std::cos(kPi * (static_cast<double>(j) + 0.5) * static_cast<double>(k) /
                             static_cast<double>(n));
    }
    out[k] = acc;
  }
  return out;
}

std::vector<double> naive_dht(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = 2.0 * kPi * static_cast<double>(j * k % n) / static_cast<double>(n);
      acc += x[j] * (std::cos(angle) + std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

double max_abs_error(const Signal& a, const Signal& b) {
  REQUIRE(a.size() == b.size());
  double max_err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    max_err = std::max(max_err, std::abs(a[i] - b[i]));
  }
  return max_err;
}

double max_abs_error(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double max_err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    max_err = std::max(max_err, std::abs(a[i] - b[i]));
  }
  return max_err;
}

Signal random_signal(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Signal x(n);
  for (auto& v : x) v = {dist(rng), dist(rng)};
  return x;
}

std::vector<double> random_real(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = dist(rng);
  return x;
}

Signal to_signal(const std::vector<double>& x) {
  Signal s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = {x[i], 0.0};
  return s;
}

}  // namespace

TEST_CASE("fft_radix2 of an impulse is the all-ones spectrum") {
  Signal x(8, {0.0, 0.0});
  x[0] = {1.0, 0.0};
  Signal out = wde::kernels::fft_radix2(x);
  for (const auto& v : out) {
    CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("fft_radix2 of a constant concentrates in bin zero") {
  Signal x(8, {1.0, 0.0});
  Signal out = wde::kernels::fft_radix2(x);
  CHECK(out[0].real() == doctest::Approx(8.0).epsilon(1e-12));
  for (std::size_t k = 1; k < out.size(); ++k) {
    CHECK(std::abs(out[k]) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("fft_radix2 matches the naive DFT oracle") {
  std::mt19937_64 rng(0x5eed0001);
  for (std::size_t n = 2; n <= 4096; n *= 2) {
    for (int rep = 0; rep < 4; ++rep) {
      Signal x = random_signal(rng, n);
      double err = max_abs_error(wde::kernels::fft_radix2(x), naive_dft(x));
      CHECK(err <= 1e-9 * static_cast<double>(n));
    }
  }
}

TEST_CASE("fft_radix2 rejects non-power-of-two sizes") {
  CHECK_THROWS_AS(wde::kernels::fft_radix2(Signal(3)), UnsupportedSizeError);
  CHECK_THROWS_AS(wde::kernels::fft_radix2(Signal(1)), UnsupportedSizeError);
  CHECK_THROWS_AS(wde::kernels::fft_radix2(Signal(0)), UnsupportedSizeError);
  CHECK_THROWS_AS(wde::kernels::fft_radix2(Signal(96)), UnsupportedSizeError);
}

TEST_CASE("fft_radix4 of an impulse is the all-ones spectrum") {
  Signal x(16, {0.0, 0.0});
  x[0] = {1.0, 0.0};
  Signal out = wde::kernels::fft_radix4(x);
  for (const auto& v : out) {
    CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("fft_radix4 agrees with fft_radix2 on powers of four") {
  std::mt19937_64 rng(0x5eed0002);
  for (std::size_t n = 4; n <= 4096; n *= 4) {
    Signal x = random_signal(rng, n);
    double err = max_abs_error(wde::kernels::fft_radix4(x), wde::kernels::fft_radix2(x));
    CHECK(err <= 1e-9 * static_cast<double>(n));
  }
}

TEST_CASE("fft_radix4 rejects sizes that are not powers of four") {
  CHECK_THROWS_AS(wde::kernels::fft_radix4(Signal(8)), UnsupportedSizeError);
  CHECK_THROWS_AS(wde::kernels::fft_radix4(Signal(2)), UnsupportedSizeError);
  CHECK_THROWS_AS(wde::kernels::fft_radix4(Signal(0)), UnsupportedSizeError);
}

TEST_CASE("stage counts: radix-4 halves the stage count of radix-2") {
  CHECK(wde::kernels::fft_radix2_stage_count(256) == 8);
  CHECK(wde::kernels::fft_radix4_stage_count(256) == 4);
  CHECK(wde::kernels::fft_radix2_stage_count(1024) == 10);
  CHECK(wde::kernels::fft_radix4_stage_count(1024) == 5);
}

TEST_CASE("ifft inverts fft") {
  std::mt19937_64 rng(0x5eed0003);
  Signal x = random_signal(rng, 64);
  Signal back = wde::kernels::ifft(wde::kernels::fft_radix2(x));
  CHECK(max_abs_error(back, x) <= 1e-10);
}

TEST_CASE("ifft of all-ones is the impulse") {
  Signal x(8, {1.0, 0.0});
  Signal out = wde::kernels::ifft(x);
  CHECK(out[0].real() == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t k = 1; k < out.size(); ++k) {
    CHECK(std::abs(out[k]) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("ifft matches the naive inverse-DFT oracle") {
  std::mt19937_64 rng(0x5eed0004);
  for (int rep = 0; rep < 10; ++rep) {
    Signal x = random_signal(rng, 128);
    double err = max_abs_error(wde::kernels::ifft(x), naive_idft(x));
    CHECK(err <= 1e-9 * 128.0);
  }
}

TEST_CASE("dct2_via_fft: constant input has only a DC term") {
  std::vector<double> x(4, 1.0);
  std::vector<double> out = wde::kernels::dct2_via_fft(x);
  CHECK(out[0] == doctest::Approx(4.0).epsilon(1e-12));
  for (std::size_t k = 1; k < out.size(); ++k) {
    CHECK(out[k] == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("dct2_via_fft matches the naive DCT-II oracle") {
  std::vector<double> impulse{1.0, 0.0, 0.0, 0.0};
  CHECK(max_abs_error(wde::kernels::dct2_via_fft(impulse), naive_dct2(impulse)) <= 1e-12);

  std::mt19937_64 rng(0x5eed0005);
  for (std::size_t n = 2; n <= 1024; n *= 2) {
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<double> x = random_real(rng, n);
      double err = max_abs_error(wde::kernels::dct2_via_fft(x), naive_dct2(x));
      CHECK(err <= 1e-9 * static_cast<double>(n));
    }
  }
}

TEST_CASE("dht_via_fft trivial spectra") {
  std::vector<double> impulse{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  for (double v : wde::kernels::dht_via_fft(impulse)) {
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  std::vector<double> ones(8, 1.0);
  std::vector<double> out = wde::kernels::dht_via_fft(ones);
  CHECK(out[0] == doctest::Approx(8.0).epsilon(1e-12));
  for (std::size_t k = 1; k < out.size(); ++k) {
    CHECK(out[k] == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("dht_via_fft matches the naive cas-sum oracle") {
  std::mt19937_64 rng(0x5eed0006);
  for (std::size_t n = 2; n <= 1024; n *= 2) {
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<double> x = random_real(rng, n);
      double err = max_abs_error(wde::kernels::dht_via_fft(x), naive_dht(x));
      CHECK(err <= 1e-9 * static_cast<double>(n));
    }
  }
}

TEST_CASE("fft is linear") {
  std::mt19937_64 rng(0x5eed0007);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const std::size_t n = 256;
  for (int rep = 0; rep < 20; ++rep) {
    Signal x = random_signal(rng, n);
    Signal y = random_signal(rng, n);
    const std::complex<double> alpha{dist(rng), dist(rng)};
    const std::complex<double> beta{dist(rng), dist(rng)};
    Signal combo(n);
    for (std::size_t i = 0; i < n; ++i) combo[i] = alpha * x[i] + beta * y[i];
    Signal lhs = wde::kernels::fft_radix2(combo);
    Signal fx = wde::kernels::fft_radix2(x);
    Signal fy = wde::kernels::fft_radix2(y);
    Signal rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = alpha * fx[i] + beta * fy[i];
    CHECK(max_abs_error(lhs, rhs) <= 1e-9 * static_cast<double>(n));
  }
}

TEST_CASE("Parseval: signal energy equals spectrum energy over N") {
  std::mt19937_64 rng(0x5eed0008);
  for (std::size_t n : {8u, 64u, 1024u}) {
    Signal x = random_signal(rng, n);
    Signal spectrum = wde::kernels::fft_radix2(x);
    double time_energy = 0.0;
    double freq_energy = 0.0;
    for (const auto& v : x) time_energy += std::norm(v);
    for (const auto& v : spectrum) freq_energy += std::norm(v);
    freq_energy /= static_cast<double>(n);
    CHECK(std::abs(time_energy - freq_energy) <= 1e-9 * std::abs(time_energy));
  }
}

TEST_CASE("genre members invoke the FFT nucleus exactly once per transform") {
  std::mt19937_64 rng(0x5eed0009);
  std::vector<double> x = random_real(rng, 64);

  wde::kernels::reset_fft_invocation_count();
  wde::kernels::dct2_via_fft(x);
  CHECK(wde::kernels::fft_invocation_count() == 1);

  wde::kernels::reset_fft_invocation_count();
  wde::kernels::dht_via_fft(x);
  CHECK(wde::kernels::fft_invocation_count() == 1);

  wde::kernels::reset_fft_invocation_count();
  wde::kernels::ifft(to_signal(x));
  CHECK(wde::kernels::fft_invocation_count() == 1);
}

TEST_CASE("float_to_q15 fixed points") {
  CHECK(wde::kernels::float_to_q15(0.5, Rounding::RoundNearest) == 16384);
  CHECK(wde::kernels::float_to_q15(1.0, Rounding::RoundNearest) == 32767);
  CHECK(wde::kernels::float_to_q15(-1.0, Rounding::RoundNearest) == -32768);
  CHECK(wde::kernels::float_to_q15(2.5, Rounding::RoundNearest) == 32767);
  CHECK(wde::kernels::float_to_q15(-7.0, Rounding::Truncate) == -32768);
  CHECK(wde::kernels::float_to_q15(0.0, Rounding::RoundNearest) == 0);
  // Truncation moves toward zero, nearest rounds half away from zero.
  CHECK(wde::kernels::float_to_q15(0.99999, Rounding::Truncate) == 32767);
  const double one_and_a_half_lsb = 1.5 / 32768.0;
  CHECK(wde::kernels::float_to_q15(one_and_a_half_lsb, Rounding::Truncate) == 1);
  CHECK(wde::kernels::float_to_q15(one_and_a_half_lsb, Rounding::RoundNearest) == 2);
  CHECK(wde::kernels::float_to_q15(-one_and_a_half_lsb, Rounding::Truncate) == -1);
  CHECK(wde::kernels::float_to_q15(-one_and_a_half_lsb, Rounding::RoundNearest) == -2);
}

TEST_CASE("q15 round trip stays within half an LSB") {
  const double limit = 1.0 / 65536.0;  // 2^-16
  for (int i = 0; i <= 10000; ++i) {
    const double x = -1.0 + (2.0 - 1.0 / 32768.0) * static_cast<double>(i) / 10000.0;
    const double back =
        wde::kernels::q15_to_float(wde::kernels::float_to_q15(x, Rounding::RoundNearest));
    CHECK(std::abs(back - x) <= limit);
  }
}

TEST_CASE("q15 conversion is monotone") {
  std::mt19937_64 rng(0x5eed000a);
  std::uniform_real_distribution<double> dist(-1.2, 1.2);
  for (int rep = 0; rep < 2000; ++rep) {
    double a = dist(rng);
    double b = dist(rng);
    if (a > b) std::swap(a, b);
    CHECK(wde::kernels::float_to_q15(a, Rounding::RoundNearest) <=
          wde::kernels::float_to_q15(b, Rounding::RoundNearest));
    CHECK(wde::kernels::float_to_q15(a, Rounding::Truncate) <=
          wde::kernels::float_to_q15(b, Rounding::Truncate));
  }
}

TEST_CASE("q31 conversion saturates and round-trips") {
  CHECK(wde::kernels::float_to_q31(1.0, Rounding::RoundNearest) == 2147483647);
  CHECK(wde::kernels::float_to_q31(-1.0, Rounding::RoundNearest) ==
        std::numeric_limits<std::int32_t>::min());
  CHECK(wde::kernels::float_to_q31(0.5, Rounding::RoundNearest) == 1073741824);
  const double x = 0.123456789;
  const double back =
      wde::kernels::q31_to_float(wde::kernels::float_to_q31(x, Rounding::RoundNearest));
  CHECK(std::abs(back - x) <= 1.0 / 4294967296.0);
}
