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

#include <random>
#include <string>

#include "helpers/model_gen.hpp"
#include "wde/frontend/parser.hpp"
#include "wde/frontend/printer.hpp"

using namespace wde;
using frontend::parse_bsp;
using frontend::parse_waveform;
using frontend::ParseDiagnostic;
using frontend::pretty_print;
using frontend::Severity;

namespace {

const ParseDiagnostic* find_error(const std::vector<ParseDiagnostic>& diagnostics,
                                  const std::string& code) {
  for (const ParseDiagnostic& d : diagnostics) {
    if (d.severity == Severity::Error && d.code == code) return &d;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("parse_waveform builds a one-kernel graph") {
  auto result =
      parse_waveform(R"(waveform "w" { kernel k1 : nucleus(FFT) { size = 64; invocations = 1; } })");
  REQUIRE(result.ok());
  const WaveformGraph& graph = *result.value;
  CHECK(graph.name == "w");
  REQUIRE(graph.kernels.size() == 1);
  const NucleusKernel* nucleus = graph.kernels[0].as_nucleus();
  REQUIRE(nucleus != nullptr);
  CHECK(nucleus->nucleus.name == "FFT");
  CHECK(*nucleus->size() == 64);
  CHECK(graph.kernels[0].invocations == 1);
  CHECK(validate_graph(graph).empty());
}

TEST_CASE("parse_waveform reports a duplicate kernel id at the second declaration") {
  const std::string source =
      "waveform \"w\" {\n"
      "  kernel k1 : nucleus(FFT) { size = 64; }\n"
      "  kernel k1 : nucleus(FFT) { size = 32; }\n"
      "}\n";
  auto result = parse_waveform(source);
  CHECK(!result.ok());
  const ParseDiagnostic* diagnostic = find_error(result.diagnostics, "sem.duplicate-kernel");
  REQUIRE(diagnostic != nullptr);
  CHECK(diagnostic->span.line == 3);
}

TEST_CASE("three-kernel file round-trips through the pretty printer") {
  const std::string source =
      "waveform \"chain\" {\n"
      "  kernel fft0 : nucleus(FFT) { size = 1024; invocations = 2; }\n"
      "  kernel mid : nonnucleus { load = 5000; }\n"
      "  kernel dct0 : nucleus(FFT) { size = 256; fallback_load = 90000; }\n"
      "  edge fft0 -> mid { tokens = 1024; format = cfloat32(block = 1024); }\n"
      "  edge mid -> dct0 { tokens = 256; format = q15(block = 256, scaling = block, rounding = trunc); }\n"
      "  constraint latency(path = [fft0, mid, dct0]) <= 150 us;\n"
      "  constraint throughput >= 4000 fps;\n"
      "}\n";
  auto first = parse_waveform(source);
  REQUIRE(first.ok());
  const std::string printed = pretty_print(*first.value);
  auto second = parse_waveform(printed);
  REQUIRE(second.ok());
  CHECK(*first.value == *second.value);
  // Printing is idempotent.
  CHECK(pretty_print(*second.value) == printed);
}

TEST_CASE("empty waveform has the fixed canonical form") {
  WaveformGraph graph;
  graph.name = "w";
  CHECK(pretty_print(graph) == "waveform \"w\" {\n}\n");
}

TEST_CASE("parse_waveform rejects structural mistakes with spans") {
  SUBCASE("unknown kernel in an edge") {
    const std::string source =
        "waveform \"w\" {\n"
        "  kernel a : nucleus(FFT) { size = 8; }\n"
        "  edge a -> ghost { tokens = 8; format = float32(block = 8); }\n"
        "}\n";
    auto result = parse_waveform(source);
    CHECK(!result.ok());
    const ParseDiagnostic* diagnostic = find_error(result.diagnostics, "sem.unknown-kernel");
    REQUIRE(diagnostic != nullptr);
    CHECK(diagnostic->span.line == 3);
  }
  SUBCASE("cycle") {
    const std::string source =
        "waveform \"w\" {\n"
        "  kernel a : nucleus(FFT) { size = 8; }\n"
        "  kernel b : nucleus(FFT) { size = 8; }\n"
        "  edge a -> b { tokens = 8; format = float32(block = 8); }\n"
        "  edge b -> a { tokens = 8; format = float32(block = 8); }\n"
        "}\n";
    auto result = parse_waveform(source);
    CHECK(!result.ok());
    CHECK(find_error(result.diagnostics, "sem.cycle") != nullptr);
  }
  SUBCASE("missing size parameter") {
    auto result = parse_waveform("waveform \"w\" { kernel a : nucleus(FFT) { radix = 2; } }");
    CHECK(!result.ok());
    CHECK(find_error(result.diagnostics, "sem.missing-attr") != nullptr);
  }
  SUBCASE("disconnected constraint path") {
    const std::string source =
        "waveform \"w\" {\n"
        "  kernel a : nucleus(FFT) { size = 8; }\n"
        "  kernel c : nucleus(FFT) { size = 8; }\n"
        "  constraint latency(path = [a, c]) <= 10 us;\n"
        "}\n";
    auto result = parse_waveform(source);
    CHECK(!result.ok());
    const ParseDiagnostic* diagnostic = find_error(result.diagnostics, "sem.path-not-connected");
    REQUIRE(diagnostic != nullptr);
    CHECK(diagnostic->span.line == 4);
  }
  SUBCASE("integer overflow is a parse error") {
    auto result = parse_waveform(
        "waveform \"w\" { kernel a : nucleus(FFT) { size = 99999999999999999999; } }");
    CHECK(!result.ok());
    CHECK(find_error(result.diagnostics, "sem.int-overflow") != nullptr);
  }
  SUBCASE("self edge") {
    const std::string source =
        "waveform \"w\" {\n"
        "  kernel a : nucleus(FFT) { size = 8; }\n"
        "  edge a -> a { tokens = 8; format = float32(block = 8); }\n"
        "}\n";
    auto result = parse_waveform(source);
    CHECK(!result.ok());
    CHECK(find_error(result.diagnostics, "sem.self-edge") != nullptr);
  }
}

TEST_CASE("every error diagnostic points inside the source text") {
  const std::string source =
      "waveform \"w\" {\n"
      "  kernel a : nucleus(FFT) { size = 0; }\n"
      "  junk\n"
      "}\n";
  auto result = parse_waveform(source);
  CHECK(!result.ok());
  CHECK(!result.diagnostics.empty());
  for (const ParseDiagnostic& d : result.diagnostics) {
    CHECK(d.span.line >= 1);
    CHECK(d.span.line <= 4);
    CHECK(d.span.column >= 1);
  }
}

TEST_CASE("parse_bsp builds a one-PE one-flavor package") {
  const std::string source =
      "bsp \"mini\" {\n"
      "  pe dsp0 : DSP { clock = 500 mhz; efficiency = 2; }\n"
      "  flavor fft_r2 : nucleus(FFT) on dsp0 {\n"
      "    algorithm = \"radix2\";\n"
      "    sizes = [64..4096 pow2];\n"
      "    input = q15(block = 64, scaling = perstage, rounding = nearest);\n"
      "    output = q15(block = 64, scaling = perstage, rounding = nearest);\n"
      "    cycles = 100 + 0*n + 5*nlogn;\n"
      "  }\n"
      "}\n";
  auto result = parse_bsp(source);
  REQUIRE(result.ok());
  const Bsp& bsp = *result.value;
  CHECK(bsp.platform.name == "mini");
  REQUIRE(bsp.platform.pes.size() == 1);
  CHECK(bsp.platform.pes[0].clock_hz == 5e8);
  CHECK(bsp.platform.pes[0].gpp_efficiency == 2.0);
  REQUIRE(bsp.flavors.size() == 1);
  CHECK(bsp.flavors[0].pe == "dsp0");
  CHECK(bsp.flavors[0].nucleus.name == "FFT");
  CHECK(bsp.flavors[0].sizes.contains(1024));
  CHECK(cycles_of(bsp.flavors[0].cost, 1024) == doctest::Approx(100 + 5 * 1024 * 10));
}

TEST_CASE("parse_bsp rejects a flavor on an undeclared PE") {
  const std::string source =
      "bsp \"b\" {\n"
      "  pe pe0 : GPP { clock = 1000 mhz; }\n"
      "  flavor f : nucleus(FFT) on PE9 {\n"
      "    sizes = [8];\n"
      "    input = float32(block = 8);\n"
      "    output = float32(block = 8);\n"
      "    cycles = 10;\n"
      "  }\n"
      "}\n";
  auto result = parse_bsp(source);
  CHECK(!result.ok());
  const ParseDiagnostic* diagnostic = find_error(result.diagnostics, "sem.unknown-pe");
  REQUIRE(diagnostic != nullptr);
  CHECK(diagnostic->span.line == 3);
}

TEST_CASE("parse_bsp rejects duplicate links between the same PE pair") {
  const std::string source =
      "bsp \"b\" {\n"
      "  pe a : GPP { clock = 1 ghz; }\n"
      "  pe b : DSP { clock = 500 mhz; }\n"
      "  link l0 : a <-> b { bandwidth = 1000 mbytes_per_s; }\n"
      "  link l1 : b <-> a { bandwidth = 2000 mbytes_per_s; }\n"
      "}\n";
  auto result = parse_bsp(source);
  CHECK(!result.ok());
  CHECK(find_error(result.diagnostics, "sem.duplicate-link") != nullptr);
}

TEST_CASE("glue overrides parse and round-trip") {
  const std::string source =
      "bsp \"b\" {\n"
      "  pe a : GPP { clock = 1 ghz; }\n"
      "  glue cfloat32 -> q15 { cycles_per_sample = 3; }\n"
      "  glue q31 -> q15 { forbidden = true; }\n"
      "}\n";
  auto result = parse_bsp(source);
  REQUIRE(result.ok());
  CHECK(result.value->glue.cycles_per_sample(FormatKind::CFloat32, FormatKind::Q15) == 3.0);
  CHECK(!result.value->glue.cycles_per_sample(FormatKind::Q31, FormatKind::Q15).has_value());
  auto again = parse_bsp(pretty_print(*result.value));
  REQUIRE(again.ok());
  CHECK(*again.value == *result.value);
}

TEST_CASE("two-PE BSP with links and flavors round-trips") {
  const std::string source =
      "bsp \"dual\" {\n"
      "  pe dsp0 : DSP { clock = 500 mhz; efficiency = 1; }\n"
      "  pe gpp0 : GPP { clock = 1000 mhz; efficiency = 4; }\n"
      "  link l0 : dsp0 <-> gpp0 { bandwidth = 1000 mbytes_per_s; latency = 0.1 us; energy = 20 pj_per_byte; }\n"
      "  flavor f0 : nucleus(FFT) on dsp0 { sizes = [2..4096 pow2];\n"
      "    input = cfloat32(block = 64); output = cfloat32(block = 64); cycles = 0 + 0*n + 5*nlogn; }\n"
      "  flavor f1 : nucleus(FFT) on gpp0 { sizes = [4, 16, 64, 256];\n"
      "    input = float32(block = 64); output = float32(block = 64); cycles = 20 + 2*n; energy = 1e-9 + 2e-12*n; }\n"
      "  flavor f2 : nucleus(FIR) on dsp0 { sizes = [16];\n"
      "    input = q15(block = 16, scaling = none, rounding = trunc);\n"
      "    output = q15(block = 16, scaling = none, rounding = trunc); cycles = 1 + 1*n; }\n"
      "}\n";
  auto first = parse_bsp(source);
  REQUIRE(first.ok());
  const std::string printed = pretty_print(*first.value);
  auto second = parse_bsp(printed);
  REQUIRE(second.ok());
  CHECK(*first.value == *second.value);
  CHECK(pretty_print(*second.value) == printed);
}

TEST_CASE("property: random waveforms round-trip through print and parse") {
  std::mt19937_64 rng(0xf00d0001);
  for (int rep = 0; rep < 60; ++rep) {
    WaveformGraph graph = wde::testgen::random_waveform(rng);
    REQUIRE(validate_graph(graph).empty());
    const std::string printed = pretty_print(graph);
    auto parsed = parse_waveform(printed);
    REQUIRE_MESSAGE(parsed.ok(), printed);
    CHECK_MESSAGE(*parsed.value == graph, printed);
    CHECK(pretty_print(*parsed.value) == printed);
  }
}

TEST_CASE("property: random BSPs round-trip through print and parse") {
  std::mt19937_64 rng(0xf00d0002);
  for (int rep = 0; rep < 60; ++rep) {
    Bsp bsp = wde::testgen::random_bsp(rng);
    const std::string printed = pretty_print(bsp);
    auto parsed = parse_bsp(printed);
    REQUIRE_MESSAGE(parsed.ok(), printed);
    CHECK_MESSAGE(*parsed.value == bsp, printed);
    CHECK(pretty_print(*parsed.value) == printed);
  }
}

TEST_CASE("parsing is a pure function of the source text") {
  const std::string source =
      "waveform \"w\" { kernel a : nucleus(FFT) { size = 8; } }";
  auto first = parse_waveform(source);
  auto second = parse_waveform(source);
  REQUIRE(first.ok());
  REQUIRE(second.ok());
  CHECK(*first.value == *second.value);
}
