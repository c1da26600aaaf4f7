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
#include <stdexcept>

#include "wde/bsp.hpp"
#include "wde/graph.hpp"

using namespace wde;

namespace {

KernelSpec nucleus_kernel(std::string id, std::string nucleus, std::int64_t size) {
  KernelSpec kernel;
  kernel.id = std::move(id);
  NucleusKernel spec;
  spec.nucleus = NucleusId{std::move(nucleus)};
  spec.params["size"] = size;
  kernel.kind = spec;
  return kernel;
}

bool has_violation(const std::vector<Violation>& violations, const std::string& code) {
  for (const Violation& violation : violations) {
    if (violation.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate_graph accepts a single kernel with no edges") {
  WaveformGraph graph;
  graph.name = "w";
  graph.kernels.push_back(nucleus_kernel("k1", "FFT", 64));
  CHECK(validate_graph(graph).empty());
}

TEST_CASE("validate_graph flags a two-kernel cycle") {
  WaveformGraph graph;
  graph.name = "w";
  graph.kernels.push_back(nucleus_kernel("a", "FFT", 64));
  graph.kernels.push_back(nucleus_kernel("b", "FFT", 64));
  graph.edges.push_back(EdgeSpec{"a", "b", 64, DataFormat{}});
  graph.edges.push_back(EdgeSpec{"b", "a", 64, DataFormat{}});
  auto violations = validate_graph(graph);
  CHECK(violations.size() == 1);
  CHECK(has_violation(violations, "cycle"));
}

TEST_CASE("validate_graph flags a disconnected constraint path") {
  WaveformGraph graph;
  graph.name = "w";
  graph.kernels.push_back(nucleus_kernel("a", "FFT", 64));
  graph.kernels.push_back(nucleus_kernel("b", "FFT", 64));
  graph.kernels.push_back(nucleus_kernel("c", "FFT", 64));
  graph.edges.push_back(EdgeSpec{"a", "b", 64, DataFormat{}});
  graph.edges.push_back(EdgeSpec{"b", "c", 64, DataFormat{}});
  ConstraintSpec constraint;
  constraint.kind = PathLatencyConstraint{{"a", "c"}, 100.0};
  graph.constraints.push_back(constraint);
  auto violations = validate_graph(graph);
  CHECK(has_violation(violations, "path-not-connected"));
}

TEST_CASE("validate_graph flags duplicates, dangling edges, and bad params") {
  WaveformGraph graph;
  graph.name = "w";
  graph.kernels.push_back(nucleus_kernel("a", "FFT", 64));
  graph.kernels.push_back(nucleus_kernel("a", "FFT", 32));
  KernelSpec missing_size;
  missing_size.id = "m";
  missing_size.kind = NucleusKernel{NucleusId{"FFT"}, {}, std::nullopt};
  graph.kernels.push_back(missing_size);
  graph.edges.push_back(EdgeSpec{"a", "ghost", 8, DataFormat{}});
  auto violations = validate_graph(graph);
  CHECK(has_violation(violations, "duplicate-kernel"));
  CHECK(has_violation(violations, "missing-size"));
  CHECK(has_violation(violations, "dangling-edge"));
}

TEST_CASE("cycles_of evaluates the three-term model") {
  CHECK(cycles_of(CostModel{0, 0, 5, 0, 0}, 1024) == doctest::Approx(51200.0));
  CHECK(cycles_of(CostModel{7, 0, 0, 0, 0}, 1) == doctest::Approx(7.0));
  CHECK(cycles_of(CostModel{7, 0, 0, 0, 0}, 4096) == doctest::Approx(7.0));
  CHECK(cycles_of(CostModel{1, 2, 3, 0, 0}, 8) == doctest::Approx(89.0));
}

TEST_CASE("cycles_of rejects n = 0") {
  CHECK_THROWS_AS(cycles_of(CostModel{1, 1, 1, 0, 0}, 0), std::domain_error);
}

TEST_CASE("cycles_of is monotone nondecreasing in n") {
  std::mt19937_64 rng(0xc0de0001);
  std::uniform_real_distribution<double> coeff(0.0, 10.0);
  for (int rep = 0; rep < 200; ++rep) {
    CostModel cost{coeff(rng), coeff(rng), coeff(rng), 0, 0};
    double previous = cycles_of(cost, 1);
    for (std::int64_t n = 2; n <= 1 << 14; n *= 2) {
      const double current = cycles_of(cost, n);
      CHECK(current >= previous);
      previous = current;
    }
  }
}

TEST_CASE("energy model is linear in n") {
  CostModel cost{0, 0, 0, 1e-9, 2e-12};
  CHECK(energy_per_invocation_j(cost, 1024) == doctest::Approx(1e-9 + 2e-12 * 1024));
  CHECK_THROWS_AS(energy_per_invocation_j(cost, 0), std::domain_error);
}

TEST_CASE("SizeSet pow2 range membership") {
  SizeSet sizes = SizeSet::pow2_range(64, 4096);
  CHECK(sizes.contains(64));
  CHECK(sizes.contains(1024));
  CHECK(sizes.contains(4096));
  CHECK(!sizes.contains(1000));
  CHECK(!sizes.contains(32));
  CHECK(!sizes.contains(8192));
  CHECK(sizes.min_size() == 64);
  CHECK(!sizes.empty());
}

TEST_CASE("SizeSet explicit list membership") {
  SizeSet sizes = SizeSet::explicit_list({256, 64, 1024, 64});
  CHECK(sizes.contains(64));
  CHECK(sizes.contains(256));
  CHECK(!sizes.contains(128));
  CHECK(sizes.min_size() == 64);
}

TEST_CASE("GlueRules: defaults, overrides, and forbidden pairs") {
  GlueRules rules = GlueRules::defaults();
  CHECK(rules.cycles_per_sample(FormatKind::CFloat32, FormatKind::Q15) ==
        GlueRules::kDefaultCyclesPerSample);
  rules.set(FormatKind::CFloat32, FormatKind::Q15, 3.0);
  CHECK(rules.cycles_per_sample(FormatKind::CFloat32, FormatKind::Q15) == 3.0);
  rules.forbid(FormatKind::Q31, FormatKind::Q15);
  CHECK(!rules.cycles_per_sample(FormatKind::Q31, FormatKind::Q15).has_value());
  auto entries = rules.non_default_entries();
  CHECK(entries.size() == 2);
}
