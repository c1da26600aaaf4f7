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

#ifndef WDE_BSP_HPP_
#define WDE_BSP_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wde/data_format.hpp"
#include "wde/graph.hpp"
#include "wde/platform.hpp"

namespace wde {

/// Per-flavor performance properties. Cycle count per invocation follows
/// cycles(n) = a + b*n + c*n*log2(n); energy per invocation is e0 + e1*n.
/// Coefficients are nonnegative so both models are monotone in n.
struct CostModel {
  double base_cycles = 0.0;       // a
  double cycles_per_n = 0.0;      // b
  double cycles_per_nlogn = 0.0;  // c
  double energy_base_j = 0.0;     // e0
  double energy_per_n_j = 0.0;    // e1

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

/// cycles(n) for n >= 1. Throws std::domain_error for n < 1.
double cycles_of(const CostModel& cost, std::int64_t n);

/// e0 + e1*n, joules per invocation. Throws std::domain_error for n < 1.
double energy_per_invocation_j(const CostModel& cost, std::int64_t n);

/// Closed power-of-two size range, e.g. [64..4096 pow2].
struct Pow2Range {
  std::int64_t lo = 1;
  std::int64_t hi = 1;

  friend bool operator==(const Pow2Range&, const Pow2Range&) = default;
};

/// Transform sizes a flavor supports: either every power of two in a closed
/// range or an explicit list.
struct SizeSet {
  std::variant<Pow2Range, std::vector<std::int64_t>> values;  // explicit list kept sorted

  static SizeSet pow2_range(std::int64_t lo, std::int64_t hi);
  static SizeSet explicit_list(std::vector<std::int64_t> sizes);

  bool contains(std::int64_t n) const;
  bool empty() const;
  std::int64_t min_size() const;  // precondition: !empty()

  friend bool operator==(const SizeSet&, const SizeSet&) = default;
};

/// A nucleus implementation (NI) bound to one PE: the unit the mapper binds
/// kernels to. Input/output formats drive glue insertion; the cost model
/// drives scheduling and energy accounting.
struct Flavor {
  std::string id;
  NucleusId nucleus;
  std::string pe;
  std::string algorithm;  // free-form tag, e.g. "radix2"
  SizeSet sizes;
  DataFormat input_format;
  DataFormat output_format;
  CostModel cost;
  std::string vendor;  // free-form tag

  friend bool operator==(const Flavor&, const Flavor&) = default;
};

/// Format-conversion cost table keyed by (from kind, to kind). Every pair of
/// distinct-or-equal kinds converts at 2 cycles/sample unless the BSP
/// overrides the cost or forbids the pair; a forbidden pair makes any edge
/// needing it unmappable.
class GlueRules {
 public:
  static constexpr double kDefaultCyclesPerSample = 2.0;

  static GlueRules defaults();

  std::optional<double> cycles_per_sample(FormatKind from, FormatKind to) const;
  void set(FormatKind from, FormatKind to, double cycles_per_sample);
  void forbid(FormatKind from, FormatKind to);

  /// Entries whose cost differs from the default, plus forbidden pairs;
  /// what the canonical printer has to emit.
  std::vector<std::pair<std::pair<FormatKind, FormatKind>, std::optional<double>>>
  non_default_entries() const;

  friend bool operator==(const GlueRules&, const GlueRules&) = default;

 private:
  // Present key = allowed conversion with its cost; absent key = forbidden.
  std::map<std::pair<FormatKind, FormatKind>, double> rules_;
};

/// Board-support package: the platform plus every flavor available on it.
struct Bsp {
  Platform platform;
  std::vector<Flavor> flavors;
  GlueRules glue = GlueRules::defaults();

  const Flavor* find_flavor(const std::string& id) const;

  friend bool operator==(const Bsp&, const Bsp&) = default;
};

}  // namespace wde

#endif  // WDE_BSP_HPP_
