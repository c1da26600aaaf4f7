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

#include "wde/bsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wde {

double cycles_of(const CostModel& cost, std::int64_t n) {
  if (n < 1) throw std::domain_error("cycles_of: transform size must be >= 1");
  const double size = static_cast<double>(n);
  return cost.base_cycles + cost.cycles_per_n * size +
         cost.cycles_per_nlogn * size * std::log2(size);
}

double energy_per_invocation_j(const CostModel& cost, std::int64_t n) {
  if (n < 1) throw std::domain_error("energy_per_invocation_j: transform size must be >= 1");
  return cost.energy_base_j + cost.energy_per_n_j * static_cast<double>(n);
}

SizeSet SizeSet::pow2_range(std::int64_t lo, std::int64_t hi) {
  SizeSet set;
  set.values = Pow2Range{lo, hi};
  return set;
}

SizeSet SizeSet::explicit_list(std::vector<std::int64_t> sizes) {
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  SizeSet set;
  set.values = std::move(sizes);
  return set;
}

namespace {

bool is_power_of_two(std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

bool SizeSet::contains(std::int64_t n) const {
  if (const Pow2Range* range = std::get_if<Pow2Range>(&values)) {
    return is_power_of_two(n) && n >= range->lo && n <= range->hi;
  }
  const auto& list = std::get<std::vector<std::int64_t>>(values);
  return std::binary_search(list.begin(), list.end(), n);
}

bool SizeSet::empty() const {
  if (const Pow2Range* range = std::get_if<Pow2Range>(&values)) {
    return range->lo > range->hi;
  }
  return std::get<std::vector<std::int64_t>>(values).empty();
}

std::int64_t SizeSet::min_size() const {
  if (const Pow2Range* range = std::get_if<Pow2Range>(&values)) {
    return range->lo;
  }
  return std::get<std::vector<std::int64_t>>(values).front();
}

GlueRules GlueRules::defaults() {
  GlueRules rules;
  const FormatKind kinds[] = {FormatKind::Q15, FormatKind::Q31, FormatKind::Float32,
                              FormatKind::CFloat32};
  for (FormatKind from : kinds) {
    for (FormatKind to : kinds) {
      rules.rules_[{from, to}] = kDefaultCyclesPerSample;
    }
  }
  return rules;
}

std::optional<double> GlueRules::cycles_per_sample(FormatKind from, FormatKind to) const {
  auto it = rules_.find({from, to});
  if (it == rules_.end()) return std::nullopt;
  return it->second;
}

void GlueRules::set(FormatKind from, FormatKind to, double cycles_per_sample) {
  rules_[{from, to}] = cycles_per_sample;
}

void GlueRules::forbid(FormatKind from, FormatKind to) { rules_.erase({from, to}); }

std::vector<std::pair<std::pair<FormatKind, FormatKind>, std::optional<double>>>
GlueRules::non_default_entries() const {
  std::vector<std::pair<std::pair<FormatKind, FormatKind>, std::optional<double>>> out;
  const FormatKind kinds[] = {FormatKind::Q15, FormatKind::Q31, FormatKind::Float32,
                              FormatKind::CFloat32};
  for (FormatKind from : kinds) {
    for (FormatKind to : kinds) {
      auto it = rules_.find({from, to});
      if (it == rules_.end()) {
        out.push_back({{from, to}, std::nullopt});
      } else if (it->second != kDefaultCyclesPerSample) {
        out.push_back({{from, to}, it->second});
      }
    }
  }
  return out;
}

const Flavor* Bsp::find_flavor(const std::string& id) const {
  for (const Flavor& flavor : flavors) {
    if (flavor.id == id) return &flavor;
  }
  return nullptr;
}

}  // namespace wde
