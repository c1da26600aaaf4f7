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

#ifndef WDE_SCHEDULE_HPP_
#define WDE_SCHEDULE_HPP_

#include <string>
#include <vector>

namespace wde {

struct ScheduleEntry {
  std::string task;  // kernel id or glue task id
  std::string pe;
  double start_s = 0.0;
  double end_s = 0.0;

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

struct LinkEntry {
  std::string edge;  // "src->dst"
  std::string link;
  double start_s = 0.0;
  double end_s = 0.0;

  friend bool operator==(const LinkEntry&, const LinkEntry&) = default;
};

/// Static non-preemptive schedule. Entries on one PE never overlap, and
/// transfers on one link never overlap; makespan is the latest end time.
struct Schedule {
  std::vector<ScheduleEntry> entries;
  std::vector<LinkEntry> link_entries;
  double makespan_s = 0.0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

}  // namespace wde

#endif  // WDE_SCHEDULE_HPP_
