// Copyright 2026 The osched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <osched/core/types.hpp>

#include <optional>
#include <span>

namespace osched::algo {

/// Earliest Deadline First over a fixed job set, ties by lowest id. Returns
/// the slot trace when every job meets its deadline, none otherwise.
///
/// On one machine with preemption, a job set can be completed on time iff
/// EDF completes it (exchange argument: any feasible schedule can be turned
/// into the EDF one slot by slot without making a job late). This is what
/// lets the oracle use it as its feasibility test.
[[nodiscard]] std::optional<Trace> edf_complete_schedule(std::span<const Job> jobs);

/// Same decision as edf_complete_schedule, computed event by event in
/// O(n log n) without building a trace.
[[nodiscard]] bool edf_feasible(std::span<const Job> jobs);

}  // namespace osched::algo
