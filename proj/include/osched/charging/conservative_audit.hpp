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

#include <osched/charging/ledger.hpp>
#include <osched/core/types.hpp>

#include <map>
#include <optional>
#include <vector>

namespace osched::charging {

/// One interval [start, end) of the equal-length charging procedure, with
/// end = C_target - b*k.
struct IntervalLabel {
    Time start = 0;
    Time end = 0;
    Time b = 0;
    JobId target = 0;
    std::optional<JobId> mark;
    /// Adversary jobs started so far and not yet charged, after this interval.
    std::vector<JobId> pending_after;
};

struct ConservativeTotals {
    Weight weight = 0.0;
    double self_charge = 0.0;
    double other_charge = 0.0;
};

struct ConservativeReport {
    std::vector<IntervalLabel> intervals;
    std::map<JobId, ConservativeTotals> targets;
    std::vector<Violation> violations;

    [[nodiscard]] bool pass() const noexcept { return violations.empty(); }
};

/// Replays the interval-marking charging scheme for equal-length jobs.
///
/// Jobs both sides complete are charged to themselves. The remaining
/// adversary jobs enter a set P when the adversary starts them, and each
/// interval takes the earliest-deadline member of P. The report flags:
/// a member of P that is not pending for the algorithm at the interval end,
/// a marked job heavier than 2^(1-b) w_i, a non-empty P at the last
/// completion, and any target whose non-self charge exceeds 4 w_i.
///
/// Throws ConfigError if the instance is not equal-length or if `adv` is not
/// the EDF schedule of the jobs it touches, all of them completed.
[[nodiscard]] ConservativeReport conservative_audit(const Instance& instance, const Trace& alg, const Trace& adv);

}  // namespace osched::charging
