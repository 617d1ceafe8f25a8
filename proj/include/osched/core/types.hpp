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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace osched {

/// Integral slot index. A unit scheduled at t occupies [t, t+1).
using Time = std::int64_t;
/// Dense job identifier assigned in release order.
using JobId = std::int32_t;
using Weight = double;

/// Absolute tolerance for weight comparisons.
inline constexpr double kWeightTolerance = 1e-9;

struct Job {
    JobId id = 0;
    Time release = 0;
    Time deadline = 1;
    Time processing = 1;
    Weight weight = 1.0;

    [[nodiscard]] double smith_ratio() const noexcept { return weight / static_cast<double>(processing); }
    /// True when the job must start at release and run without a break.
    [[nodiscard]] bool tight() const noexcept { return release + processing == deadline; }
    /// True when the job fits its own window at all.
    [[nodiscard]] bool feasible_alone() const noexcept { return release + processing <= deadline; }

    friend bool operator==(const Job&, const Job&) = default;
};

/// Throws InvalidInput unless r >= 0, r < d, p >= 1 and w > 0.
void validate(const Job& job);

/// A job with `remaining` units left is pending at `t` when it has been
/// released and can still finish by its deadline if run from t onward.
[[nodiscard]] constexpr bool is_pending(const Job& job, Time remaining, Time t) noexcept {
    return remaining > 0 && job.release <= t && t + remaining <= job.deadline;
}

class Instance {
public:
    Instance() = default;
    /// Jobs must carry ids 0..n-1 in order, with non-decreasing release
    /// times. Throws InvalidInput otherwise.
    Instance(std::vector<Job> jobs, Time k, bool equal_lengths);

    /// Sorts by (release, input position), reassigns dense ids and infers k
    /// as the largest processing time when `k` is not given.
    static Instance from_jobs(std::vector<Job> jobs, std::optional<Time> k = std::nullopt,
                              bool equal_lengths = false);

    [[nodiscard]] std::span<const Job> jobs() const noexcept { return jobs_; }
    [[nodiscard]] const Job& job(JobId id) const { return jobs_.at(static_cast<std::size_t>(id)); }
    [[nodiscard]] std::size_t size() const noexcept { return jobs_.size(); }
    [[nodiscard]] bool empty() const noexcept { return jobs_.empty(); }
    [[nodiscard]] Time k() const noexcept { return k_; }
    [[nodiscard]] bool equal_lengths() const noexcept { return equal_lengths_; }
    [[nodiscard]] Weight total_weight() const noexcept;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<Job> jobs_;
    Time k_ = 1;
    bool equal_lengths_ = false;
};

/// Execution of `job` while it had `remaining` units left, i.e. unit (i, a).
struct Unit {
    JobId job = 0;
    Time remaining = 1;

    friend bool operator==(const Unit&, const Unit&) = default;
};

/// Slot-by-slot record of one schedule.
struct Trace {
    std::vector<std::optional<Unit>> slots;
    /// Completion time C_i = t + 1 where t holds unit (i, 1).
    std::map<JobId, Time> completions;

    [[nodiscard]] Time horizon() const noexcept { return static_cast<Time>(slots.size()); }
    [[nodiscard]] std::optional<Unit> at(Time t) const;
    [[nodiscard]] bool completed(JobId id) const { return completions.contains(id); }
    [[nodiscard]] std::optional<Time> completion_time(JobId id) const;
    /// q_j(t): units of `job` left at the start of slot t.
    [[nodiscard]] Time remaining_at(const Job& job, Time t) const;
    /// Completed jobs ordered by completion time.
    [[nodiscard]] std::vector<JobId> completion_order() const;

    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Appends `unit` at slot `slots.size()` and records a completion when the
/// unit is the job's last one.
void append_slot(Trace& trace, std::optional<Unit> unit);

/// Structural checks: slot windows, strictly decreasing remaining times,
/// exact unit sequences and completion bookkeeping. Returns one message per
/// problem; empty means well formed.
[[nodiscard]] std::vector<std::string> check_well_formed(const Trace& trace, std::span<const Job> jobs);

/// Total weight of jobs the trace completes on time.
[[nodiscard]] Weight gain(const Trace& trace, const Instance& instance);
[[nodiscard]] Weight gain(const Trace& trace, std::span<const Job> jobs);

/// Last slot at which an uncompleted job was pending; none if it never was.
/// Throws InvalidInput for a job the trace completes.
[[nodiscard]] std::optional<Time> critical_time(const Trace& trace, const Job& job);

/// Released, uncompleted jobs at one slot as seen by an online policy.
struct JobState {
    Job job;
    Time remaining = 0;
    bool pending = false;
};

struct PendingView {
    Time now = 0;
    std::vector<JobState> jobs;

    [[nodiscard]] bool any_pending() const noexcept;
    [[nodiscard]] const JobState* find(JobId id) const noexcept;
};

}  // namespace osched
