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
#include <string>
#include <vector>

namespace osched {

/// What a policy may know about the instance before the first release.
struct InstanceInfo {
    Time k = 1;
    bool equal_lengths = false;
};

/// A deterministic slot policy. It sees only released jobs.
class OnlinePolicy {
public:
    virtual ~OnlinePolicy() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    /// Resets internal state for a new run.
    virtual void start(const InstanceInfo& /*info*/) {}
    virtual void observe_release(const Job& /*job*/) {}
    /// Returns a pending job to run at `view.now`, or none to idle.
    [[nodiscard]] virtual std::optional<JobId> choose(const PendingView& view) = 0;
};

/// Step-wise online game. Jobs are revealed at the current slot, then one
/// slot is executed at a time. Adaptive adversaries drive it directly.
class Simulator {
public:
    Simulator(OnlinePolicy& policy, InstanceInfo info);

    [[nodiscard]] Time now() const noexcept { return now_; }

    /// Reveals `job` at the current slot. Requires job.release == now() and
    /// the next dense id.
    void release(const Job& job);

    /// Asks the policy for a decision at now(), records it and advances the
    /// clock. Throws SimulationFault for a non-pending choice.
    std::optional<Unit> step();

    [[nodiscard]] bool any_pending() const noexcept;
    [[nodiscard]] PendingView view() const;
    [[nodiscard]] const Trace& trace() const noexcept { return trace_; }
    [[nodiscard]] const std::vector<Job>& released() const noexcept { return released_; }
    [[nodiscard]] Time remaining(JobId id) const { return remaining_.at(static_cast<std::size_t>(id)); }
    [[nodiscard]] bool completed(JobId id) const { return trace_.completed(id); }
    [[nodiscard]] std::size_t completions() const noexcept { return trace_.completions.size(); }

private:
    OnlinePolicy& policy_;
    InstanceInfo info_;
    Time now_ = 0;
    std::vector<Job> released_;
    std::vector<Time> remaining_;
    Trace trace_;
};

/// Plays `policy` on a fixed instance until nothing is pending and no
/// release remains.
[[nodiscard]] Trace simulate(const Instance& instance, OnlinePolicy& policy);

}  // namespace osched
