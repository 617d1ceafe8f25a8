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

#include <osched/adversaries/sequence.hpp>
#include <osched/core/simulator.hpp>
#include <osched/core/types.hpp>

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace osched::adversary {

/// One slot of an adaptive game: what was released at `slot` and what the
/// policy ran in it.
struct TranscriptStep {
    Time slot = 0;
    std::vector<JobId> released;
    std::optional<Unit> action;
};

struct AdversaryRun {
    std::string name;
    std::string policy;
    /// Every job the adversary released, in release order.
    Instance instance;
    Trace algorithm_trace;
    std::vector<TranscriptStep> transcript;
    Weight algorithm_gain = 0.0;
    Weight adversary_gain = 0.0;
    /// Ascending ids of the jobs the adversary completes.
    std::vector<JobId> adversary_jobs;
    /// EDF execution of `adversary_jobs`.
    Trace adversary_trace;
    /// adversary_gain / algorithm_gain, or +infinity when the policy gains 0.
    double forced_ratio = std::numeric_limits<double>::infinity();
    std::optional<WeightSequence> sequence;
};

/// Simulator wrapper that records the transcript while an adversary drives
/// the clock.
class Game {
public:
    Game(OnlinePolicy& policy, InstanceInfo info);

    [[nodiscard]] Time now() const noexcept { return sim_.now(); }
    /// Releases a job at now() with the next dense id and returns that id.
    JobId release(Time deadline, Time processing, Weight weight);
    std::optional<Unit> step();
    /// Steps until now() == t.
    void run_until(Time t);
    /// Steps until nothing released is pending.
    void drain();

    [[nodiscard]] const Simulator& simulator() const noexcept { return sim_; }
    [[nodiscard]] const std::vector<TranscriptStep>& transcript() const noexcept { return transcript_; }

private:
    Simulator sim_;
    std::vector<TranscriptStep> transcript_;
    std::vector<JobId> staged_;
};

/// Heaviest set of pairwise disjoint tight jobs, by weighted interval
/// scheduling. Returns ascending ids. Throws InvalidInput for a non-tight
/// job.
[[nodiscard]] std::vector<JobId> heaviest_disjoint_tight(std::span<const Job> jobs);

/// Fills instance, traces, gains and the forced ratio of `run` from a
/// finished game and the adversary's chosen jobs. Throws ConstructionError
/// if EDF cannot complete the chosen jobs.
void score(AdversaryRun& run, Game& game, const InstanceInfo& info, std::vector<JobId> adversary_jobs);

}  // namespace osched::adversary
