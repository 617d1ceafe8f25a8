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

#include <osched/adversaries/run.hpp>

#include <osched/algorithms/edf.hpp>
#include <osched/core/error.hpp>

#include <algorithm>
#include <limits>

namespace osched::adversary {

Game::Game(OnlinePolicy& policy, InstanceInfo info)
    : sim_(policy, info) {}

JobId Game::release(Time deadline, Time processing, Weight weight) {
    Job job;
    job.id = static_cast<JobId>(sim_.released().size());
    job.release = sim_.now();
    job.deadline = deadline;
    job.processing = processing;
    job.weight = weight;
    sim_.release(job);
    staged_.push_back(job.id);
    return job.id;
}

std::optional<Unit> Game::step() {
    TranscriptStep record;
    record.slot = sim_.now();
    record.released = std::move(staged_);
    staged_.clear();
    record.action = sim_.step();
    transcript_.push_back(std::move(record));
    return transcript_.back().action;
}

void Game::run_until(Time t) {
    while (sim_.now() < t) step();
}

void Game::drain() {
    while (sim_.any_pending()) step();
}

std::vector<JobId> heaviest_disjoint_tight(std::span<const Job> jobs) {
    std::vector<Job> order(jobs.begin(), jobs.end());
    for (const Job& job : order) {
        if (!job.tight()) throw InvalidInput("job " + std::to_string(job.id) + " is not tight");
    }
    std::sort(order.begin(), order.end(), [](const Job& a, const Job& b) {
        return a.deadline != b.deadline ? a.deadline < b.deadline : a.id < b.id;
    });
    const std::size_t n = order.size();
    // best[i]: heaviest disjoint subset of the first i jobs by deadline.
    std::vector<Weight> best(n + 1, 0.0);
    std::vector<std::size_t> previous(n, 0);
    std::vector<bool> take(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const Time start = order[i].release;
        previous[i] = static_cast<std::size_t>(
            std::upper_bound(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i), start,
                             [](Time value, const Job& job) { return value < job.deadline; }) -
            order.begin());
        const Weight with = best[previous[i]] + order[i].weight;
        take[i] = with > best[i];
        best[i + 1] = take[i] ? with : best[i];
    }
    std::vector<JobId> chosen;
    for (std::size_t i = n; i > 0;) {
        if (take[i - 1]) {
            chosen.push_back(order[i - 1].id);
            i = previous[i - 1];
        } else {
            --i;
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

void score(AdversaryRun& run, Game& game, const InstanceInfo& info, std::vector<JobId> adversary_jobs) {
    const auto& released = game.simulator().released();
    run.instance = Instance(released, info.k, info.equal_lengths);
    run.algorithm_trace = game.simulator().trace();
    run.transcript = game.transcript();
    run.algorithm_gain = gain(run.algorithm_trace, run.instance);

    std::sort(adversary_jobs.begin(), adversary_jobs.end());
    std::vector<Job> chosen;
    for (const JobId id : adversary_jobs) chosen.push_back(run.instance.job(id));
    auto schedule = algo::edf_complete_schedule(chosen);
    if (!schedule) throw ConstructionError(run.name + ": adversary jobs are not jointly feasible");
    run.adversary_trace = std::move(*schedule);
    run.adversary_jobs = std::move(adversary_jobs);
    run.adversary_gain = 0.0;
    for (const Job& job : chosen) run.adversary_gain += job.weight;

    run.forced_ratio = run.algorithm_gain > 0.0 ? run.adversary_gain / run.algorithm_gain
                                                : std::numeric_limits<double>::infinity();
}

}  // namespace osched::adversary
