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

#include <osched/core/simulator.hpp>

#include <osched/core/error.hpp>

namespace osched {

Simulator::Simulator(OnlinePolicy& policy, InstanceInfo info)
    : policy_(policy)
    , info_(info) {
    policy_.start(info_);
}

void Simulator::release(const Job& job) {
    validate(job);
    if (job.release != now_) {
        throw SimulationFault(now_, "job " + std::to_string(job.id) + " released at r=" +
                                        std::to_string(job.release));
    }
    if (job.id != static_cast<JobId>(released_.size())) {
        throw SimulationFault(now_, "job ids must be dense in release order");
    }
    released_.push_back(job);
    remaining_.push_back(job.processing);
    policy_.observe_release(job);
}

bool Simulator::any_pending() const noexcept {
    for (std::size_t i = 0; i < released_.size(); ++i) {
        if (is_pending(released_[i], remaining_[i], now_)) return true;
    }
    return false;
}

PendingView Simulator::view() const {
    PendingView view;
    view.now = now_;
    for (std::size_t i = 0; i < released_.size(); ++i) {
        if (remaining_[i] == 0) continue;
        view.jobs.push_back({released_[i], remaining_[i], is_pending(released_[i], remaining_[i], now_)});
    }
    return view;
}

std::optional<Unit> Simulator::step() {
    const auto choice = policy_.choose(view());
    std::optional<Unit> unit;
    if (choice) {
        const auto index = static_cast<std::size_t>(*choice);
        if (*choice < 0 || index >= released_.size()) {
            throw SimulationFault(now_, policy_.name() + " chose unreleased job " + std::to_string(*choice));
        }
        if (!is_pending(released_[index], remaining_[index], now_)) {
            throw SimulationFault(now_, policy_.name() + " chose non-pending job " + std::to_string(*choice));
        }
        unit = Unit{*choice, remaining_[index]};
        --remaining_[index];
    }
    append_slot(trace_, unit);
    ++now_;
    return unit;
}

Trace simulate(const Instance& instance, OnlinePolicy& policy) {
    Simulator sim(policy, {instance.k(), instance.equal_lengths()});
    const auto jobs = instance.jobs();
    std::size_t next = 0;
    for (;;) {
        while (next < jobs.size() && jobs[next].release == sim.now()) sim.release(jobs[next++]);
        if (next == jobs.size() && !sim.any_pending()) break;
        sim.step();
    }
    return sim.trace();
}

}  // namespace osched
