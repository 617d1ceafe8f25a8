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

#include <osched/algorithms/edf.hpp>

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <vector>

namespace osched::algo {
namespace {

struct ByDeadline {
    bool operator()(const Job* a, const Job* b) const {
        return a->deadline != b->deadline ? a->deadline > b->deadline : a->id > b->id;
    }
};

std::vector<const Job*> by_release(std::span<const Job> jobs) {
    std::vector<const Job*> order;
    order.reserve(jobs.size());
    for (const Job& job : jobs) order.push_back(&job);
    std::sort(order.begin(), order.end(), [](const Job* a, const Job* b) {
        return a->release != b->release ? a->release < b->release : a->id < b->id;
    });
    return order;
}

}  // namespace

std::optional<Trace> edf_complete_schedule(std::span<const Job> jobs) {
    const auto order = by_release(jobs);
    std::priority_queue<const Job*, std::vector<const Job*>, ByDeadline> ready;
    std::vector<Time> remaining(order.size());
    std::unordered_map<const Job*, std::size_t> slot_of;
    for (std::size_t i = 0; i < order.size(); ++i) {
        remaining[i] = order[i]->processing;
        slot_of[order[i]] = i;
    }

    Trace trace;
    std::size_t next = 0;
    Time t = 0;
    while (next < order.size() || !ready.empty()) {
        while (next < order.size() && order[next]->release == t) ready.push(order[next++]);
        if (ready.empty()) {
            append_slot(trace, std::nullopt);
            ++t;
            continue;
        }
        const Job* job = ready.top();
        if (t >= job->deadline) return std::nullopt;
        auto& left = remaining[slot_of[job]];
        append_slot(trace, Unit{job->id, left});
        if (--left == 0) ready.pop();
        ++t;
    }
    return trace;
}

bool edf_feasible(std::span<const Job> jobs) {
    const auto order = by_release(jobs);
    std::priority_queue<std::pair<Time, std::size_t>, std::vector<std::pair<Time, std::size_t>>,
                        std::greater<>>
        ready;
    std::vector<Time> remaining(order.size());
    std::size_t next = 0;
    Time t = 0;
    while (next < order.size() || !ready.empty()) {
        if (ready.empty()) t = std::max(t, order[next]->release);
        while (next < order.size() && order[next]->release <= t) {
            remaining[next] = order[next]->processing;
            ready.emplace(order[next]->deadline, next);
            ++next;
        }
        const auto [deadline, index] = ready.top();
        const Time horizon = next < order.size() ? order[next]->release : t + remaining[index];
        const Time run = std::min(remaining[index], horizon - t);
        t += run;
        remaining[index] -= run;
        if (remaining[index] == 0) {
            if (t > deadline) return false;
            ready.pop();
        }
    }
    return true;
}

}  // namespace osched::algo
