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

#include <osched/core/types.hpp>

#include <osched/core/error.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace osched {

void validate(const Job& job) {
    const auto tag = "job " + std::to_string(job.id) + ": ";
    if (job.release < 0) throw InvalidInput(tag + "release time must be >= 0");
    if (job.processing < 1) throw InvalidInput(tag + "processing time must be >= 1");
    if (job.deadline <= job.release) throw InvalidInput(tag + "deadline must be after release");
    if (!std::isfinite(job.weight) || job.weight <= 0.0) throw InvalidInput(tag + "weight must be positive");
}

Instance::Instance(std::vector<Job> jobs, Time k, bool equal_lengths)
    : jobs_(std::move(jobs))
    , k_(k)
    , equal_lengths_(equal_lengths) {
    if (k_ < 1) throw InvalidInput("k must be >= 1");
    for (std::size_t i = 0; i < jobs_.size(); ++i) {
        const Job& job = jobs_[i];
        validate(job);
        if (job.id != static_cast<JobId>(i)) {
            throw InvalidInput("job ids must be dense and in file order; expected " + std::to_string(i) +
                               ", got " + std::to_string(job.id));
        }
        if (i > 0 && job.release < jobs_[i - 1].release) {
            throw InvalidInput("job " + std::to_string(job.id) + " is listed before an earlier release");
        }
        if (job.processing > k_) {
            throw InvalidInput("job " + std::to_string(job.id) + " exceeds the processing bound k");
        }
        if (equal_lengths_ && job.processing != k_) {
            throw InvalidInput("job " + std::to_string(job.id) + " breaks the equal-length flag");
        }
    }
}

Instance Instance::from_jobs(std::vector<Job> jobs, std::optional<Time> k, bool equal_lengths) {
    std::stable_sort(jobs.begin(), jobs.end(),
                     [](const Job& a, const Job& b) { return a.release < b.release; });
    Time longest = 1;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        jobs[i].id = static_cast<JobId>(i);
        longest = std::max(longest, jobs[i].processing);
    }
    return Instance(std::move(jobs), k.value_or(longest), equal_lengths);
}

Weight Instance::total_weight() const noexcept {
    return std::accumulate(jobs_.begin(), jobs_.end(), 0.0,
                           [](Weight acc, const Job& job) { return acc + job.weight; });
}

std::optional<Unit> Trace::at(Time t) const {
    if (t < 0 || t >= horizon()) return std::nullopt;
    return slots[static_cast<std::size_t>(t)];
}

std::optional<Time> Trace::completion_time(JobId id) const {
    if (auto it = completions.find(id); it != completions.end()) return it->second;
    return std::nullopt;
}

Time Trace::remaining_at(const Job& job, Time t) const {
    Time done = 0;
    const Time end = std::min(t, horizon());
    for (Time s = std::max<Time>(0, job.release); s < end; ++s) {
        const auto& slot = slots[static_cast<std::size_t>(s)];
        if (slot && slot->job == job.id) ++done;
    }
    return job.processing - done;
}

std::vector<JobId> Trace::completion_order() const {
    std::vector<std::pair<Time, JobId>> order;
    order.reserve(completions.size());
    for (const auto& [id, at] : completions) order.emplace_back(at, id);
    std::sort(order.begin(), order.end());
    std::vector<JobId> ids;
    ids.reserve(order.size());
    for (const auto& entry : order) ids.push_back(entry.second);
    return ids;
}

void append_slot(Trace& trace, std::optional<Unit> unit) {
    const Time t = trace.horizon();
    trace.slots.push_back(unit);
    if (unit && unit->remaining == 1) trace.completions[unit->job] = t + 1;
}

std::vector<std::string> check_well_formed(const Trace& trace, std::span<const Job> jobs) {
    std::vector<std::string> problems;
    std::unordered_map<JobId, const Job*> by_id;
    for (const Job& job : jobs) by_id.emplace(job.id, &job);

    std::unordered_map<JobId, Time> last_remaining;
    std::map<JobId, Time> expected_completions;
    for (Time t = 0; t < trace.horizon(); ++t) {
        const auto& slot = trace.slots[static_cast<std::size_t>(t)];
        if (!slot) continue;
        const auto where = "t=" + std::to_string(t) + ": ";
        auto it = by_id.find(slot->job);
        if (it == by_id.end()) {
            problems.push_back(where + "unknown job " + std::to_string(slot->job));
            continue;
        }
        const Job& job = *it->second;
        if (t < job.release || t >= job.deadline) {
            problems.push_back(where + "job " + std::to_string(job.id) + " outside its window");
        }
        const Time expected = last_remaining.contains(job.id) ? last_remaining[job.id] - 1 : job.processing;
        if (slot->remaining != expected) {
            problems.push_back(where + "job " + std::to_string(job.id) + " has remaining " +
                               std::to_string(slot->remaining) + ", expected " + std::to_string(expected));
        }
        if (slot->remaining < 1 || slot->remaining > job.processing) {
            problems.push_back(where + "remaining time out of range");
        }
        last_remaining[job.id] = slot->remaining;
        if (slot->remaining == 1) expected_completions[job.id] = t + 1;
    }
    if (expected_completions != trace.completions) {
        problems.push_back("completion table does not match the executed units");
    }
    return problems;
}

Weight gain(const Trace& trace, std::span<const Job> jobs) {
    Weight total = 0.0;
    for (const Job& job : jobs) {
        if (auto at = trace.completion_time(job.id); at && *at <= job.deadline) total += job.weight;
    }
    return total;
}

Weight gain(const Trace& trace, const Instance& instance) { return gain(trace, instance.jobs()); }

std::optional<Time> critical_time(const Trace& trace, const Job& job) {
    if (trace.completed(job.id)) {
        throw InvalidInput("critical time is undefined for completed job " + std::to_string(job.id));
    }
    std::optional<Time> last;
    Time remaining = job.processing;
    for (Time t = job.release; t < job.deadline; ++t) {
        if (is_pending(job, remaining, t)) last = t;
        if (auto unit = trace.at(t); unit && unit->job == job.id) --remaining;
    }
    return last;
}

bool PendingView::any_pending() const noexcept {
    return std::any_of(jobs.begin(), jobs.end(), [](const JobState& s) { return s.pending; });
}

const JobState* PendingView::find(JobId id) const noexcept {
    for (const JobState& state : jobs) {
        if (state.job.id == id) return &state;
    }
    return nullptr;
}

}  // namespace osched
