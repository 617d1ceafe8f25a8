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

#include <osched/oracle/optimum.hpp>

#include <osched/algorithms/edf.hpp>
#include <osched/core/error.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace osched::oracle {
namespace {

bool same_weight(Weight a, Weight b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

class BranchAndBound {
public:
    explicit BranchAndBound(std::span<const Job> jobs) {
        for (const Job& job : jobs) {
            if (job.feasible_alone()) candidates_.push_back(job);
        }
        std::sort(candidates_.begin(), candidates_.end(), [](const Job& a, const Job& b) {
            return a.weight != b.weight ? a.weight > b.weight : a.id < b.id;
        });
        suffix_.assign(candidates_.size() + 1, 0.0);
        for (std::size_t i = candidates_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + candidates_[i].weight;
    }

    OptimumResult run() {
        explore(0, 0.0);
        OptimumResult result;
        for (const Job& job : best_) result.chosen.push_back(job.id);
        std::sort(result.chosen.begin(), result.chosen.end());
        result.gain = best_gain_;
        result.witness = algo::edf_complete_schedule(best_).value_or(Trace{});
        return result;
    }

private:
    void explore(std::size_t index, Weight gain) {
        offer(gain);
        if (index == candidates_.size()) return;
        if (gain + suffix_[index] < best_gain_ && !same_weight(gain + suffix_[index], best_gain_)) return;

        current_.push_back(candidates_[index]);
        if (algo::edf_feasible(current_)) explore(index + 1, gain + candidates_[index].weight);
        current_.pop_back();
        explore(index + 1, gain);
    }

    void offer(Weight gain) {
        if (same_weight(gain, best_gain_)) {
            if (ids(current_) < ids(best_)) best_ = current_;
        } else if (gain > best_gain_) {
            best_gain_ = gain;
            best_ = current_;
        }
    }

    static std::vector<JobId> ids(const std::vector<Job>& jobs) {
        std::vector<JobId> out;
        out.reserve(jobs.size());
        for (const Job& job : jobs) out.push_back(job.id);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Job> candidates_;
    std::vector<Weight> suffix_;
    std::vector<Job> current_;
    std::vector<Job> best_;
    Weight best_gain_ = 0.0;
};

}  // namespace

OptimumResult offline_optimum(std::span<const Job> jobs, const OracleOptions& options) {
    if (jobs.size() > options.max_jobs) {
        throw BudgetError("offline optimum limited to " + std::to_string(options.max_jobs) + " jobs, got " +
                          std::to_string(jobs.size()));
    }
    auto result = BranchAndBound(jobs).run();
    // Recompute in id order so equal sets always report bit-identical gains.
    result.gain = 0.0;
    for (const Job& job : jobs) {
        if (std::binary_search(result.chosen.begin(), result.chosen.end(), job.id)) result.gain += job.weight;
    }
    return result;
}

OptimumResult offline_optimum(const Instance& instance, const OracleOptions& options) {
    return offline_optimum(instance.jobs(), options);
}

Weight exhaustive_schedule_optimum(const Instance& instance, Time horizon) {
    if (instance.size() > 4 || horizon > 10 || horizon < 0) {
        throw BudgetError("exhaustive optimum limited to n <= 4 and horizon <= 10");
    }
    const auto jobs = instance.jobs();
    std::vector<Time> remaining;
    for (const Job& job : jobs) remaining.push_back(job.processing);
    Weight best = 0.0;

    // Running a job outside its window or after it finished wastes the slot
    // exactly like idling, so those actions are folded into the idle branch.
    std::function<void(Time)> visit = [&](Time t) {
        if (t == horizon) {
            Weight total = 0.0;
            for (std::size_t i = 0; i < jobs.size(); ++i) {
                if (remaining[i] == 0) total += jobs[i].weight;
            }
            best = std::max(best, total);
            return;
        }
        visit(t + 1);
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            if (remaining[i] == 0 || t < jobs[i].release || t >= jobs[i].deadline) continue;
            --remaining[i];
            visit(t + 1);
            ++remaining[i];
        }
    };
    visit(0);
    return best;
}

}  // namespace osched::oracle
