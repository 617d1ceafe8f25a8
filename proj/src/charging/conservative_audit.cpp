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

#include <osched/charging/conservative_audit.hpp>

#include <osched/algorithms/edf.hpp>
#include <osched/core/error.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace osched::charging {
namespace {

constexpr double kRelTolerance = 1e-9;

bool at_most(double value, double bound) {
    return value <= bound + kRelTolerance * std::max(1.0, std::abs(bound));
}

Trace trim_idle_tail(Trace trace) {
    while (!trace.slots.empty() && !trace.slots.back()) trace.slots.pop_back();
    return trace;
}

void require_edf_adversary(const Instance& instance, const Trace& adv) {
    std::set<JobId> touched;
    for (const auto& slot : adv.slots) {
        if (slot) touched.insert(slot->job);
    }
    std::vector<Job> jobs;
    for (const JobId id : touched) {
        if (!adv.completed(id)) {
            throw ConfigError("adversary trace starts job " + std::to_string(id) + " without completing it");
        }
        jobs.push_back(instance.job(id));
    }
    const auto edf = algo::edf_complete_schedule(jobs);
    if (!edf || trim_idle_tail(*edf) != trim_idle_tail(adv)) {
        throw ConfigError("adversary trace is not the EDF schedule of its jobs");
    }
}

}  // namespace

ConservativeReport conservative_audit(const Instance& instance, const Trace& alg, const Trace& adv) {
    if (!instance.equal_lengths()) throw ConfigError("conservative audit needs an equal-length instance");
    require_edf_adversary(instance, adv);

    const Time k = instance.k();
    ConservativeReport report;

    for (const JobId id : alg.completion_order()) {
        report.targets[id].weight = instance.job(id).weight;
        if (adv.completed(id)) report.targets[id].self_charge += instance.job(id).weight;
    }

    struct Started {
        Time at;
        JobId id;
    };
    std::vector<Started> started;
    for (const auto& [id, done] : adv.completions) {
        if (alg.completed(id)) continue;
        for (Time t = 0; t < adv.horizon(); ++t) {
            if (auto unit = adv.at(t); unit && unit->job == id) {
                started.push_back({t, id});
                break;
            }
        }
    }
    std::sort(started.begin(), started.end(),
              [](const Started& a, const Started& b) { return a.at != b.at ? a.at < b.at : a.id < b.id; });

    auto by_deadline = [&](JobId a, JobId b) {
        const Job& x = instance.job(a);
        const Job& y = instance.job(b);
        return x.deadline != y.deadline ? x.deadline < y.deadline : a < b;
    };

    std::vector<JobId> pool;
    std::size_t next = 0;
    Time previous = 0;
    for (const JobId target : alg.completion_order()) {
        const Time finish = *alg.completion_time(target);
        const Time blocks = (finish - previous + k - 1) / k;
        const double target_weight = instance.job(target).weight;
        for (Time b = blocks - 1; b >= 0; --b) {
            IntervalLabel interval;
            interval.start = std::max(previous, finish - (b + 1) * k);
            interval.end = finish - b * k;
            interval.b = b;
            interval.target = target;

            while (next < started.size() && started[next].at < interval.end) pool.push_back(started[next++].id);
            if (!pool.empty()) {
                auto it = std::min_element(pool.begin(), pool.end(), by_deadline);
                const JobId charged = *it;
                pool.erase(it);
                interval.mark = charged;
                const double w = instance.job(charged).weight;
                report.targets[target].other_charge += w;
                if (!at_most(w, std::exp2(1.0 - static_cast<double>(b)) * target_weight)) {
                    report.violations.push_back({"mark-weight", interval.start, charged,
                                                 "marked job heavier than 2^(1-b) w_i for b=" + std::to_string(b)});
                }
            }
            interval.pending_after = pool;
            for (const JobId id : pool) {
                const Job& job = instance.job(id);
                if (!is_pending(job, alg.remaining_at(job, interval.end), interval.end)) {
                    report.violations.push_back({"not-pending", interval.end, id,
                                                 "job in P is not pending for the algorithm"});
                }
            }
            report.intervals.push_back(std::move(interval));
        }
        previous = finish;
    }

    if (!pool.empty() || next < started.size()) {
        report.violations.push_back({"leftover", previous, pool.empty() ? started[next].id : pool.front(),
                                     "adversary jobs remain uncharged after the last completion"});
    }

    // The intervals must tile [0, C_n); inside a block all but the first have length k.
    Time cursor = 0;
    for (std::size_t i = 0; i < report.intervals.size(); ++i) {
        const auto& interval = report.intervals[i];
        const bool first_of_block = i == 0 || report.intervals[i - 1].target != interval.target;
        const Time length = interval.end - interval.start;
        if (interval.start != cursor || length <= 0 || length > k || (!first_of_block && length != k)) {
            report.violations.push_back({"partition", interval.start, interval.target, "interval does not tile"});
        }
        cursor = interval.end;
    }

    for (const auto& [id, totals] : report.targets) {
        if (!at_most(totals.other_charge, 4.0 * totals.weight)) {
            report.violations.push_back({"charge-bound", -1, id, "non-self charge exceeds 4w"});
        }
        if (!at_most(totals.self_charge + totals.other_charge, 5.0 * totals.weight)) {
            report.violations.push_back({"charge-bound", -1, id, "total charge exceeds 5w"});
        }
    }
    return report;
}

}  // namespace osched::charging
