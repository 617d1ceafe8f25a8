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

#include <osched/charging/ledger.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

namespace osched::charging {
namespace {

constexpr double kRelTolerance = 1e-9;

bool at_most(double value, double bound) {
    return value <= bound + kRelTolerance * std::max(1.0, std::abs(bound));
}

std::string fmt(double value) {
    std::ostringstream out;
    out.precision(12);
    out << value;
    return out.str();
}

/// Precomputed view of the algorithm's schedule over a common horizon.
class AlgorithmView {
public:
    AlgorithmView(const Instance& instance, const Trace& alg, const algo::CapacityFunction& capacity)
        : alg_(alg) {
        horizon_ = std::max<Time>({alg.horizon(), 1});
        for (const Job& job : instance.jobs()) horizon_ = std::max(horizon_, job.deadline);

        k_star_.assign(static_cast<std::size_t>(horizon_), 0);
        for (const Job& job : instance.jobs()) {
            for (Time t = job.release; t < horizon_; ++t) {
                auto& slot = k_star_[static_cast<std::size_t>(t)];
                slot = std::max(slot, job.processing);
            }
            final_k_star_ = std::max(final_k_star_, job.processing);
        }

        remaining_.resize(instance.size());
        for (const Job& job : instance.jobs()) {
            auto& row = remaining_[static_cast<std::size_t>(job.id)];
            row.resize(static_cast<std::size_t>(job.deadline - job.release + 1));
            Time left = job.processing;
            for (Time t = job.release; t <= job.deadline; ++t) {
                row[static_cast<std::size_t>(t - job.release)] = left;
                if (auto unit = alg.at(t); unit && unit->job == job.id) --left;
            }
        }

        capacity_.resize(static_cast<std::size_t>(horizon_));
        for (Time t = 0; t < alg.horizon(); ++t) {
            if (auto unit = alg.at(t)) {
                capacity_[static_cast<std::size_t>(t)] =
                    capacity.evaluate(instance.job(unit->job).weight, unit->remaining, k_star(t));
            }
        }

        for (const auto& [id, at] : alg.completions) completions_.emplace_back(at, id);
        std::sort(completions_.begin(), completions_.end());
    }

    [[nodiscard]] Time horizon() const noexcept { return horizon_; }
    [[nodiscard]] Time final_k_star() const noexcept { return std::max<Time>(final_k_star_, 1); }

    [[nodiscard]] Time k_star(Time t) const {
        if (t < 0) return 1;
        if (t >= horizon_) return final_k_star();
        return std::max<Time>(k_star_[static_cast<std::size_t>(t)], 1);
    }

    /// q_j(t) for the algorithm, valid on [r_j, d_j].
    [[nodiscard]] Time remaining(const Job& job, Time t) const {
        const auto& row = remaining_[static_cast<std::size_t>(job.id)];
        t = std::clamp(t, job.release, job.deadline);
        return row[static_cast<std::size_t>(t - job.release)];
    }

    [[nodiscard]] bool pending(const Job& job, Time t) const {
        return t >= job.release && t < job.deadline && is_pending(job, remaining(job, t), t);
    }

    [[nodiscard]] std::optional<double> capacity(Time t) const {
        if (t < 0 || t >= horizon_) return std::nullopt;
        return capacity_[static_cast<std::size_t>(t)];
    }

    /// First algorithm completion at time >= `from`.
    [[nodiscard]] std::optional<std::pair<Time, JobId>> next_completion(Time from) const {
        auto it = std::lower_bound(completions_.begin(), completions_.end(), std::pair<Time, JobId>{from, -1});
        if (it == completions_.end()) return std::nullopt;
        return *it;
    }

    [[nodiscard]] std::optional<Time> first_idle(Time from, Time to) const {
        for (Time t = std::max<Time>(from, 0); t < to; ++t) {
            if (!alg_.at(t)) return t;
        }
        return std::nullopt;
    }

    /// Last slot at which `job` was pending for the algorithm.
    [[nodiscard]] std::optional<Time> critical_time(const Job& job) const {
        std::optional<Time> last;
        for (Time t = job.release; t < job.deadline; ++t) {
            if (pending(job, t)) last = t;
        }
        return last;
    }

    [[nodiscard]] const std::vector<std::pair<Time, JobId>>& completions() const noexcept { return completions_; }

private:
    const Trace& alg_;
    Time horizon_ = 1;
    Time final_k_star_ = 0;
    std::vector<Time> k_star_;
    std::vector<std::vector<Time>> remaining_;
    std::vector<std::optional<double>> capacity_;
    std::vector<std::pair<Time, JobId>> completions_;
};

}  // namespace

double ChargeLedger::total_amount() const noexcept {
    return std::accumulate(charges.begin(), charges.end(), 0.0,
                           [](double acc, const Charge& c) { return acc + c.amount; });
}

ChargeLedger build_general_ledger(const Instance& instance, const Trace& alg, const Trace& adv,
                                  const algo::CapacityFunction& capacity) {
    const AlgorithmView view(instance, alg, capacity);
    ChargeLedger ledger;
    ledger.capacity_name = capacity.name();
    ledger.k = instance.k();
    ledger.final_k_star = view.final_k_star();
    ledger.rho = capacity.rho(view.final_k_star());
    ledger.harmonic_bounds = capacity.harmonic_bounds();
    ledger.claimed_ratio = capacity.claimed_ratio(instance.k());

    for (const auto& [at, id] : view.completions()) {
        const Job& job = instance.job(id);
        TargetTotals totals;
        totals.weight = job.weight;
        totals.last_capacity = capacity.evaluate(job.weight, 1, view.k_star(at - 1));
        ledger.targets.emplace(id, totals);
    }

    // Validity: whenever a job is pending, the unit run covers its ratio.
    for (Time t = 0; t < view.horizon(); ++t) {
        const auto cap = view.capacity(t);
        for (const Job& job : instance.jobs()) {
            if (!view.pending(job, t)) continue;
            if (!cap || !at_most(job.smith_ratio(), *cap)) {
                ledger.violations.push_back(
                    {"validity", t, job.id,
                     "pending job ratio " + fmt(job.smith_ratio()) + " exceeds scheduled capacity " +
                         (cap ? fmt(*cap) : std::string("(idle)"))});
            }
        }
    }

    // Monotonicity along consecutive slots whose first unit is not a last unit.
    for (Time t = 0; t < alg.horizon(); ++t) {
        const auto unit = alg.at(t);
        if (!unit || unit->remaining <= 1) continue;
        const auto next = view.capacity(t + 1);
        const double here = *view.capacity(t);
        if (!next) {
            ledger.violations.push_back({"monotonicity", t, unit->job, "idle slot after an unfinished unit"});
        } else if (!at_most(here, ledger.rho * *next)) {
            ledger.violations.push_back({"monotonicity", t, unit->job,
                                         "capacity " + fmt(here) + " > rho * next capacity " +
                                             fmt(ledger.rho * *next)});
        }
    }

    auto resolve = [&](Time from, Time slot, JobId source) -> std::optional<JobId> {
        const auto target = view.next_completion(from);
        if (!target) {
            ledger.violations.push_back(
                {"uncharged", slot, source, "no algorithm completion at or after t=" + std::to_string(from)});
            return std::nullopt;
        }
        if (auto idle = view.first_idle(from - 1, target->first)) {
            ledger.violations.push_back({"idle-gap", *idle, source,
                                         "algorithm idles before completing target " +
                                             std::to_string(target->second)});
        }
        return target->second;
    };

    for (Time t = 0; t < adv.horizon(); ++t) {
        const auto unit = adv.at(t);
        if (!unit || !adv.completed(unit->job)) continue;
        const Job& job = instance.job(unit->job);
        Charge charge{*unit, t, job.processing, job.id, 1, job.weight / static_cast<double>(job.processing)};

        const auto alg_done = alg.completion_time(job.id);
        const auto cap = view.capacity(t);
        if (alg_done && *alg_done <= t) {
            charge.type = 1;
        } else if (cap && at_most(charge.amount, *cap)) {
            charge.type = 2;
            const auto target = resolve(t + 1, t, job.id);
            if (!target) continue;
            charge.target = *target;
        } else {
            charge.type = 3;
            // A pending job here is already a validity violation; charging it
            // from the current slot keeps the ledger complete.
            const auto critical = view.pending(job, t) ? std::optional<Time>(t) : view.critical_time(job);
            if (!critical) {
                ledger.violations.push_back({"uncharged", t, job.id, "job was never pending for the algorithm"});
                continue;
            }
            const auto target = resolve(*critical + 1, t, job.id);
            if (!target) continue;
            charge.target = *target;
        }

        auto it = ledger.targets.find(charge.target);
        if (it == ledger.targets.end()) {
            ledger.violations.push_back({"target", t, job.id, "charge target was not completed by the algorithm"});
            continue;
        }
        switch (charge.type) {
            case 1: it->second.type1 += charge.amount; break;
            case 2: it->second.type2 += charge.amount; break;
            default:
                it->second.type3 += charge.amount;
                ++it->second.type3_count;
                break;
        }
        ledger.charges.push_back(charge);
    }
    return ledger;
}

void BoundReport::merge(const BoundReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

BoundReport check_type3_bound(const ChargeLedger& ledger, Time k) {
    BoundReport report;
    std::map<JobId, std::vector<const Charge*>> sources;
    for (const Charge& charge : ledger.charges) {
        if (charge.type == 3) sources[charge.target].push_back(&charge);
    }
    const double harmonic_cap = algo::harmonic(k) - 1.0;
    for (const auto& [target, list] : sources) {
        const auto& totals = ledger.targets.at(target);
        for (Time p = 1; p <= k; ++p) {
            const auto count = std::count_if(list.begin(), list.end(),
                                             [p](const Charge* c) { return c->source_processing <= p; });
            if (count >= p) {
                report.violations.push_back({"type3-count", -1, target,
                                             std::to_string(count) + " type 3 sources with p_j <= " +
                                                 std::to_string(p)});
            }
        }
        if (static_cast<Time>(list.size()) > k - 1) {
            report.violations.push_back(
                {"type3-total-count", -1, target, std::to_string(list.size()) + " type 3 sources > k-1"});
        }
        for (const Charge* charge : list) {
            if (!at_most(charge->amount, totals.last_capacity)) {
                report.violations.push_back({"type3-amount", charge->slot, target,
                                             "amount " + fmt(charge->amount) + " > pi(i0,1) = " +
                                                 fmt(totals.last_capacity)});
            }
        }
        if (ledger.harmonic_bounds && !at_most(totals.type3, harmonic_cap)) {
            report.violations.push_back(
                {"type3-harmonic", -1, target, "type 3 total " + fmt(totals.type3) + " > H_k - 1"});
        }
    }
    return report;
}

BoundReport check_type2_bound(const ChargeLedger& ledger) {
    BoundReport report;
    if (ledger.rho >= 1.0) {
        report.violations.push_back({"type2-rho", -1, -1, "rho = " + fmt(ledger.rho) + " is not below 1"});
        return report;
    }
    const double harmonic_cap = algo::harmonic(ledger.k);
    for (const auto& [target, totals] : ledger.targets) {
        const double bound = totals.last_capacity / (1.0 - ledger.rho);
        if (!at_most(totals.type2, bound)) {
            report.violations.push_back({"type2-geometric", -1, target,
                                         "type 2 total " + fmt(totals.type2) + " > pi(i0,1)/(1-rho) = " +
                                             fmt(bound)});
        }
        if (ledger.harmonic_bounds && !at_most(totals.type2, harmonic_cap)) {
            report.violations.push_back(
                {"type2-harmonic", -1, target, "type 2 total " + fmt(totals.type2) + " > H_k"});
        }
    }
    return report;
}

BoundReport check_type1_bound(const ChargeLedger& ledger) {
    BoundReport report;
    for (const auto& [target, totals] : ledger.targets) {
        if (!at_most(totals.type1, totals.weight)) {
            report.violations.push_back({"type1", -1, target, "type 1 total " + fmt(totals.type1) + " > w"});
        }
    }
    return report;
}

BoundReport check_conservation(const ChargeLedger& ledger, Weight adversary_gain) {
    BoundReport report;
    const double total = ledger.total_amount();
    if (std::abs(total - adversary_gain) > kRelTolerance * std::max(1.0, adversary_gain)) {
        report.violations.push_back(
            {"conservation", -1, -1, "charged " + fmt(total) + " but adversary gained " + fmt(adversary_gain)});
    }
    return report;
}

BoundReport check_all(const ChargeLedger& ledger, Weight algorithm_gain, Weight adversary_gain) {
    BoundReport report;
    report.violations = ledger.violations;
    report.merge(check_type1_bound(ledger));
    report.merge(check_type2_bound(ledger));
    report.merge(check_type3_bound(ledger, ledger.k));
    report.merge(check_conservation(ledger, adversary_gain));
    if (!at_most(adversary_gain, ledger.claimed_ratio * algorithm_gain)) {
        report.violations.push_back({"ratio", -1, -1,
                                     "adversary gain " + fmt(adversary_gain) + " > " + fmt(ledger.claimed_ratio) +
                                         " * algorithm gain " + fmt(algorithm_gain)});
    }
    return report;
}

std::vector<TargetRow> target_table(const ChargeLedger& ledger, const BoundReport& report) {
    std::vector<TargetRow> rows;
    for (const auto& [target, totals] : ledger.targets) {
        TargetRow row{target,       totals.type1, totals.type2, totals.type3, totals.type3_count,
                      ledger.claimed_ratio * totals.weight, true};
        row.pass = at_most(totals.total(), row.bound) &&
                   std::none_of(report.violations.begin(), report.violations.end(),
                                [target](const Violation& v) { return v.job == target && v.slot < 0; });
        rows.push_back(row);
    }
    return rows;
}

}  // namespace osched::charging
