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

#include <osched/algorithms/capacity.hpp>
#include <osched/algorithms/edf.hpp>
#include <osched/algorithms/policies.hpp>
#include <osched/core/error.hpp>
#include <osched/core/simulator.hpp>
#include <osched/harness/experiment.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace osched::algo {
namespace {

Job make(JobId id, Time r, Time p, Time d, Weight w) { return Job{id, r, d, p, w}; }

PendingView view_of(std::vector<std::pair<Job, Time>> jobs, Time now = 0) {
    PendingView view{now, {}};
    for (auto& [job, q] : jobs) view.jobs.push_back({job, q, is_pending(job, q, now)});
    return view;
}

TEST(Smith, PicksHigherStaticRatio) {
    SmithRatioPolicy policy;
    const auto view = view_of({{make(0, 0, 4, 4, 4.0), 4}, {make(1, 0, 1, 5, 1.01), 1}});
    EXPECT_EQ(policy.choose(view), 1);
}

TEST(Smith, SingleAndTies) {
    SmithRatioPolicy policy;
    EXPECT_EQ(policy.choose(view_of({{make(0, 0, 3, 9, 1.0), 3}})), 0);
    EXPECT_EQ(policy.choose(view_of({{make(0, 0, 2, 9, 2.0), 2}, {make(1, 0, 1, 9, 1.0), 1}})), 0);
    EXPECT_EQ(policy.choose(view_of({})), std::nullopt);
}

TEST(Smith, IgnoresNonPendingJobs) {
    SmithRatioPolicy policy;
    const auto view = view_of({{make(0, 0, 2, 2, 9.0), 2}, {make(1, 0, 1, 5, 1.0), 1}}, 1);
    EXPECT_EQ(policy.choose(view), 1);
}

TEST(Smith, RemainingKeyPrefersStartedJob) {
    SmithRatioPolicy remaining(SmithRatioPolicy::Key::Remaining);
    SmithRatioPolicy fixed;
    const auto view = view_of({{make(0, 0, 4, 9, 4.0), 2}, {make(1, 1, 1, 9, 1.01), 1}}, 2);
    EXPECT_EQ(remaining.choose(view), 0);
    EXPECT_EQ(fixed.choose(view), 1);
}

TEST(ExpCap, AlphaValue) {
    EXPECT_NEAR(exponential_alpha(0.9, 16), 1.0 - 0.81 * std::log(16.0) / 16.0, 1e-15);
    EXPECT_NEAR(exponential_alpha(0.9, 16), 0.85963, 1e-5);
    EXPECT_DOUBLE_EQ(exponential_alpha(0.9, 1), exponential_alpha(0.9, 2));
}

TEST(ExpCap, TracksLongestReleasedJob) {
    ExponentialCapacityPolicy policy(0.9);
    policy.start({16, false});
    policy.observe_release(make(0, 0, 3, 9, 1.0));
    policy.observe_release(make(1, 0, 7, 9, 1.0));
    policy.observe_release(make(2, 0, 5, 9, 1.0));
    EXPECT_EQ(policy.k_star(), 7);
    EXPECT_DOUBLE_EQ(policy.alpha(), exponential_alpha(0.9, 7));
}

TEST(ExpCap, ShorterRemainingWinsAtEqualWeight) {
    ExponentialCapacityPolicy policy(0.9);
    policy.start({5, false});
    const Job a = make(0, 0, 1, 9, 1.0);
    const Job b = make(1, 0, 5, 9, 1.0);
    policy.observe_release(a);
    policy.observe_release(b);
    EXPECT_EQ(policy.choose(view_of({{b, 5}, {a, 1}})), 0);
}

TEST(ExpCap, RejectsBadParameter) {
    EXPECT_THROW(ExponentialCapacityPolicy(0.0), ConfigError);
    EXPECT_THROW(ExponentialCapacityPolicy(1.0), ConfigError);
    EXPECT_THROW((void)make_policy("expcap:c=1.5"), ConfigError);
    EXPECT_DOUBLE_EQ(expcap_parameter("expcap:c=0.75"), 0.75);
    EXPECT_DOUBLE_EQ(expcap_parameter("expcap"), 0.9);
}

TEST(Conservative, PriorityExample) {
    ConservativePolicy policy;
    policy.start({2, true});
    const auto view = view_of({{make(0, 0, 2, 9, 1.0), 2}, {make(1, 0, 2, 9, 0.8), 1}});
    EXPECT_EQ(policy.choose(view), 1);
    EXPECT_NEAR(std::pow(2.0, -0.5) * 0.8, 0.565685, 1e-6);
}

TEST(Conservative, EqualWeightsSmallerRemainingWins) {
    ConservativePolicy policy;
    policy.start({3, true});
    EXPECT_EQ(policy.choose(view_of({{make(0, 0, 3, 9, 1.0), 3}, {make(1, 0, 3, 9, 1.0), 2}})), 1);
}

TEST(Conservative, RefusesMixedLengths) {
    const Instance mixed = Instance::from_jobs({make(0, 0, 2, 4, 1.0), make(1, 0, 1, 4, 1.0)});
    auto policy = conservative_policy();
    EXPECT_THROW((void)simulate(mixed, *policy), ConfigError);
}

TEST(Srpt, ShortestRemainingAndTies) {
    SrptPolicy policy;
    EXPECT_EQ(policy.choose(view_of({{make(0, 0, 3, 9, 1.0), 3}, {make(1, 0, 1, 9, 1.0), 1},
                                     {make(2, 0, 2, 9, 1.0), 2}})),
              1);
    EXPECT_EQ(policy.choose(view_of({{make(0, 0, 2, 9, 1.0), 2}, {make(1, 0, 2, 9, 1.0), 2}})), 0);
}

TEST(MakePolicy, NamesAndErrors) {
    EXPECT_EQ(make_policy("smith")->name(), "smith");
    EXPECT_EQ(make_policy("srpt")->name(), "srpt");
    EXPECT_EQ(make_policy("edf")->name(), "edf");
    EXPECT_EQ(make_policy("conservative")->name(), "conservative");
    EXPECT_THROW((void)make_policy("fifo"), ConfigError);
    EXPECT_EQ(capacity_for("edf"), nullptr);
    EXPECT_NE(capacity_for("smith:key=remaining"), nullptr);
}

TEST(Capacity, ValuesAndRho) {
    SmithCapacity smith;
    EXPECT_DOUBLE_EQ(smith.evaluate(3.0, 2, 4), 1.5);
    EXPECT_DOUBLE_EQ(smith.rho(4), 0.75);
    EXPECT_DOUBLE_EQ(smith.claimed_ratio(4), 8.0);

    ConservativeCapacity conservative;
    EXPECT_DOUBLE_EQ(conservative.evaluate(2.0, 1, 2), 2.0 * std::pow(2.0, -0.5));
    EXPECT_DOUBLE_EQ(conservative.rho(2), std::pow(2.0, -0.5));
    EXPECT_DOUBLE_EQ(conservative.claimed_ratio(2), 5.0);

    SrptCapacity srpt;
    EXPECT_DOUBLE_EQ(srpt.evaluate(7.0, 4, 5), 0.25);
    EXPECT_NEAR(harmonic(5), 2.283333333333333, 1e-12);
    EXPECT_NEAR(srpt.claimed_ratio(5), 2.0 * harmonic(5), 1e-12);

    ExponentialCapacity expcap(0.9);
    EXPECT_DOUBLE_EQ(expcap.evaluate(2.0, 3, 16), 2.0 * std::pow(exponential_alpha(0.9, 16), 2));
    EXPECT_DOUBLE_EQ(expcap.rho(16), exponential_alpha(0.9, 16));
    EXPECT_DOUBLE_EQ(expcap.rho(3), exponential_alpha(0.9, 2));
    EXPECT_LT(expcap.rho(4096), 1.0);
}

TEST(Capacity, StrictlyIncreasingInWeight) {
    std::vector<std::unique_ptr<CapacityFunction>> all;
    all.push_back(std::make_unique<SmithCapacity>());
    all.push_back(std::make_unique<ExponentialCapacity>(0.9));
    all.push_back(std::make_unique<ConservativeCapacity>());
    for (const auto& pi : all) {
        for (Time a = 1; a <= 6; ++a) EXPECT_LT(pi->evaluate(1.0, a, 6), pi->evaluate(1.5, a, 6)) << pi->name();
    }
}

TEST(Edf, Examples) {
    const std::vector<Job> feasible{make(0, 0, 2, 2, 1.0), make(1, 0, 1, 3, 1.0)};
    const auto trace = edf_complete_schedule(feasible);
    ASSERT_TRUE(trace);
    EXPECT_EQ(trace->completion_time(0), 2);
    EXPECT_EQ(trace->completion_time(1), 3);

    const std::vector<Job> overloaded{make(0, 0, 2, 2, 1.0), make(1, 0, 2, 3, 1.0)};
    EXPECT_FALSE(edf_complete_schedule(overloaded));
    EXPECT_FALSE(edf_feasible(overloaded));

    const auto empty = edf_complete_schedule({});
    ASSERT_TRUE(empty);
    EXPECT_EQ(empty->horizon(), 0);
}

TEST(Edf, TraceAndFeasibilityAgree) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const Instance instance = harness::random_instance(seed, 4, 1 + seed % 7, false, false, 0.7, 12);
        const auto trace = edf_complete_schedule(instance.jobs());
        EXPECT_EQ(trace.has_value(), edf_feasible(instance.jobs())) << "seed " << seed;
        if (trace) {
            EXPECT_EQ(trace->completions.size(), instance.size());
            EXPECT_TRUE(check_well_formed(*trace, instance.jobs()).empty());
        }
    }
}

// Every unit of a trace maximises the policy's priority over the pending set.
TEST(PolicyProperty, ArgmaxConsistency) {
    for (const char* spec : {"smith", "smith:key=remaining", "expcap", "srpt", "edf"}) {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            const Instance instance = harness::random_instance(seed, 5, 8, false, false, 1.0, 24);
            auto owned = make_policy(spec);
            auto& policy = dynamic_cast<ArgmaxPolicy&>(*owned);
            Simulator sim(policy, {instance.k(), instance.equal_lengths()});
            std::size_t next = 0;
            const auto jobs = instance.jobs();
            while (next < jobs.size() || sim.any_pending()) {
                while (next < jobs.size() && jobs[next].release == sim.now()) sim.release(jobs[next++]);
                const PendingView view = sim.view();
                const auto unit = sim.step();
                double best = -std::numeric_limits<double>::infinity();
                for (const auto& s : view.jobs) {
                    if (s.pending) best = std::max(best, policy.priority(s));
                }
                if (!unit) {
                    EXPECT_FALSE(view.any_pending());
                    continue;
                }
                const auto* chosen = view.find(unit->job);
                ASSERT_NE(chosen, nullptr);
                EXPECT_TRUE(chosen->pending);
                EXPECT_EQ(policy.priority(*chosen), best) << spec << " seed " << seed;
            }
        }
    }
}

// rho * pi(next) >= pi(prev) whenever the earlier unit was not a job's last.
void expect_monotone(const char* spec, const CapacityFunction& pi, Time k, bool equal, std::uint64_t seeds) {
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
        const Instance instance = harness::random_instance(seed, k, 8, equal, false, 1.0, 2 * 8 * k / 3 + 1);
        auto policy = make_policy(spec);
        const Trace trace = simulate(instance, *policy);
        Time k_star = 1;
        for (Time t = 0; t + 1 < trace.horizon(); ++t) {
            for (const auto& job : instance.jobs()) {
                if (job.release <= t + 1) k_star = std::max(k_star, job.processing);
            }
            const auto u = trace.at(t);
            const auto v = trace.at(t + 1);
            if (!u || !v || u->remaining == 1) continue;
            const double before = pi.evaluate(instance.job(u->job).weight, u->remaining, k_star);
            const double after = pi.evaluate(instance.job(v->job).weight, v->remaining, k_star);
            EXPECT_GE(pi.rho(k_star) * after * (1 + 1e-9), before) << spec << " seed " << seed << " t " << t;
        }
    }
}

TEST(PolicyProperty, RemainingSmithIsMonotone) {
    expect_monotone("smith:key=remaining", SmithCapacity{}, 4, false, 200);
}

TEST(PolicyProperty, ConservativeIsMonotone) {
    expect_monotone("conservative", ConservativeCapacity{}, 3, true, 200);
}

TEST(PolicyProperty, SrptIsMonotone) {
    expect_monotone("srpt", SrptCapacity{}, 4, false, 200);
}

// Static Smith breaks monotonicity under w/a: A (p=4, w=4) at a=2 yields to a
// fresh B (p=1, w=1.01).
TEST(PolicyProperty, StaticSmithCounterexample) {
    const Instance instance = Instance::from_jobs({make(0, 0, 4, 9, 4.0), make(1, 2, 1, 9, 1.01)});
    auto policy = smith_ratio_policy();
    const Trace trace = simulate(instance, *policy);
    ASSERT_EQ(trace.at(1), (Unit{0, 3}));
    ASSERT_EQ(trace.at(2), (Unit{1, 1}));
    SmithCapacity pi;
    EXPECT_LT(pi.rho(4) * pi.evaluate(1.01, 1, 4), pi.evaluate(4.0, 3, 4));
}

// Validity: a scheduled unit's capacity is at least every pending job's w/p.
TEST(PolicyProperty, Validity) {
    for (const char* spec : {"smith:key=remaining", "expcap", "srpt"}) {
        const auto pi = capacity_for(spec);
        const bool unit = std::string(spec) == "srpt";
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            const Instance instance = harness::random_instance(seed, 4, 8, false, unit, 1.0, 22);
            auto policy = make_policy(spec);
            const Trace trace = simulate(instance, *policy);
            Time k_star = 1;
            for (Time t = 0; t < trace.horizon(); ++t) {
                for (const auto& job : instance.jobs()) {
                    if (job.release <= t) k_star = std::max(k_star, job.processing);
                }
                const auto u = trace.at(t);
                for (const auto& job : instance.jobs()) {
                    if (!is_pending(job, trace.remaining_at(job, t), t)) continue;
                    ASSERT_TRUE(u) << spec << " idles at " << t;
                    const double cap = pi->evaluate(instance.job(u->job).weight, u->remaining, k_star);
                    EXPECT_GE(cap * (1 + 1e-9), job.smith_ratio()) << spec << " seed " << seed << " t " << t;
                }
            }
        }
    }
}

}  // namespace
}  // namespace osched::algo
