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

#include <osched/algorithms/policies.hpp>
#include <osched/core/error.hpp>
#include <osched/core/io.hpp>
#include <osched/core/simulator.hpp>
#include <osched/harness/experiment.hpp>

#include <gtest/gtest.h>

#include <sstream>

namespace osched {
namespace {

Job make(JobId id, Time r, Time p, Time d, Weight w) { return Job{id, r, d, p, w}; }

class ScriptedPolicy final : public OnlinePolicy {
public:
    explicit ScriptedPolicy(std::vector<std::optional<JobId>> script)
        : script_(std::move(script)) {}
    std::string name() const override { return "scripted"; }
    std::optional<JobId> choose(const PendingView& view) override {
        const auto t = static_cast<std::size_t>(view.now);
        return t < script_.size() ? script_[t] : std::nullopt;
    }

private:
    std::vector<std::optional<JobId>> script_;
};

TEST(Job, ValidateRejectsBadFields) {
    EXPECT_NO_THROW(validate(make(0, 0, 1, 1, 1.0)));
    EXPECT_THROW(validate(make(0, -1, 1, 1, 1.0)), InvalidInput);
    EXPECT_THROW(validate(make(0, 2, 1, 2, 1.0)), InvalidInput);
    EXPECT_THROW(validate(make(0, 0, 0, 1, 1.0)), InvalidInput);
    EXPECT_THROW(validate(make(0, 0, 1, 1, 0.0)), InvalidInput);
}

TEST(Job, PendingAllowsTightStart) {
    const Job job = make(0, 0, 2, 2, 1.0);
    EXPECT_TRUE(is_pending(job, 2, 0));
    EXPECT_FALSE(is_pending(job, 2, 1));
    EXPECT_TRUE(is_pending(job, 1, 1));
    EXPECT_FALSE(is_pending(job, 0, 0));
    EXPECT_FALSE(is_pending(make(0, 3, 1, 5, 1.0), 1, 2));
}

TEST(Instance, RequiresDenseIdsInReleaseOrder) {
    EXPECT_THROW(Instance({make(1, 0, 1, 1, 1.0)}, 1, false), InvalidInput);
    EXPECT_THROW(Instance({make(0, 2, 1, 3, 1.0), make(1, 0, 1, 1, 1.0)}, 1, false), InvalidInput);
    EXPECT_THROW(Instance({make(0, 0, 2, 2, 1.0)}, 1, false), InvalidInput);
    EXPECT_THROW(Instance({make(0, 0, 1, 2, 1.0), make(1, 0, 2, 2, 1.0)}, 2, true), InvalidInput);
}

TEST(Instance, FromJobsSortsAndInfersK) {
    const Instance instance = Instance::from_jobs({make(7, 3, 2, 9, 1.0), make(9, 0, 5, 6, 2.0)});
    ASSERT_EQ(instance.size(), 2U);
    EXPECT_EQ(instance.k(), 5);
    EXPECT_EQ(instance.job(0).release, 0);
    EXPECT_EQ(instance.job(0).id, 0);
    EXPECT_EQ(instance.job(1).id, 1);
    EXPECT_DOUBLE_EQ(instance.total_weight(), 3.0);
}

TEST(Simulate, SingleTightJob) {
    const Instance instance = Instance::from_jobs({make(0, 0, 2, 2, 1.0)});
    auto policy = algo::srpt_policy();
    const Trace trace = simulate(instance, *policy);
    ASSERT_EQ(trace.horizon(), 2);
    EXPECT_EQ(trace.at(0), (Unit{0, 2}));
    EXPECT_EQ(trace.at(1), (Unit{0, 1}));
    EXPECT_EQ(trace.completion_time(0), 2);
    EXPECT_DOUBLE_EQ(gain(trace, instance), 1.0);
}

TEST(Simulate, SmithTwoJobInstance) {
    const Instance instance = Instance::from_jobs({make(0, 0, 4, 4, 4.0), make(1, 0, 1, 5, 1.01)});
    auto policy = algo::smith_ratio_policy();
    const Trace trace = simulate(instance, *policy);
    EXPECT_FALSE(trace.completed(0));
    EXPECT_TRUE(trace.completed(1));
    EXPECT_DOUBLE_EQ(gain(trace, instance), 1.01);
}

TEST(Simulate, EmptyInstance) {
    auto policy = algo::smith_ratio_policy();
    const Trace trace = simulate(Instance{}, *policy);
    EXPECT_EQ(trace.horizon(), 0);
    EXPECT_DOUBLE_EQ(gain(trace, Instance{}), 0.0);
}

TEST(Simulate, NonPendingChoiceFaults) {
    const Instance late = Instance::from_jobs({make(0, 0, 2, 2, 1.0), make(1, 1, 1, 5, 1.0)});
    ScriptedPolicy idle_then_run({std::nullopt, 0});
    EXPECT_THROW((void)simulate(late, idle_then_run), SimulationFault);

    const Instance future = Instance::from_jobs({make(0, 0, 1, 1, 1.0), make(1, 3, 1, 4, 1.0)});
    ScriptedPolicy early({1});
    EXPECT_THROW((void)simulate(future, early), SimulationFault);
}

TEST(Simulate, IdlingIsPermitted) {
    const Instance instance = Instance::from_jobs({make(0, 0, 1, 3, 1.0)});
    ScriptedPolicy lazy({std::nullopt, std::nullopt, 0});
    const Trace trace = simulate(instance, lazy);
    EXPECT_EQ(trace.completion_time(0), 3);
}

TEST(Trace, GainSumsCompletedWeights) {
    const Instance instance = Instance::from_jobs({make(0, 0, 1, 1, 1.0), make(1, 1, 1, 2, 2.5)});
    Trace trace;
    append_slot(trace, Unit{0, 1});
    append_slot(trace, Unit{1, 1});
    EXPECT_DOUBLE_EQ(gain(trace, instance), 3.5);
    EXPECT_DOUBLE_EQ(gain(Trace{}, instance), 0.0);
}

TEST(Trace, CriticalTime) {
    const Job never_run = make(0, 0, 2, 2, 1.0);
    EXPECT_EQ(critical_time(Trace{}, never_run), 0);

    const Job once = make(0, 0, 3, 5, 1.0);
    Trace trace;
    append_slot(trace, Unit{0, 3});
    EXPECT_EQ(trace.remaining_at(once, 1), 2);
    EXPECT_EQ(critical_time(trace, once), 3);

    Trace done;
    append_slot(done, Unit{0, 1});
    EXPECT_THROW((void)critical_time(done, make(0, 0, 1, 1, 1.0)), InvalidInput);

    EXPECT_EQ(critical_time(Trace{}, make(0, 0, 3, 2, 1.0)), std::nullopt);
}

TEST(Trace, WellFormednessFlagsBrokenTraces) {
    const std::vector<Job> jobs{make(0, 0, 2, 3, 1.0), make(1, 2, 1, 3, 1.0)};
    Trace good;
    append_slot(good, Unit{0, 2});
    append_slot(good, Unit{0, 1});
    append_slot(good, Unit{1, 1});
    EXPECT_TRUE(check_well_formed(good, jobs).empty());

    Trace out_of_window;
    append_slot(out_of_window, Unit{1, 1});
    EXPECT_FALSE(check_well_formed(out_of_window, jobs).empty());

    Trace not_decreasing;
    append_slot(not_decreasing, Unit{0, 1});
    append_slot(not_decreasing, Unit{0, 2});
    EXPECT_FALSE(check_well_formed(not_decreasing, jobs).empty());
}

TEST(Io, InstanceRoundTrip) {
    const Instance instance =
        Instance::from_jobs({make(0, 0, 3, 7, 0.1), make(1, 2, 1, 3, 1.0 / 3.0), make(2, 2, 2, 9, 12345.678)});
    std::stringstream buffer;
    io::write_instance(buffer, instance);
    EXPECT_EQ(io::read_instance(buffer), instance);
}

TEST(Io, TraceRoundTrip) {
    const Instance instance = Instance::from_jobs({make(0, 0, 2, 4, 1.0), make(1, 1, 1, 2, 1.0)});
    auto policy = algo::srpt_policy();
    const Trace trace = simulate(instance, *policy);
    std::stringstream buffer;
    io::write_trace(buffer, trace);
    EXPECT_EQ(io::read_trace(buffer), trace);
}

TEST(Io, RejectsMalformedInput) {
    std::istringstream header("k two equal 0\n");
    EXPECT_THROW((void)io::read_instance(header), InvalidInput);
    std::istringstream job("k 2 equal 0\n0 0 1 1 1e\n");
    EXPECT_THROW((void)io::read_instance(job), InvalidInput);
    EXPECT_THROW((void)io::parse_real("1.5x"), InvalidInput);
    EXPECT_THROW((void)io::parse_integer(""), InvalidInput);
}

TEST(Io, DecimalFormattingIsShortestExact) {
    EXPECT_EQ(io::format_decimal(0.1), "0.1");
    EXPECT_EQ(io::format_decimal(2.0), "2");
    for (const double v : {1.01, 1.0 / 3.0, 1e-12, 6.02e23, 5.770780163555854}) {
        EXPECT_EQ(io::parse_real(io::format_decimal(v)), v);
    }
}

TEST(SimulateProperty, WellFormedAndDeterministic) {
    for (const char* spec : {"smith", "smith:key=remaining", "expcap", "srpt", "edf"}) {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            const Instance instance = harness::random_instance(seed, 4, 8, false, false, 1.0, 20);
            auto first = algo::make_policy(spec);
            auto second = algo::make_policy(spec);
            const Trace a = simulate(instance, *first);
            const Trace b = simulate(instance, *second);
            EXPECT_EQ(a, b) << spec << " seed " << seed;
            const auto problems = check_well_formed(a, instance.jobs());
            EXPECT_TRUE(problems.empty()) << spec << " seed " << seed << ": " << problems.front();
        }
    }
}

}  // namespace
}  // namespace osched
