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
#include <osched/core/error.hpp>
#include <osched/harness/experiment.hpp>
#include <osched/oracle/optimum.hpp>

#include <gtest/gtest.h>

namespace osched::oracle {
namespace {

Job make(JobId id, Time r, Time p, Time d, Weight w) { return Job{id, r, d, p, w}; }

TEST(Optimum, TwoJobInstance) {
    const Instance instance = Instance::from_jobs({make(0, 0, 4, 4, 4.0), make(1, 0, 1, 5, 1.01)});
    const auto result = offline_optimum(instance);
    EXPECT_EQ(result.chosen, (std::vector<JobId>{0, 1}));
    EXPECT_DOUBLE_EQ(result.gain, 5.01);
    EXPECT_EQ(result.witness.completion_time(0), 4);
    EXPECT_EQ(result.witness.completion_time(1), 5);
}

TEST(Optimum, InfeasibleJobGivesNothing) {
    const Instance instance = Instance::from_jobs({make(0, 0, 3, 2, 1.0)});
    const auto result = offline_optimum(instance);
    EXPECT_TRUE(result.chosen.empty());
    EXPECT_DOUBLE_EQ(result.gain, 0.0);
    EXPECT_EQ(result.witness.horizon(), 0);
}

TEST(Optimum, OnlyOneOfTwoIdenticalTightJobs) {
    const Instance instance = Instance::from_jobs({make(0, 0, 2, 2, 3.0), make(1, 0, 2, 2, 3.0)});
    const auto result = offline_optimum(instance);
    EXPECT_EQ(result.chosen.size(), 1U);
    EXPECT_DOUBLE_EQ(result.gain, 3.0);
}

TEST(Optimum, BudgetError) {
    std::vector<Job> jobs;
    for (JobId i = 0; i < 6; ++i) jobs.push_back(make(i, 0, 1, 10, 1.0));
    EXPECT_THROW((void)offline_optimum(jobs, {5}), BudgetError);
    EXPECT_NO_THROW((void)offline_optimum(jobs, {6}));
}

TEST(Optimum, WitnessIsValidEdfOfChosen) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const Instance instance = harness::random_instance(seed, 4, 10, false, false, 0.8, 20);
        const auto result = offline_optimum(instance);
        std::vector<Job> chosen;
        Weight sum = 0.0;
        for (const JobId id : result.chosen) {
            chosen.push_back(instance.job(id));
            sum += instance.job(id).weight;
        }
        EXPECT_NEAR(sum, result.gain, 1e-9);
        EXPECT_TRUE(algo::edf_feasible(chosen));
        EXPECT_DOUBLE_EQ(gain(result.witness, instance), result.gain);
        EXPECT_TRUE(check_well_formed(result.witness, instance.jobs()).empty());
    }
}

// Adding a job never lowers the optimum.
TEST(Optimum, MonotoneUnderSupersets) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Instance instance = harness::random_instance(seed, 3, 9, false, false, 0.5, 15);
        const auto jobs = instance.jobs();
        double previous = 0.0;
        for (std::size_t n = 1; n <= jobs.size(); ++n) {
            const double value = offline_optimum(jobs.first(n)).gain;
            EXPECT_GE(value + 1e-9, previous) << "seed " << seed << " n " << n;
            previous = value;
        }
    }
}

TEST(Exhaustive, Examples) {
    EXPECT_DOUBLE_EQ(exhaustive_schedule_optimum(Instance::from_jobs({make(0, 0, 2, 3, 1.5)}), 3), 1.5);
    const Instance preempt = Instance::from_jobs({make(0, 0, 2, 4, 1.0), make(1, 1, 1, 2, 1.0)});
    EXPECT_DOUBLE_EQ(exhaustive_schedule_optimum(preempt, 4), 2.0);
    EXPECT_DOUBLE_EQ(exhaustive_schedule_optimum(Instance{}, 0), 0.0);
}

TEST(Exhaustive, AgreesWithBranchAndBound) {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const Instance instance = harness::random_instance(seed, 3, 1 + seed % 4, false, false, 0.6, 5);
        Time horizon = 0;
        for (const auto& job : instance.jobs()) horizon = std::max(horizon, job.deadline);
        if (horizon > 10) continue;
        EXPECT_NEAR(exhaustive_schedule_optimum(instance, horizon), offline_optimum(instance).gain, 1e-9)
            << "seed " << seed;
    }
}

}  // namespace
}  // namespace osched::oracle
