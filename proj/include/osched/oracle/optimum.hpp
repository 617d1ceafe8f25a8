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

#pragma once

#include <osched/core/types.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace osched::oracle {

struct OracleOptions {
    /// Largest job count offline_optimum accepts; the search is exponential.
    std::size_t max_jobs = 22;
};

struct OptimumResult {
    /// Ascending job ids.
    std::vector<JobId> chosen;
    Weight gain = 0.0;
    /// EDF execution of `chosen`.
    Trace witness;
};

/// Heaviest subset of jobs that EDF completes on time, by branch and bound
/// over jobs in decreasing weight order with a remaining-weight bound.
/// Among optima of equal weight the lexicographically smallest id set wins.
/// Throws BudgetError above `options.max_jobs`.
[[nodiscard]] OptimumResult offline_optimum(std::span<const Job> jobs, const OracleOptions& options = {});
[[nodiscard]] OptimumResult offline_optimum(const Instance& instance, const OracleOptions& options = {});

/// Tries every assignment of slots [0, horizon) to jobs or idle and returns
/// the best on-time weight. Independent check for offline_optimum; limited
/// to n <= 4 and horizon <= 10 (BudgetError beyond).
[[nodiscard]] Weight exhaustive_schedule_optimum(const Instance& instance, Time horizon);

}  // namespace osched::oracle
