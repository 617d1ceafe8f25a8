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

#include <osched/adversaries/run.hpp>
#include <osched/core/simulator.hpp>

#include <cstddef>
#include <cstdint>

namespace osched::adversary {

struct EqualLengthOptions {
    double R = 2.59;
    Time k = 2;
    std::size_t max_steps = 10000;
    unsigned precision_bits = 53;
};

/// Releases tight jobs of length k with weights x_0, x_1, ... one every
/// k - 1 slots until the policy completes a job or the next weight is
/// non-positive, then schedules the heaviest disjoint subset of released
/// jobs. Throws DomainError unless 0 < R < 3*sqrt(3)/2 and k >= 2, and
/// PrecisionExhausted if neither stop happens within max_steps releases.
[[nodiscard]] AdversaryRun equal_length_adversary(OnlinePolicy& policy, const EqualLengthOptions& options);

/// Span f(l, e) of the recursive instance I(l, s, e), by its recurrence.
/// Throws DomainError if l < 1 or e < 0, and on int64 overflow.
[[nodiscard]] std::int64_t recursive_span(int l, std::int64_t e);
/// l * max{l!, (l-1)! + e}. Same errors as recursive_span.
[[nodiscard]] std::int64_t closed_form_span(int l, std::int64_t e);
/// floor(ln k / ln ln k) - 1. Throws DomainError for k < 16.
[[nodiscard]] int loglog_depth(std::int64_t k);
/// n! in int64; throws DomainError on overflow.
[[nodiscard]] std::int64_t factorial(int n);

/// Plays I(l, 0, 0) with unit weights. Probe windows where anything other
/// than B ran take the second branch; idle slots keep the first. The policy
/// is told k = f(l, 0). Throws ConstructionError if the policy completes
/// two jobs, the adversary's set is not l feasible jobs, a job exceeds
/// (l+1)!, or a job leaves its sub-instance window.
[[nodiscard]] AdversaryRun log_over_loglog_adversary(OnlinePolicy& policy, int l);

/// r - R e^(r/R - 1).
[[nodiscard]] double slack_function(double R, double r);
/// Weight of A_t: 1 for t < R, e^(t/R - 1) otherwise.
[[nodiscard]] double small_job_weight(double R, std::int64_t t);

/// Releases B (weight k / ln k, length k, deadline k) and a tight unit job
/// A_{t+1} at every t < k for as long as only B or nothing has run. The
/// adversary takes B if the policy finished A_t with t < R, A_1..A_t if it
/// finished a later A_t, and every A otherwise. Throws DomainError for
/// k < 16 and ConstructionError if the ratio falls below R - 0.06.
[[nodiscard]] AdversaryRun k_over_lnk_adversary(OnlinePolicy& policy, Time k);

}  // namespace osched::adversary
