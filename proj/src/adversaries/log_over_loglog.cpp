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

#include <osched/adversaries/constructions.hpp>

#include <osched/core/error.hpp>

#include <algorithm>
#include <cmath>

namespace osched::adversary {
namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw DomainError("span overflows int64");
    return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw DomainError("span overflows int64");
    return out;
}

void require_span_args(int l, std::int64_t e) {
    if (l < 1 || e < 0) throw DomainError("span needs l >= 1 and e >= 0");
}

struct Window {
    JobId job;
    Time start;
    Time end;
};

class RecursiveGame {
public:
    explicit RecursiveGame(Game& game)
        : game_(game) {}

    /// Plays I(l, s, e) with game_.now() == s and returns the ids the
    /// adversary completes.
    std::vector<JobId> play(int l, Time s, Time e) {
        const Time span = recursive_span(l, e);
        if (l == 1) {
            const JobId id = game_.release(s + e + 1, e + 1, 1.0);
            windows_.push_back({id, s, s + span});
            return {id};
        }
        const Time b = recursive_span(l - 1, 0);
        const Time a = std::max(e, b);
        const Time c = recursive_span(l - 1, a);
        const JobId A = game_.release(s + a + b + c, a + c, 1.0);
        const JobId B = game_.release(s + a + b, a + b, 1.0);
        windows_.push_back({A, s, s + span});
        windows_.push_back({B, s, s + span});

        bool only_b = true;
        for (Time t = s; t < s + a; ++t) {
            const auto unit = game_.step();
            if (unit && unit->job != B) only_b = false;
        }
        std::vector<JobId> chosen;
        if (only_b) {
            chosen = play(l - 1, s + a, 0);
            chosen.push_back(A);
        } else {
            game_.run_until(s + a + b);
            chosen = play(l - 1, s + a + b, a);
            chosen.push_back(B);
        }
        return chosen;
    }

    [[nodiscard]] const std::vector<Window>& windows() const noexcept { return windows_; }

private:
    Game& game_;
    std::vector<Window> windows_;
};

}  // namespace

std::int64_t recursive_span(int l, std::int64_t e) {
    require_span_args(l, e);
    if (l == 1) return add(e, 1);
    const std::int64_t inner = recursive_span(l - 1, 0);
    const std::int64_t a = std::max(e, inner);
    return add(add(a, inner), recursive_span(l - 1, a));
}

std::int64_t factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    std::int64_t out = 1;
    for (int i = 2; i <= n; ++i) out = mul(out, i);
    return out;
}

std::int64_t closed_form_span(int l, std::int64_t e) {
    require_span_args(l, e);
    return mul(l, std::max(factorial(l), add(factorial(l - 1), e)));
}

int loglog_depth(std::int64_t k) {
    if (k < 16) throw DomainError("loglog depth needs k >= 16");
    const double lk = std::log(static_cast<double>(k));
    return static_cast<int>(std::floor(lk / std::log(lk))) - 1;
}

AdversaryRun log_over_loglog_adversary(OnlinePolicy& policy, int l) {
    if (l < 1) throw DomainError("recursive adversary needs l >= 1");
    const InstanceInfo info{recursive_span(l, 0), false};
    AdversaryRun run;
    run.name = "log-over-loglog";
    run.policy = policy.name();

    Game game(policy, info);
    RecursiveGame recursion(game);
    auto chosen = recursion.play(l, 0, 0);
    game.drain();
    score(run, game, info, chosen);

    const std::size_t completions = run.algorithm_trace.completions.size();
    if (completions > 1) {
        throw ConstructionError("policy " + run.policy + " completed " + std::to_string(completions) + " jobs");
    }
    if (run.adversary_jobs.size() != static_cast<std::size_t>(l)) {
        throw ConstructionError("adversary completes " + std::to_string(run.adversary_jobs.size()) +
                                " jobs instead of " + std::to_string(l));
    }
    const Time limit = factorial(l + 1);
    for (const Job& job : run.instance.jobs()) {
        if (job.processing > limit) {
            throw ConstructionError("job " + std::to_string(job.id) + " is longer than (l+1)!");
        }
    }
    for (const Window& w : recursion.windows()) {
        const Job& job = run.instance.job(w.job);
        if (job.release < w.start || job.deadline > w.end) {
            throw ConstructionError("job " + std::to_string(w.job) + " leaves its sub-instance window");
        }
    }
    return run;
}

}  // namespace osched::adversary
