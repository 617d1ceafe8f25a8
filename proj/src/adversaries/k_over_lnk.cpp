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
#include <osched/core/io.hpp>

#include <algorithm>
#include <cmath>

namespace osched::adversary {

double slack_function(double R, double r) { return r - R * std::exp(r / R - 1.0); }

double small_job_weight(double R, std::int64_t t) {
    const double td = static_cast<double>(t);
    return td < R ? 1.0 : std::exp(td / R - 1.0);
}

AdversaryRun k_over_lnk_adversary(OnlinePolicy& policy, Time k) {
    if (k < 16) throw DomainError("k over ln k adversary needs k >= 16");
    const double R = static_cast<double>(k) / std::log(static_cast<double>(k));
    const InstanceInfo info{k, false};
    AdversaryRun run;
    run.name = "k-over-lnk";
    run.policy = policy.name();

    Game game(policy, info);
    const JobId big = game.release(k, k, R);
    // small[t-1] is A_t, released at t-1.
    std::vector<JobId> small;
    bool only_big = true;
    for (Time t = 0; t < k && only_big; ++t) {
        small.push_back(game.release(t + 1, 1, small_job_weight(R, t + 1)));
        const auto unit = game.step();
        if (unit && unit->job != big) only_big = false;
    }
    game.drain();

    std::vector<JobId> chosen;
    const auto& trace = game.simulator().trace();
    const auto finished = std::find_if(small.begin(), small.end(), [&](JobId id) { return trace.completed(id); });
    if (finished != small.end()) {
        const auto t0 = static_cast<std::int64_t>(finished - small.begin()) + 1;
        if (static_cast<double>(t0) < R) {
            chosen.push_back(big);
        } else {
            chosen.assign(small.begin(), small.begin() + t0);
        }
    } else {
        chosen = small;
    }
    score(run, game, info, chosen);

    if (run.forced_ratio < R - 0.06 - 1e-9) {
        throw ConstructionError("forced ratio " + io::format_decimal(run.forced_ratio) + " below k/ln k - 0.06 against " +
                                run.policy);
    }
    return run;
}

}  // namespace osched::adversary
