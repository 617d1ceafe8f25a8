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

namespace osched::adversary {

AdversaryRun equal_length_adversary(OnlinePolicy& policy, const EqualLengthOptions& options) {
    if (!(options.R > 0.0) || options.R >= kEqualLengthLimit) {
        throw DomainError("equal-length adversary needs 0 < R < 3*sqrt(3)/2");
    }
    if (options.k < 2) throw DomainError("equal-length adversary needs k >= 2");

    const InstanceInfo info{options.k, true};
    AdversaryRun run;
    run.name = "equal-length";
    run.policy = policy.name();
    run.sequence = weight_sequence(options.R, options.max_steps, options.precision_bits);
    const auto& x = run.sequence->x;

    // Job t arrives at t (k-1) with deadline t (k-1) + k, so it overlaps
    // its predecessor in exactly one slot.
    const Time cadence = options.k - 1;
    Game game(policy, info);
    std::size_t t = 0;
    while (game.simulator().completions() == 0) {
        if (t == x.size() && !run.sequence->i0) {
            throw PrecisionExhausted("no non-positive weight within " + std::to_string(options.max_steps) +
                                     " terms at " + std::to_string(run.sequence->precision_bits) +
                                     " bits; raise the step limit or the precision");
        }
        if (t >= x.size() || x[t] <= 0.0) break;
        game.release(game.now() + options.k, options.k, x[t]);
        ++t;
        for (Time i = 0; i < cadence && game.simulator().completions() == 0; ++i) game.step();
    }
    game.drain();

    const auto& released = game.simulator().released();
    score(run, game, info, heaviest_disjoint_tight(released));
    return run;
}

}  // namespace osched::adversary
