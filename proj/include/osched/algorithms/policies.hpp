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

#include <osched/core/simulator.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace osched::algo {

/// Runs the pending job of highest priority; equal priorities go to the
/// lowest job id.
class ArgmaxPolicy : public OnlinePolicy {
public:
    [[nodiscard]] std::optional<JobId> choose(const PendingView& view) override;
    /// Priority of a released job under the policy's current state.
    [[nodiscard]] virtual double priority(const JobState& state) const = 0;
};

/// Smith ratio rule. The default key is the static ratio w/p; the
/// `remaining` key ranks by w/q, which is the variant whose behaviour
/// matches the w/a capacity used by the audit.
class SmithRatioPolicy final : public ArgmaxPolicy {
public:
    enum class Key { Static, Remaining };

    explicit SmithRatioPolicy(Key key = Key::Static)
        : key_(key) {}

    [[nodiscard]] std::string name() const override;
    [[nodiscard]] double priority(const JobState& state) const override;

private:
    Key key_;
};

/// Maximises w * alpha(k*)^(q-1), where k* is the longest job released so
/// far.
class ExponentialCapacityPolicy final : public ArgmaxPolicy {
public:
    /// Throws ConfigError unless 0 < c < 1.
    explicit ExponentialCapacityPolicy(double c = 0.9);

    [[nodiscard]] std::string name() const override;
    void start(const InstanceInfo& info) override;
    void observe_release(const Job& job) override;
    [[nodiscard]] double priority(const JobState& state) const override;

    [[nodiscard]] Time k_star() const noexcept { return k_star_; }
    [[nodiscard]] double alpha() const;

private:
    double c_;
    Time k_star_ = 0;
};

/// Equal-length jobs only: maximises 2^(-q/k) * w.
class ConservativePolicy final : public ArgmaxPolicy {
public:
    [[nodiscard]] std::string name() const override { return "conservative"; }
    void start(const InstanceInfo& info) override;
    void observe_release(const Job& job) override;
    [[nodiscard]] double priority(const JobState& state) const override;

private:
    Time k_ = 1;
};

/// Shortest remaining processing time first.
class SrptPolicy final : public ArgmaxPolicy {
public:
    [[nodiscard]] std::string name() const override { return "srpt"; }
    [[nodiscard]] double priority(const JobState& state) const override;
};

/// Earliest deadline first among pending jobs.
class EdfPolicy final : public ArgmaxPolicy {
public:
    [[nodiscard]] std::string name() const override { return "edf"; }
    [[nodiscard]] double priority(const JobState& state) const override;
};

[[nodiscard]] std::unique_ptr<OnlinePolicy> smith_ratio_policy();
[[nodiscard]] std::unique_ptr<OnlinePolicy> exponential_capacity_policy(double c);
[[nodiscard]] std::unique_ptr<OnlinePolicy> conservative_policy();
[[nodiscard]] std::unique_ptr<OnlinePolicy> srpt_policy();
[[nodiscard]] std::unique_ptr<OnlinePolicy> edf_policy();

/// Parses `smith`, `smith:key=remaining`, `expcap`, `expcap:c=<real>`,
/// `conservative`, `srpt` or `edf`. Throws ConfigError on anything else.
[[nodiscard]] std::unique_ptr<OnlinePolicy> make_policy(std::string_view spec);

/// Parameter `c` of an `expcap` spec, 0.9 when absent.
[[nodiscard]] double expcap_parameter(std::string_view spec);

}  // namespace osched::algo
