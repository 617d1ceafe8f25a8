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

#include <osched/algorithms/capacity.hpp>
#include <osched/core/error.hpp>
#include <osched/core/io.hpp>

#include <algorithm>
#include <cmath>

namespace osched::algo {

std::optional<JobId> ArgmaxPolicy::choose(const PendingView& view) {
    std::optional<JobId> best;
    double best_priority = 0.0;
    for (const JobState& state : view.jobs) {
        if (!state.pending) continue;
        const double p = priority(state);
        if (!best || p > best_priority || (p == best_priority && state.job.id < *best)) {
            best = state.job.id;
            best_priority = p;
        }
    }
    return best;
}

std::string SmithRatioPolicy::name() const {
    return key_ == Key::Static ? "smith" : "smith:key=remaining";
}

double SmithRatioPolicy::priority(const JobState& state) const {
    const Time divisor = key_ == Key::Static ? state.job.processing : state.remaining;
    return state.job.weight / static_cast<double>(divisor);
}

ExponentialCapacityPolicy::ExponentialCapacityPolicy(double c)
    : c_(c) {
    if (!(c > 0.0 && c < 1.0)) throw ConfigError("expcap parameter c must lie in (0, 1)");
}

std::string ExponentialCapacityPolicy::name() const { return "expcap:c=" + io::format_decimal(c_); }

void ExponentialCapacityPolicy::start(const InstanceInfo& /*info*/) { k_star_ = 0; }

void ExponentialCapacityPolicy::observe_release(const Job& job) {
    k_star_ = std::max(k_star_, job.processing);
}

double ExponentialCapacityPolicy::alpha() const { return exponential_alpha(c_, k_star_); }

double ExponentialCapacityPolicy::priority(const JobState& state) const {
    return state.job.weight * std::pow(alpha(), static_cast<double>(state.remaining - 1));
}

void ConservativePolicy::start(const InstanceInfo& info) {
    if (!info.equal_lengths) throw ConfigError("conservative policy needs an equal-length instance");
    k_ = info.k;
}

void ConservativePolicy::observe_release(const Job& job) {
    if (job.processing != k_) {
        throw ConfigError("conservative policy got job " + std::to_string(job.id) + " with p=" +
                          std::to_string(job.processing) + " != k=" + std::to_string(k_));
    }
}

double ConservativePolicy::priority(const JobState& state) const {
    return std::exp2(-static_cast<double>(state.remaining) / static_cast<double>(k_)) * state.job.weight;
}

double SrptPolicy::priority(const JobState& state) const { return -static_cast<double>(state.remaining); }

double EdfPolicy::priority(const JobState& state) const { return -static_cast<double>(state.job.deadline); }

std::unique_ptr<OnlinePolicy> smith_ratio_policy() { return std::make_unique<SmithRatioPolicy>(); }

std::unique_ptr<OnlinePolicy> exponential_capacity_policy(double c) {
    return std::make_unique<ExponentialCapacityPolicy>(c);
}

std::unique_ptr<OnlinePolicy> conservative_policy() { return std::make_unique<ConservativePolicy>(); }

std::unique_ptr<OnlinePolicy> srpt_policy() { return std::make_unique<SrptPolicy>(); }

std::unique_ptr<OnlinePolicy> edf_policy() { return std::make_unique<EdfPolicy>(); }

double expcap_parameter(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) return 0.9;
    const auto option = spec.substr(colon + 1);
    if (!option.starts_with("c=")) throw ConfigError("expcap accepts only 'c=<real>'");
    try {
        return io::parse_real(std::string(option.substr(2)));
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
}

std::unique_ptr<OnlinePolicy> make_policy(std::string_view spec) {
    if (spec == "smith") return smith_ratio_policy();
    if (spec == "smith:key=remaining") return std::make_unique<SmithRatioPolicy>(SmithRatioPolicy::Key::Remaining);
    if (spec == "expcap" || spec.starts_with("expcap:")) return exponential_capacity_policy(expcap_parameter(spec));
    if (spec == "conservative") return conservative_policy();
    if (spec == "srpt") return srpt_policy();
    if (spec == "edf") return edf_policy();
    throw ConfigError("unknown policy '" + std::string(spec) + "'");
}

}  // namespace osched::algo
