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

#include <osched/algorithms/policies.hpp>
#include <osched/core/error.hpp>

#include <algorithm>
#include <cmath>

namespace osched::algo {

double exponential_alpha(double c, Time k_star) {
    const auto k = static_cast<double>(std::max<Time>(k_star, 2));
    return 1.0 - c * c * std::log(k) / k;
}

double harmonic(Time k) {
    double sum = 0.0;
    for (Time i = 1; i <= k; ++i) sum += 1.0 / static_cast<double>(i);
    return sum;
}

double SmithCapacity::evaluate(Weight w, Time remaining, Time /*k_star*/) const {
    return w / static_cast<double>(remaining);
}

double SmithCapacity::rho(Time k_star) const {
    const auto k = static_cast<double>(std::max<Time>(k_star, 1));
    return (k - 1.0) / k;
}

double SmithCapacity::claimed_ratio(Time k) const { return 2.0 * static_cast<double>(k); }

ExponentialCapacity::ExponentialCapacity(double c)
    : c_(c) {
    if (!(c > 0.0 && c < 1.0)) throw ConfigError("expcap parameter c must lie in (0, 1)");
}

std::string ExponentialCapacity::name() const { return "expcap"; }

double ExponentialCapacity::evaluate(Weight w, Time remaining, Time k_star) const {
    return w * std::pow(exponential_alpha(c_, k_star), static_cast<double>(remaining - 1));
}

// alpha dips between k = 2 and k = 3 (ln k / k peaks at e), so a run whose
// k* grew past 2 needs the largest base seen, not the last one.
double ExponentialCapacity::rho(Time k_star) const {
    return std::max(exponential_alpha(c_, 2), exponential_alpha(c_, k_star));
}

double ExponentialCapacity::claimed_ratio(Time k) const {
    const auto kk = static_cast<double>(std::max<Time>(k, 2));
    const double c2 = c_ * c_;
    const double lnk = std::log(kk);
    return 1.0 + kk / (c2 * lnk) + (1.0 + 1.0 / c2) * kk / lnk;
}

double ConservativeCapacity::evaluate(Weight w, Time remaining, Time k_star) const {
    const auto k = static_cast<double>(std::max<Time>(k_star, 1));
    return std::exp2(-static_cast<double>(remaining) / k) * w;
}

double ConservativeCapacity::rho(Time k_star) const {
    return std::exp2(-1.0 / static_cast<double>(std::max<Time>(k_star, 1)));
}

double ConservativeCapacity::claimed_ratio(Time /*k*/) const { return 5.0; }

double SrptCapacity::evaluate(Weight /*w*/, Time remaining, Time /*k_star*/) const {
    return 1.0 / static_cast<double>(remaining);
}

double SrptCapacity::rho(Time k_star) const {
    const auto k = static_cast<double>(std::max<Time>(k_star, 1));
    return (k - 1.0) / k;
}

double SrptCapacity::claimed_ratio(Time k) const { return 2.0 * harmonic(k); }

std::unique_ptr<CapacityFunction> capacity_for(const std::string& policy_spec) {
    const auto head = policy_spec.substr(0, policy_spec.find(':'));
    if (head == "smith") return std::make_unique<SmithCapacity>();
    if (head == "expcap") return std::make_unique<ExponentialCapacity>(expcap_parameter(policy_spec));
    if (head == "conservative") return std::make_unique<ConservativeCapacity>();
    if (head == "srpt") return std::make_unique<SrptCapacity>();
    if (head == "edf") return nullptr;
    throw ConfigError("unknown policy '" + policy_spec + "'");
}

}  // namespace osched::algo
