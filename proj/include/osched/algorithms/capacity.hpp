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

#include <memory>
#include <string>

namespace osched::algo {

/// Exponential capacity base: alpha(k) = 1 - c^2 ln k / k, with k clamped to
/// at least 2.
[[nodiscard]] double exponential_alpha(double c, Time k_star);

/// Analysis weight pi(i, a) of a scheduled unit, together with the constant
/// rho for which the matching policy is rho-monotone.
///
/// `k_star` is the largest processing time released so far. Capacities that
/// do not depend on it ignore the argument.
class CapacityFunction {
public:
    virtual ~CapacityFunction() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual double evaluate(Weight w, Time remaining, Time k_star) const = 0;
    [[nodiscard]] virtual double rho(Time k_star) const = 0;
    /// Competitive ratio the charging analysis certifies at bound k.
    [[nodiscard]] virtual double claimed_ratio(Time k) const = 0;
    /// True for the unit-weight SRPT analysis, which has sharper type 2/3
    /// bounds (H_k and H_k - 1).
    [[nodiscard]] virtual bool harmonic_bounds() const { return false; }
};

/// pi(i, a) = w_i / a, rho = (k-1)/k, ratio 2k.
class SmithCapacity final : public CapacityFunction {
public:
    [[nodiscard]] std::string name() const override { return "smith"; }
    [[nodiscard]] double evaluate(Weight w, Time remaining, Time k_star) const override;
    [[nodiscard]] double rho(Time k_star) const override;
    [[nodiscard]] double claimed_ratio(Time k) const override;
};

/// pi(i, a) = w_i * alpha(k*)^(a-1), rho = max over k' in [2, k*] of alpha(k').
class ExponentialCapacity final : public CapacityFunction {
public:
    explicit ExponentialCapacity(double c);

    [[nodiscard]] std::string name() const override;
    [[nodiscard]] double evaluate(Weight w, Time remaining, Time k_star) const override;
    [[nodiscard]] double rho(Time k_star) const override;
    /// 1 + k/(c^2 ln k) + (1 + 1/c^2) k / ln k.
    [[nodiscard]] double claimed_ratio(Time k) const override;
    [[nodiscard]] double c() const noexcept { return c_; }

private:
    double c_;
};

/// pi(i, a) = 2^(-a/k) w_i, rho = 2^(-1/k), ratio 5.
class ConservativeCapacity final : public CapacityFunction {
public:
    [[nodiscard]] std::string name() const override { return "conservative"; }
    [[nodiscard]] double evaluate(Weight w, Time remaining, Time k_star) const override;
    [[nodiscard]] double rho(Time k_star) const override;
    [[nodiscard]] double claimed_ratio(Time k) const override;
};

/// pi(i, a) = 1/a, rho = (k-1)/k, ratio 2 H_k.
class SrptCapacity final : public CapacityFunction {
public:
    [[nodiscard]] std::string name() const override { return "srpt"; }
    [[nodiscard]] double evaluate(Weight w, Time remaining, Time k_star) const override;
    [[nodiscard]] double rho(Time k_star) const override;
    [[nodiscard]] double claimed_ratio(Time k) const override;
    [[nodiscard]] bool harmonic_bounds() const override { return true; }
};

[[nodiscard]] double harmonic(Time k);

/// Audit capacity for a policy spec string; null for policies without one
/// (edf).
[[nodiscard]] std::unique_ptr<CapacityFunction> capacity_for(const std::string& policy_spec);

}  // namespace osched::algo
