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

#include <cstddef>
#include <optional>
#include <vector>

namespace osched::adversary {

/// 3*sqrt(3)/2, the supremum of ratios the equal-length game can force.
inline constexpr double kEqualLengthLimit = 2.598076211353316;

/// Released weights x_t and the alternating sums X_t = x_t + x_{t-2} + ...
/// of the equal-length game, generated from X_{t+1} = R (X_t - X_{t-2})
/// with X_{-2} = X_{-1} = 0 and X_0 = 1.
///
/// Generation stops after the first non-positive x, which is kept as the
/// last element and recorded as i0. s[i] = R (1 - X_{i-1} / X_{i+1}) is
/// filled for every i with X_{i+1} defined.
struct WeightSequence {
    double R = 0.0;
    std::vector<double> x;
    std::vector<double> X;
    std::vector<double> s;
    std::optional<std::size_t> i0;
    /// Mantissa bits the recurrence ran with.
    unsigned precision_bits = 53;
};

/// Runs the X recurrence for at most `max_terms` terms. Up to 53 bits uses
/// double, up to 64 long double, and MPFR beyond. Values are rounded to
/// double on output; a term that overflows double throws
/// PrecisionExhausted. Throws DomainError unless 0 < R.
[[nodiscard]] WeightSequence weight_sequence(double R, std::size_t max_terms, unsigned precision_bits = 53);

/// s_0 = R, s_1 = R - 1/R, then s_i = R (1 - 1 / (s_{i-1} s_{i-2})) until
/// `count` terms or the first non-positive term, which is kept.
[[nodiscard]] std::vector<double> s_recurrence(double R, std::size_t count);

/// Discriminant of g^3 - R g^2 + R, i.e. 4 R^2 (R^2 - 27/4).
[[nodiscard]] double cubic_discriminant(double R);

/// The unique real root of g^3 - R g^2 + R, by bisection on (-1, 0).
/// Throws DomainError unless 0 < R < 3*sqrt(3)/2.
[[nodiscard]] double cubic_root_check(double R);

}  // namespace osched::adversary
