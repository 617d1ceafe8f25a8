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

#include <osched/adversaries/sequence.hpp>

#include <osched/core/error.hpp>

#include <mpfr.h>

#include <cmath>
#include <string>

namespace osched::adversary {
namespace {

// Owns one MPFR value at a fixed precision. Results of arithmetic take the
// left operand's precision, so a whole recurrence stays at one width
// without touching MPFR's global default.
class Mpfr {
public:
    Mpfr(double value, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    Mpfr(const Mpfr& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Mpfr& operator=(const Mpfr& other) {
        if (this != &other) mpfr_set(v_, other.v_, MPFR_RNDN);
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }

    friend Mpfr operator-(const Mpfr& a, const Mpfr& b) {
        Mpfr out(a);
        mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
        return out;
    }
    friend Mpfr operator*(const Mpfr& a, const Mpfr& b) {
        Mpfr out(a);
        mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
        return out;
    }
    friend Mpfr operator/(const Mpfr& a, const Mpfr& b) {
        Mpfr out(a);
        mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
        return out;
    }
    [[nodiscard]] bool positive() const { return mpfr_sgn(v_) > 0; }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

template <class T>
struct Arith {
    static T make(double v, unsigned /*bits*/) { return static_cast<T>(v); }
    static bool positive(const T& v) { return v > 0; }
    static double to_double(const T& v) { return static_cast<double>(v); }
};

template <>
struct Arith<Mpfr> {
    static Mpfr make(double v, unsigned bits) { return Mpfr(v, static_cast<mpfr_prec_t>(bits)); }
    static bool positive(const Mpfr& v) { return v.positive(); }
    static double to_double(const Mpfr& v) { return v.to_double(); }
};

double checked(double value, std::size_t index) {
    if (!std::isfinite(value)) {
        throw PrecisionExhausted("weight term " + std::to_string(index) + " overflows double");
    }
    return value;
}

template <class T>
void generate(WeightSequence& seq, std::size_t max_terms) {
    using A = Arith<T>;
    const unsigned bits = seq.precision_bits;
    const T R = A::make(seq.R, bits);
    const T zero = A::make(0.0, bits);
    const T one = A::make(1.0, bits);

    // X[t] for t >= 0; indices below zero read as 0.
    std::vector<T> X;
    auto at = [&](long long t) -> const T& { return t < 0 ? zero : X[static_cast<std::size_t>(t)]; };

    for (std::size_t t = 0; t < max_terms; ++t) {
        const auto i = static_cast<long long>(t);
        X.push_back(t == 0 ? one : R * (at(i - 1) - at(i - 3)));
        const T x = at(i) - at(i - 2);
        seq.X.push_back(checked(A::to_double(X.back()), t));
        seq.x.push_back(checked(A::to_double(x), t));
        if (t >= 1) seq.s.push_back(A::to_double(R * (one - at(i - 2) / at(i))));
        if (!A::positive(x)) {
            seq.i0 = t;
            return;
        }
    }
}

}  // namespace

WeightSequence weight_sequence(double R, std::size_t max_terms, unsigned precision_bits) {
    if (!(R > 0.0)) throw DomainError("weight sequence needs R > 0");
    WeightSequence seq;
    seq.R = R;
    seq.precision_bits = precision_bits;
    if (precision_bits <= 53) {
        seq.precision_bits = 53;
        generate<double>(seq, max_terms);
    } else if (precision_bits <= 64) {
        seq.precision_bits = 64;
        generate<long double>(seq, max_terms);
    } else {
        generate<Mpfr>(seq, max_terms);
    }
    return seq;
}

std::vector<double> s_recurrence(double R, std::size_t count) {
    std::vector<double> s;
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0) {
            s.push_back(R);
        } else if (i == 1) {
            s.push_back(R - 1.0 / R);
        } else {
            s.push_back(R * (1.0 - 1.0 / (s[i - 1] * s[i - 2])));
        }
        if (s.back() <= 0.0) break;
    }
    return s;
}

double cubic_discriminant(double R) { return 4.0 * R * R * (R * R - 27.0 / 4.0); }

double cubic_root_check(double R) {
    if (!(R > 0.0) || R >= kEqualLengthLimit) {
        throw DomainError("cubic root check needs 0 < R < 3*sqrt(3)/2");
    }
    if (!(cubic_discriminant(R) < 0.0)) throw DomainError("cubic has three real roots");
    auto P = [R](double g) { return g * g * g - R * g * g + R; };
    // P(-1) = -1 < 0 < R = P(0).
    double lo = -1.0;
    double hi = 0.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (P(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace osched::adversary
