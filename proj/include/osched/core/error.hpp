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

#include <stdexcept>
#include <string>

namespace osched {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed jobs, instances or input files.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A policy or adversary was configured with parameters outside its domain.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A policy asked the simulator to run a job that is not pending.
class SimulationFault : public Error {
public:
    SimulationFault(long long slot, const std::string& what)
        : Error("simulation fault at t=" + std::to_string(slot) + ": " + what)
        , slot_(slot) {}

    [[nodiscard]] long long slot() const noexcept { return slot_; }

private:
    long long slot_;
};

/// Exponential search asked to exceed its configured size.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a routine.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An adversary construction broke one of its own guarantees.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Weight recurrence ran out of steps before turning non-positive.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace osched
