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

#include <filesystem>
#include <iosfwd>
#include <string>

namespace osched::io {

// Instance files:
//   k <int> equal <0|1>
//   <id> <r> <p> <d> <w>        one line per job, w in plain decimal
//
// Trace files:
//   t <t> job <id> rem <a>      or   t <t> idle
//   complete <id> at <t>
//
// Weights are printed with the shortest decimal that parses back to the
// same double, so both formats round-trip exactly.

void write_instance(std::ostream& out, const Instance& instance);
[[nodiscard]] Instance read_instance(std::istream& in);
[[nodiscard]] Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& instance);

void write_trace(std::ostream& out, const Trace& trace);
[[nodiscard]] Trace read_trace(std::istream& in);

/// Shortest round-trip representation without exponent.
[[nodiscard]] std::string format_decimal(double value);
/// Strict parse of a whole token; throws InvalidInput.
[[nodiscard]] double parse_real(const std::string& token);
[[nodiscard]] long long parse_integer(const std::string& token);

}  // namespace osched::io
