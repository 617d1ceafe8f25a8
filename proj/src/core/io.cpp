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

#include <osched/core/io.hpp>

#include <osched/core/error.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace osched::io {
namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string token; in >> token;) out.push_back(std::move(token));
    return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

[[noreturn]] void bad_line(std::size_t number, const std::string& line, const std::string& why) {
    throw InvalidInput("line " + std::to_string(number) + ": " + why + " in '" + line + "'");
}

}  // namespace

std::string format_decimal(double value) {
    char buffer[512];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::fixed);
    if (ec != std::errc{}) throw InvalidInput("weight cannot be printed in decimal form");
    return {buffer, end};
}

double parse_real(const std::string& token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    if (first != last && *first == '+') ++first;
    auto [end, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || end != last) throw InvalidInput("not a real number: '" + token + "'");
    return value;
}

long long parse_integer(const std::string& token) {
    long long value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw InvalidInput("not an integer: '" + token + "'");
    }
    return value;
}

void write_instance(std::ostream& out, const Instance& instance) {
    out << "k " << instance.k() << " equal " << (instance.equal_lengths() ? 1 : 0) << '\n';
    for (const Job& job : instance.jobs()) {
        out << job.id << ' ' << job.release << ' ' << job.processing << ' ' << job.deadline << ' '
            << format_decimal(job.weight) << '\n';
    }
}

Instance read_instance(std::istream& in) {
    std::string line;
    std::size_t number = 0;
    std::optional<Time> k;
    bool equal = false;
    std::vector<Job> jobs;
    while (std::getline(in, line)) {
        ++number;
        if (blank(line)) continue;
        const auto parts = tokens(line);
        try {
            if (!k) {
                if (parts.size() != 4 || parts[0] != "k" || parts[2] != "equal") {
                    bad_line(number, line, "expected header 'k <int> equal <0|1>'");
                }
                k = parse_integer(parts[1]);
                const auto flag = parse_integer(parts[3]);
                if (flag != 0 && flag != 1) bad_line(number, line, "equal flag must be 0 or 1");
                equal = flag == 1;
                continue;
            }
            if (parts.size() != 5) bad_line(number, line, "expected '<id> <r> <p> <d> <w>'");
            Job job;
            job.id = static_cast<JobId>(parse_integer(parts[0]));
            job.release = parse_integer(parts[1]);
            job.processing = parse_integer(parts[2]);
            job.deadline = parse_integer(parts[3]);
            job.weight = parse_real(parts[4]);
            jobs.push_back(job);
        } catch (const InvalidInput& e) {
            if (std::string(e.what()).starts_with("line ")) throw;
            bad_line(number, line, e.what());
        }
    }
    if (!k) throw InvalidInput("instance file has no header");
    return Instance(std::move(jobs), *k, equal);
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open instance file " + path.string());
    return read_instance(in);
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write instance file " + path.string());
    write_instance(out, instance);
}

void write_trace(std::ostream& out, const Trace& trace) {
    for (Time t = 0; t < trace.horizon(); ++t) {
        const auto& slot = trace.slots[static_cast<std::size_t>(t)];
        if (slot) {
            out << "t " << t << " job " << slot->job << " rem " << slot->remaining << '\n';
        } else {
            out << "t " << t << " idle\n";
        }
    }
    for (const JobId id : trace.completion_order()) {
        out << "complete " << id << " at " << trace.completions.at(id) << '\n';
    }
}

Trace read_trace(std::istream& in) {
    Trace trace;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (blank(line)) continue;
        const auto parts = tokens(line);
        try {
            if (parts[0] == "t") {
                if (parts.size() < 3) bad_line(number, line, "truncated slot line");
                if (parse_integer(parts[1]) != trace.horizon()) bad_line(number, line, "slots out of order");
                if (parts.size() == 3 && parts[2] == "idle") {
                    trace.slots.emplace_back();
                } else if (parts.size() == 6 && parts[2] == "job" && parts[4] == "rem") {
                    trace.slots.emplace_back(Unit{static_cast<JobId>(parse_integer(parts[3])),
                                                  parse_integer(parts[5])});
                } else {
                    bad_line(number, line, "malformed slot line");
                }
            } else if (parts[0] == "complete" && parts.size() == 4 && parts[2] == "at") {
                trace.completions[static_cast<JobId>(parse_integer(parts[1]))] = parse_integer(parts[3]);
            } else {
                bad_line(number, line, "unknown record");
            }
        } catch (const InvalidInput& e) {
            if (std::string(e.what()).starts_with("line ")) throw;
            bad_line(number, line, e.what());
        }
    }
    return trace;
}

}  // namespace osched::io
