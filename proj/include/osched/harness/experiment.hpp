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

#include <osched/core/error.hpp>
#include <osched/core/types.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace osched::harness {

/// n jobs with r uniform in [0, horizon), p uniform in [1, k] (or k when
/// `equal_lengths`), d = r + p + a geometric slack of mean slack * p, and w
/// either 1 or log-uniform in [1, k^2]. The same arguments always give the
/// same instance. Throws ConfigError for k < 1, horizon < 1 or slack < 0.
[[nodiscard]] Instance random_instance(std::uint64_t seed, Time k, std::size_t n, bool equal_lengths,
                                       bool unit_weights, double slack, Time horizon);

enum class Source { Random, Files };

struct ExperimentConfig {
    std::vector<std::string> policies;
    Source source = Source::Random;
    std::vector<std::filesystem::path> files;

    std::uint64_t seed = 1;
    /// Random instances per (policy, k).
    std::size_t count = 100;
    Time k_min = 2;
    Time k_max = 2;
    std::size_t n_min = 1;
    std::size_t n_max = 8;
    bool equal_lengths = false;
    bool unit_weights = false;
    double slack = 1.0;
    /// 0 picks 2 * n * k / 3 + 1, enough to make jobs contend.
    Time horizon = 0;

    bool audit = false;
    bool keep_going = false;
    std::size_t oracle_budget = 22;
    /// Offending instances are saved here.
    std::filesystem::path dump_dir = ".";
    unsigned threads = 1;
};

struct RatioRecord {
    std::string policy;
    Time k = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    /// seed=<s> for generated instances, the path for files.
    std::string instance;
    Weight algorithm_gain = 0.0;
    Weight oracle_gain = 0.0;
    /// oracle / algorithm; +infinity when the algorithm gains 0 and the
    /// oracle does not, 1 when both are 0.
    double ratio = 1.0;
    bool audited = false;
    double type1 = 0.0;
    double type2 = 0.0;
    double type3 = 0.0;
    std::size_t violations = 0;
    /// First violation message, empty when none.
    std::string detail;

    friend bool operator==(const RatioRecord&, const RatioRecord&) = default;
};

struct SuiteSummary {
    std::string policy;
    Time k = 0;
    std::size_t runs = 0;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    std::size_t violations = 0;
};

/// A falsified bound. `instance_file` is the saved reproduction.
class AuditFailure : public Error {
public:
    AuditFailure(const std::string& what, std::filesystem::path instance_file)
        : Error(what)
        , instance_file_(std::move(instance_file)) {}

    [[nodiscard]] const std::filesystem::path& instance_file() const noexcept { return instance_file_; }

private:
    std::filesystem::path instance_file_;
};

/// Ratio (and optionally audit) for one policy on one instance. Conservative
/// runs are audited with the interval-marking scheme, other policies with
/// their capacity ledger.
[[nodiscard]] RatioRecord measure(const std::string& policy, const Instance& instance, bool audit,
                                  std::size_t oracle_budget);

/// Every (policy, k, instance) of `config` in a fixed order, independent of
/// `threads`. Instances that violate an audit are saved under dump_dir;
/// unless keep_going, the first one in record order raises AuditFailure.
[[nodiscard]] std::vector<RatioRecord> run_ratio_suite(const ExperimentConfig& config);

/// Per (policy, k) maximum and mean ratio, in first-appearance order.
[[nodiscard]] std::vector<SuiteSummary> summarize(const std::vector<RatioRecord>& records);

void write_records_csv(std::ostream& out, const std::vector<RatioRecord>& records);
[[nodiscard]] std::vector<RatioRecord> read_records_csv(std::istream& in);

}  // namespace osched::harness
