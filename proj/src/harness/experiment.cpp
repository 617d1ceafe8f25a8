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

#include <osched/harness/experiment.hpp>

#include <osched/algorithms/capacity.hpp>
#include <osched/algorithms/policies.hpp>
#include <osched/charging/conservative_audit.hpp>
#include <osched/charging/ledger.hpp>
#include <osched/core/io.hpp>
#include <osched/core/simulator.hpp>
#include <osched/oracle/optimum.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <thread>

namespace osched::harness {
namespace {

constexpr const char* kCsvHeader =
    "policy,k,seed,n,instance,algorithm_gain,oracle_gain,ratio,audited,type1,type2,type3,violations,detail";

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                fields.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back();
        } else {
            fields.back() += ch;
        }
    }
    return fields;
}

double ratio_of(Weight oracle, Weight algorithm) {
    if (algorithm > 0.0) return oracle / algorithm;
    return oracle > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

void note(RatioRecord& record, std::size_t count, const std::string& first) {
    if (count == 0) return;
    if (record.violations == 0) record.detail = first;
    record.violations += count;
}

std::string describe(const charging::Violation& v) {
    return v.kind + " job " + std::to_string(v.job) + " t=" + std::to_string(v.slot) + ": " + v.detail;
}

struct Task {
    std::string policy;
    Time k = 0;
    std::uint64_t seed = 0;
    std::string label;
    Instance instance;
};

std::vector<Task> plan(const ExperimentConfig& config) {
    std::vector<Task> tasks;
    if (config.source == Source::Files) {
        for (const auto& policy : config.policies) {
            for (const auto& path : config.files) {
                Instance instance = io::load_instance(path);
                tasks.push_back({policy, instance.k(), 0, path.string(), std::move(instance)});
            }
        }
        return tasks;
    }
    if (config.n_min > config.n_max || config.k_min > config.k_max) {
        throw ConfigError("empty k or n range");
    }
    const std::size_t n_span = config.n_max - config.n_min + 1;
    for (const auto& policy : config.policies) {
        for (Time k = config.k_min; k <= config.k_max; ++k) {
            for (std::size_t i = 0; i < config.count; ++i) {
                const std::uint64_t seed = config.seed + i;
                const std::size_t n = config.n_min + i % n_span;
                const Time horizon =
                    config.horizon > 0 ? config.horizon : static_cast<Time>(2 * n) * k / 3 + 1;
                tasks.push_back({policy, k, seed, "seed=" + std::to_string(seed),
                                 random_instance(seed, k, n, config.equal_lengths, config.unit_weights, config.slack,
                                                 horizon)});
            }
        }
    }
    return tasks;
}

}  // namespace

Instance random_instance(std::uint64_t seed, Time k, std::size_t n, bool equal_lengths, bool unit_weights,
                         double slack, Time horizon) {
    if (k < 1 || horizon < 1 || !(slack >= 0.0)) throw ConfigError("random instance needs k, horizon >= 1, slack >= 0");
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n)};
    std::mt19937_64 rng(sequence);
    std::uniform_int_distribution<Time> release(0, horizon - 1);
    std::uniform_int_distribution<Time> length(1, k);
    std::uniform_real_distribution<double> log_weight(0.0, 2.0 * std::log(static_cast<double>(k)));

    std::vector<Job> jobs;
    for (std::size_t i = 0; i < n; ++i) {
        Job job;
        job.release = release(rng);
        job.processing = equal_lengths ? k : length(rng);
        const double mean = slack * static_cast<double>(job.processing);
        Time extra = 0;
        if (mean > 0.0) extra = std::geometric_distribution<Time>(1.0 / (1.0 + mean))(rng);
        job.deadline = job.release + job.processing + extra;
        job.weight = unit_weights ? 1.0 : std::exp(log_weight(rng));
        jobs.push_back(job);
    }
    return Instance::from_jobs(std::move(jobs), k, equal_lengths);
}

RatioRecord measure(const std::string& policy_spec, const Instance& instance, bool audit, std::size_t oracle_budget) {
    RatioRecord record;
    record.policy = policy_spec;
    record.k = instance.k();
    record.n = instance.size();

    auto policy = algo::make_policy(policy_spec);
    const Trace alg = simulate(instance, *policy);
    const auto optimum = oracle::offline_optimum(instance, {oracle_budget});
    record.algorithm_gain = gain(alg, instance);
    record.oracle_gain = optimum.gain;
    record.ratio = ratio_of(record.oracle_gain, record.algorithm_gain);
    if (!audit) return record;

    record.audited = true;
    if (policy->name() == "conservative") {
        const auto report = charging::conservative_audit(instance, alg, optimum.witness);
        note(record, report.violations.size(), report.pass() ? "" : describe(report.violations.front()));
        for (const auto& [id, totals] : report.targets) {
            record.type1 += totals.self_charge;
            record.type2 += totals.other_charge;
        }
        if (record.oracle_gain > 5.0 * record.algorithm_gain * (1.0 + 1e-9)) {
            note(record, 1, "ratio above 5");
        }
        return record;
    }
    const auto capacity = algo::capacity_for(policy_spec);
    if (!capacity) return record;
    const auto ledger = charging::build_general_ledger(instance, alg, optimum.witness, *capacity);
    const auto report = charging::check_all(ledger, record.algorithm_gain, record.oracle_gain);
    note(record, report.violations.size(), report.pass() ? "" : describe(report.violations.front()));
    for (const auto& [id, totals] : ledger.targets) {
        record.type1 += totals.type1;
        record.type2 += totals.type2;
        record.type3 += totals.type3;
    }
    return record;
}

std::vector<RatioRecord> run_ratio_suite(const ExperimentConfig& config) {
    if (config.policies.empty()) throw ConfigError("ratio suite needs at least one policy");
    const auto tasks = plan(config);
    std::vector<RatioRecord> records(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                records[i] = measure(tasks[i].policy, tasks[i].instance, config.audit, config.oracle_budget);
                records[i].seed = tasks[i].seed;
                records[i].instance = tasks[i].label;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < std::max(1U, config.threads); ++t) pool.emplace_back(worker);
        worker();
    }

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        if (records[i].violations == 0) continue;
        const auto path = config.dump_dir / ("violation-" + std::to_string(i) + "-k" + std::to_string(tasks[i].k) +
                                             "-seed" + std::to_string(tasks[i].seed) + ".inst");
        io::save_instance(path, tasks[i].instance);
        if (!config.keep_going) {
            throw AuditFailure(records[i].policy + " on " + records[i].instance + ": " + records[i].detail +
                                   " (instance saved to " + path.string() + ")",
                               path);
        }
    }
    return records;
}

std::vector<SuiteSummary> summarize(const std::vector<RatioRecord>& records) {
    std::vector<SuiteSummary> out;
    std::map<std::pair<std::string, Time>, std::size_t> index;
    for (const auto& record : records) {
        auto [it, fresh] = index.try_emplace({record.policy, record.k}, out.size());
        if (fresh) out.push_back({record.policy, record.k});
        SuiteSummary& summary = out[it->second];
        ++summary.runs;
        summary.max_ratio = std::max(summary.max_ratio, record.ratio);
        summary.mean_ratio += (record.ratio - summary.mean_ratio) / static_cast<double>(summary.runs);
        summary.violations += record.violations;
    }
    return out;
}

void write_records_csv(std::ostream& out, const std::vector<RatioRecord>& records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << quote(r.policy) << ',' << r.k << ',' << r.seed << ',' << r.n << ',' << quote(r.instance) << ','
            << io::format_decimal(r.algorithm_gain) << ',' << io::format_decimal(r.oracle_gain) << ','
            << io::format_decimal(r.ratio) << ',' << (r.audited ? 1 : 0) << ',' << io::format_decimal(r.type1) << ','
            << io::format_decimal(r.type2) << ',' << io::format_decimal(r.type3) << ',' << r.violations << ','
            << quote(r.detail) << '\n';
    }
}

std::vector<RatioRecord> read_records_csv(std::istream& in) {
    std::vector<RatioRecord> records;
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw InvalidInput("missing ratio CSV header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 14) throw InvalidInput("ratio CSV row needs 14 fields: '" + line + "'");
        RatioRecord r;
        r.policy = f[0];
        r.k = io::parse_integer(f[1]);
        r.seed = static_cast<std::uint64_t>(std::stoull(f[2]));
        r.n = static_cast<std::size_t>(io::parse_integer(f[3]));
        r.instance = f[4];
        r.algorithm_gain = io::parse_real(f[5]);
        r.oracle_gain = io::parse_real(f[6]);
        r.ratio = io::parse_real(f[7]);
        r.audited = f[8] == "1";
        r.type1 = io::parse_real(f[9]);
        r.type2 = io::parse_real(f[10]);
        r.type3 = io::parse_real(f[11]);
        r.violations = static_cast<std::size_t>(io::parse_integer(f[12]));
        r.detail = f[13];
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace osched::harness
