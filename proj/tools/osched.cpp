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

#include <osched/adversaries/constructions.hpp>
#include <osched/algorithms/capacity.hpp>
#include <osched/algorithms/policies.hpp>
#include <osched/charging/conservative_audit.hpp>
#include <osched/charging/ledger.hpp>
#include <osched/core/error.hpp>
#include <osched/core/io.hpp>
#include <osched/core/simulator.hpp>
#include <osched/harness/experiment.hpp>
#include <osched/oracle/optimum.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace osched;

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;

struct Globals {
    std::uint64_t seed = 1;
    unsigned precision = 53;
    std::size_t oracle_budget = 22;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    return out;
}

int cmd_simulate(const std::string& file, const std::string& policy_spec) {
    const Instance instance = io::load_instance(file);
    auto policy = algo::make_policy(policy_spec);
    const Trace trace = simulate(instance, *policy);
    io::write_trace(std::cout, trace);
    std::cout << "gain " << io::format_decimal(gain(trace, instance)) << '\n';
    return 0;
}

int cmd_opt(const std::string& file, const Globals& globals) {
    const Instance instance = io::load_instance(file);
    const auto result = oracle::offline_optimum(instance, {globals.oracle_budget});
    std::cout << "gain " << io::format_decimal(result.gain) << "\nsubset";
    for (const JobId id : result.chosen) std::cout << ' ' << id;
    std::cout << '\n';
    io::write_trace(std::cout, result.witness);
    return 0;
}

void print_row(std::ostream& out, JobId target, double t1, double t2, double t3, int count, double bound, bool pass) {
    out << target << ',' << io::format_decimal(t1) << ',' << io::format_decimal(t2) << ',' << io::format_decimal(t3)
        << ',' << count << ',' << io::format_decimal(bound) << ',' << (pass ? "PASS" : "FAIL") << '\n';
}

int cmd_audit(const std::string& file, const std::string& policy_spec, const std::string& csv_path,
              const Globals& globals) {
    const Instance instance = io::load_instance(file);
    auto policy = algo::make_policy(policy_spec);
    const Trace alg = simulate(instance, *policy);
    const auto optimum = oracle::offline_optimum(instance, {globals.oracle_budget});
    const Weight alg_gain = gain(alg, instance);

    std::ostringstream table;
    table << "target_id,type1_total,type2_total,type3_total,type3_count,bound,pass\n";
    std::vector<std::string> problems;
    if (policy->name() == "conservative") {
        const auto report = charging::conservative_audit(instance, alg, optimum.witness);
        std::set<JobId> flagged;
        for (const auto& v : report.violations) {
            flagged.insert(v.job);
            problems.push_back(v.kind + " job " + std::to_string(v.job) + ": " + v.detail);
        }
        for (const auto& [id, totals] : report.targets) {
            print_row(table, id, totals.self_charge, totals.other_charge, 0.0, 0, 5.0 * totals.weight,
                      !flagged.contains(id));
        }
        if (optimum.gain > 5.0 * alg_gain * (1.0 + 1e-9)) problems.push_back("ratio above 5");
    } else {
        const auto capacity = algo::capacity_for(policy_spec);
        if (!capacity) throw ConfigError("policy " + policy_spec + " has no charging analysis");
        const auto ledger = charging::build_general_ledger(instance, alg, optimum.witness, *capacity);
        const auto report = charging::check_all(ledger, alg_gain, optimum.gain);
        for (const auto& v : report.violations) problems.push_back(v.kind + " job " + std::to_string(v.job) + ": " + v.detail);
        for (const auto& row : charging::target_table(ledger, report)) {
            print_row(table, row.target, row.type1, row.type2, row.type3, row.type3_count, row.bound, row.pass);
        }
    }

    std::cout << table.str();
    if (!csv_path.empty()) open_output(csv_path) << table.str();
    for (const auto& p : problems) std::cout << "violation " << p << '\n';
    std::cout << "algorithm_gain " << io::format_decimal(alg_gain) << "\noptimum_gain " << io::format_decimal(optimum.gain)
              << '\n'
              << (problems.empty() ? "PASS" : "FAIL") << '\n';
    return problems.empty() ? 0 : kExitViolation;
}

int cmd_ratio(harness::ExperimentConfig config, const std::string& csv_path, const Globals& globals) {
    config.seed = globals.seed;
    config.oracle_budget = globals.oracle_budget;
    const auto records = harness::run_ratio_suite(config);
    if (!csv_path.empty()) {
        auto out = open_output(csv_path);
        harness::write_records_csv(out, records);
    }
    std::size_t violations = 0;
    for (const auto& s : harness::summarize(records)) {
        std::cout << "policy " << s.policy << " k " << s.k << " runs " << s.runs << " max_ratio "
                  << io::format_decimal(s.max_ratio) << " mean_ratio " << io::format_decimal(s.mean_ratio)
                  << " violations " << s.violations << '\n';
        violations += s.violations;
    }
    return violations == 0 ? 0 : kExitViolation;
}

int cmd_adversary(const std::string& name, const std::string& policy_spec, Time k, double R, int l,
                  const std::string& instance_out, const Globals& globals) {
    auto policy = algo::make_policy(policy_spec);
    adversary::AdversaryRun run;
    if (name == "equal-length") {
        run = adversary::equal_length_adversary(*policy, {R, k, 10000, globals.precision});
    } else if (name == "log-loglog") {
        run = adversary::log_over_loglog_adversary(*policy, l > 0 ? l : adversary::loglog_depth(k));
    } else if (name == "k-lnk") {
        run = adversary::k_over_lnk_adversary(*policy, k);
    } else {
        throw ConfigError("unknown adversary '" + name + "' (equal-length, log-loglog, k-lnk)");
    }
    if (!instance_out.empty()) io::save_instance(instance_out, run.instance);
    io::write_trace(std::cout, run.algorithm_trace);
    if (run.sequence && run.sequence->i0) std::cout << "i0 " << *run.sequence->i0 << '\n';
    std::cout << "algorithm_gain " << io::format_decimal(run.algorithm_gain) << "\nadversary_gain "
              << io::format_decimal(run.adversary_gain) << "\nforced_ratio " << io::format_decimal(run.forced_ratio)
              << '\n';
    return 0;
}

int cmd_gen(Time k, std::size_t n, bool equal, bool unit, double slack, Time horizon, const std::string& out_path,
            const Globals& globals) {
    const Instance instance = harness::random_instance(globals.seed, k, n, equal, unit, slack,
                                                       horizon > 0 ? horizon : static_cast<Time>(2 * n) * k / 3 + 1);
    if (out_path.empty()) {
        io::write_instance(std::cout, instance);
    } else {
        io::save_instance(out_path, instance);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online deadline scheduling: simulate, audit and attack policies"};
    app.require_subcommand(1);
    Globals globals;
    app.add_option("--seed", globals.seed, "Base seed for generated instances")->capture_default_str();
    app.add_option("--precision", globals.precision, "Mantissa bits for adversary weight sequences")
        ->capture_default_str();
    app.add_option("--oracle-budget", globals.oracle_budget, "Largest instance the exact optimum accepts")
        ->capture_default_str();

    std::string file;
    std::string policy = "smith";
    std::string csv;

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a policy on an instance file");
    simulate_cmd->add_option("instance", file)->required();
    simulate_cmd->add_option("--policy", policy)->capture_default_str();

    auto* opt_cmd = app.add_subcommand("opt", "Exact offline optimum of an instance file");
    opt_cmd->add_option("instance", file)->required();

    auto* audit_cmd = app.add_subcommand("audit", "Charging audit of a policy against the optimum");
    audit_cmd->add_option("instance", file)->required();
    audit_cmd->add_option("--policy", policy)->capture_default_str();
    audit_cmd->add_option("--csv", csv, "Write the per-target table here");

    harness::ExperimentConfig config;
    std::vector<std::string> files;
    auto* ratio_cmd = app.add_subcommand("ratio", "Measured competitive ratios over a suite");
    ratio_cmd->add_option("--policy", config.policies)->required();
    ratio_cmd->add_option("--instances", files, "Instance files instead of generated ones");
    ratio_cmd->add_option("--count", config.count)->capture_default_str();
    ratio_cmd->add_option("--k-min", config.k_min)->capture_default_str();
    ratio_cmd->add_option("--k-max", config.k_max)->capture_default_str();
    ratio_cmd->add_option("--n-min", config.n_min)->capture_default_str();
    ratio_cmd->add_option("--n-max", config.n_max)->capture_default_str();
    ratio_cmd->add_flag("--equal", config.equal_lengths);
    ratio_cmd->add_flag("--unit", config.unit_weights);
    ratio_cmd->add_option("--slack", config.slack)->capture_default_str();
    ratio_cmd->add_option("--horizon", config.horizon, "0 scales with n and k")->capture_default_str();
    ratio_cmd->add_flag("--audit", config.audit);
    ratio_cmd->add_flag("--keep-going", config.keep_going, "Record violations instead of stopping");
    ratio_cmd->add_option("--dump-dir", config.dump_dir)->capture_default_str();
    ratio_cmd->add_option("--threads", config.threads)->capture_default_str();
    ratio_cmd->add_option("--csv", csv, "Write per-instance records here");

    std::string adversary_name;
    Time k = 2;
    double R = 2.59;
    int l = 0;
    std::string instance_out;
    auto* adversary_cmd = app.add_subcommand("adversary", "Play a lower-bound construction against a policy");
    adversary_cmd->add_option("name", adversary_name, "equal-length, log-loglog or k-lnk")->required();
    adversary_cmd->add_option("--policy", policy)->capture_default_str();
    adversary_cmd->add_option("--k", k)->capture_default_str();
    adversary_cmd->add_option("--R", R)->capture_default_str();
    adversary_cmd->add_option("--l", l, "Depth for log-loglog; 0 derives it from k")->capture_default_str();
    adversary_cmd->add_option("--instance-out", instance_out, "Save the released jobs here");

    std::size_t n = 8;
    bool equal = false;
    bool unit = false;
    double slack = 1.0;
    Time horizon = 0;
    std::string out_path;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--k", k)->capture_default_str();
    gen_cmd->add_option("--n", n)->capture_default_str();
    gen_cmd->add_flag("--equal", equal);
    gen_cmd->add_flag("--unit", unit);
    gen_cmd->add_option("--slack", slack)->capture_default_str();
    gen_cmd->add_option("--horizon", horizon, "0 scales with n and k")->capture_default_str();
    gen_cmd->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*simulate_cmd) return cmd_simulate(file, policy);
        if (*opt_cmd) return cmd_opt(file, globals);
        if (*audit_cmd) return cmd_audit(file, policy, csv, globals);
        if (*ratio_cmd) {
            if (!files.empty()) {
                config.source = harness::Source::Files;
                config.files.assign(files.begin(), files.end());
            }
            return cmd_ratio(config, csv, globals);
        }
        if (*adversary_cmd) return cmd_adversary(adversary_name, policy, k, R, l, instance_out, globals);
        if (*gen_cmd) return cmd_gen(k, n, equal, unit, slack, horizon, out_path, globals);
    } catch (const harness::AuditFailure& e) {
        std::cerr << "audit violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const ConstructionError& e) {
        std::cerr << "construction violated: " << e.what() << '\n';
        return kExitViolation;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
