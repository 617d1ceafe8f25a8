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

#include <osched/algorithms/capacity.hpp>
#include <osched/core/types.hpp>

#include <map>
#include <string>
#include <vector>

namespace osched::charging {

/// Something the charging argument needs and the concrete run does not
/// provide. `slot` is -1 when the problem is not tied to one slot.
struct Violation {
    std::string kind;
    Time slot = -1;
    JobId job = -1;
    std::string detail;
};

/// One adversary unit (job, remaining, slot) moved onto an algorithm
/// completion. Type 1: the algorithm already finished the unit's own job.
/// Type 2: the algorithm's unit in the same slot has at least the unit's
/// Smith ratio as capacity. Type 3: everything else, via the critical time.
struct Charge {
    Unit source;
    Time slot = 0;
    Time source_processing = 1;
    JobId target = 0;
    int type = 1;
    double amount = 0.0;
};

struct TargetTotals {
    Weight weight = 0.0;
    /// pi(i0, 1), evaluated at the slot the target finished.
    double last_capacity = 0.0;
    double type1 = 0.0;
    double type2 = 0.0;
    double type3 = 0.0;
    int type3_count = 0;

    [[nodiscard]] double total() const noexcept { return type1 + type2 + type3; }
};

struct ChargeLedger {
    std::vector<Charge> charges;
    /// Every job the algorithm completed, charged or not.
    std::map<JobId, TargetTotals> targets;
    /// Monotonicity, validity and resolution problems met while building.
    std::vector<Violation> violations;

    std::string capacity_name;
    double rho = 0.0;
    Time k = 1;
    Time final_k_star = 1;
    bool harmonic_bounds = false;
    double claimed_ratio = 0.0;

    [[nodiscard]] double total_amount() const noexcept;
};

/// Classifies every unit of every job the adversary completes. Capacities
/// are evaluated with the k* in force at each slot; rho uses the final k*.
[[nodiscard]] ChargeLedger build_general_ledger(const Instance& instance, const Trace& alg, const Trace& adv,
                                                const algo::CapacityFunction& capacity);

struct BoundReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool pass() const noexcept { return violations.empty(); }
    void merge(const BoundReport& other);
};

/// Per target: fewer than p type 3 sources with p_j <= p for every p in
/// [1, k]; each type 3 amount at most pi(i0, 1); at most k-1 sources. With
/// harmonic bounds the type 3 total is also at most H_k - 1.
[[nodiscard]] BoundReport check_type3_bound(const ChargeLedger& ledger, Time k);

/// Per target: type 2 total at most pi(i0, 1) / (1 - rho); with harmonic
/// bounds also at most H_k.
[[nodiscard]] BoundReport check_type2_bound(const ChargeLedger& ledger);

/// Per target: type 1 total at most w.
[[nodiscard]] BoundReport check_type1_bound(const ChargeLedger& ledger);

/// Sum of charge amounts equals the adversary's gain.
[[nodiscard]] BoundReport check_conservation(const ChargeLedger& ledger, Weight adversary_gain);

/// Construction violations plus every bound above plus the per-run witness
/// adversary gain <= claimed ratio * algorithm gain.
[[nodiscard]] BoundReport check_all(const ChargeLedger& ledger, Weight algorithm_gain, Weight adversary_gain);

/// One row of the audit table.
struct TargetRow {
    JobId target = 0;
    double type1 = 0.0;
    double type2 = 0.0;
    double type3 = 0.0;
    int type3_count = 0;
    double bound = 0.0;
    bool pass = true;
};

[[nodiscard]] std::vector<TargetRow> target_table(const ChargeLedger& ledger, const BoundReport& report);

}  // namespace osched::charging
