// Copyright 2026 The qclogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCL_LAWS_H
#define QCL_LAWS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qcl/semantics.h"

namespace qcl {

inline constexpr const char *kEngineVersion = "qclogic 1.0.0";
inline constexpr int kReportSchema = 1;
inline constexpr size_t kDefaultBudget = 10000;

enum class LawKind { Consequence, Tautology, GateProperty };
enum class Expectation { Holds, Fails };
enum class Verdict { ConfirmedHoldsUnrefuted, ConfirmedFails, Unexpected };

/// Operator-level identities checked on random registers rather than on
/// formulas.
enum class GateProperty {
    SqrtNotSquared,         // SQRT_NOT SQRT_NOT = NOT
    ToffoliSqrtNotCommute,  // T SQRT_NOT = SQRT_NOT T
    SqrtNotNotCommute,      // SQRT_NOT NOT = NOT SQRT_NOT
    ConstantHalf,           // Prob(SQRT_NOT(AND(psi, phi))) = 1/2
};

const char *law_kind_name(LawKind kind);
const char *expectation_name(Expectation e);
const char *verdict_name(Verdict v);

struct LawSpec {
    /// Unique, e.g. "de-morgan-1/rtl".
    std::string id;
    /// Shared by the two directions of a bidirectional law.
    std::string family;
    LawKind kind;
    /// CONSEQUENCE: left |= right. TAUTOLOGY: left is empty. Unused for
    /// GATE_PROPERTY.
    std::optional<Claim> claim;
    GateProperty property = GateProperty::SqrtNotSquared;
    Expectation expected;
    std::optional<Realization> pinned_counterexample;

    std::string describe() const;
};

struct LawReport {
    std::string id;
    std::string family;
    LawKind kind;
    std::string statement;
    Expectation expected;
    Verdict verdict;
    size_t samples = 0;
    /// Truth-functional grid points checked after sampling.
    size_t grid_points = 0;
    /// Largest prob_left - prob_right seen (deviation for gate properties).
    double worst_margin = 0;
    std::optional<Counterexample> counterexample;
    std::string diagnostics;
    double wall_seconds = 0;
};

struct SuiteReport {
    std::vector<LawReport> laws;
    uint64_t seed;
    size_t budget;
    std::string engine_version;
    bool pass;
};

/// Sixteen holding entailment directions, four failing claims, and four
/// gate-level identities.
const std::vector<LawSpec> &builtin_laws();

const LawSpec &find_law(std::string_view id);
std::vector<LawSpec> laws_in_family(std::string_view family);

/// Seed used for a law's own search: seed ^ hash(law id).
uint64_t law_seed(uint64_t seed, std::string_view id);

/// Never throws; evaluation failures yield UNEXPECTED with diagnostics.
LawReport run_law(const LawSpec &spec, size_t budget, uint64_t seed);

SuiteReport run_suite(size_t budget, uint64_t seed);

/// Deterministic for fixed (seed, budget) unless `include_timing` is set.
nlohmann::json suite_to_json(const SuiteReport &report, bool include_timing = false);
std::string suite_to_text(const SuiteReport &report);

}  // namespace qcl

#endif
