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

#include "qcl/laws.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qcl/gates.h"
#include "qcl/io.h"
#include "qcl/random.h"

namespace qcl {

const char *law_kind_name(LawKind kind) {
    switch (kind) {
        case LawKind::Consequence:
            return "CONSEQUENCE";
        case LawKind::Tautology:
            return "TAUTOLOGY";
        case LawKind::GateProperty:
            return "GATE_PROPERTY";
    }
    return "?";
}

const char *expectation_name(Expectation e) {
    return e == Expectation::Holds ? "HOLDS" : "FAILS";
}

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ConfirmedHoldsUnrefuted:
            return "CONFIRMED-HOLDS-UNREFUTED";
        case Verdict::ConfirmedFails:
            return "CONFIRMED-FAILS";
        case Verdict::Unexpected:
            return "UNEXPECTED";
    }
    return "?";
}

namespace {

const char *property_statement(GateProperty p) {
    switch (p) {
        case GateProperty::SqrtNotSquared:
            return "SQRT_NOT SQRT_NOT = NOT";
        case GateProperty::ToffoliSqrtNotCommute:
            return "T(n,m,1) SQRT_NOT = SQRT_NOT T(n,m,1)";
        case GateProperty::SqrtNotNotCommute:
            return "SQRT_NOT NOT = NOT SQRT_NOT";
        case GateProperty::ConstantHalf:
            return "Prob(SQRT_NOT(AND(psi, phi))) = 1/2";
    }
    return "?";
}

// Deviations above these refute a gate property.
double property_tolerance(GateProperty p) {
    return p == GateProperty::ConstantHalf ? kProbTolerance : 1e-12;
}

double max_component_difference(const Quregister &a, const Quregister &b) {
    double worst = 0;
    for (size_t j = 0; j < a.dim(); j++) {
        worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

struct PropertyOutcome {
    size_t samples = 0;
    double worst = 0;
};

PropertyOutcome check_property(GateProperty property, size_t budget, uint64_t seed) {
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    double tolerance = property_tolerance(property);
    for (size_t i = 0; i < budget; i++) {
        double deviation = 0;
        switch (property) {
            case GateProperty::SqrtNotSquared: {
                auto psi = random_unit_state(1 + i % 6, rng);
                deviation = max_component_difference(apply_sqrt_not(apply_sqrt_not(psi)), apply_not(psi));
                break;
            }
            case GateProperty::SqrtNotNotCommute: {
                auto psi = random_unit_state(1 + i % 6, rng);
                deviation =
                    max_component_difference(apply_sqrt_not(apply_not(psi)), apply_not(apply_sqrt_not(psi)));
                break;
            }
            case GateProperty::ToffoliSqrtNotCommute: {
                size_t n = 1 + i % 2;
                size_t m = 1 + (i / 2) % 2;
                auto psi = random_unit_state(n + m + 1, rng);
                deviation = max_component_difference(apply_toffoli(apply_sqrt_not(psi), n, m),
                                                      apply_sqrt_not(apply_toffoli(psi, n, m)));
                break;
            }
            case GateProperty::ConstantHalf: {
                auto psi = random_unit_state(1 + i % 3, rng);
                auto phi = random_unit_state(1 + (i / 3) % 3, rng);
                deviation = std::abs(prob(apply_sqrt_not(and_gate(psi, phi))) - 0.5);
                break;
            }
        }
        out.samples++;
        out.worst = std::max(out.worst, deviation);
        if (deviation > tolerance) {
            break;
        }
    }
    return out;
}

LawSpec consequence(std::string id, std::string family, std::string_view left, std::string_view right,
                    Expectation expected) {
    return {std::move(id), std::move(family), LawKind::Consequence, Claim{parse(left), parse(right)},
            GateProperty::SqrtNotSquared, expected, std::nullopt};
}

std::vector<LawSpec> make_builtin_laws() {
    constexpr auto H = Expectation::Holds;
    constexpr auto F = Expectation::Fails;
    std::vector<LawSpec> laws;
    auto both = [&](const std::string &family, std::string_view a, std::string_view b) {
        laws.push_back(consequence(family + "/ltr", family, a, b, H));
        laws.push_back(consequence(family + "/rtl", family, b, a, H));
    };

    both("double-negation", "p", "not not p");
    both("sqrt-negation", "snot snot p", "not p");
    laws.push_back(consequence("commutativity/and", "commutativity", "p and q", "q and p", H));
    laws.push_back(consequence("commutativity/or", "commutativity", "p or q", "q or p", H));
    both("associativity-and", "p and (q and r)", "(p and q) and r");
    both("associativity-or", "p or (q or r)", "(p or q) or r");
    both("de-morgan-1", "not (p and q)", "not p or not q");
    both("de-morgan-2", "not (p or q)", "not p and not q");
    laws.push_back(consequence("semiidempotence-1", "semiidempotence-1", "p and p", "p", H));
    laws.push_back(consequence("distributivity-1", "distributivity-1", "p and (q or r)", "p and q or p and r", H));

    auto pinned = [](std::string_view name) {
        for (const auto &w : known_witnesses()) {
            if (w.name == name) {
                return w.realization;
            }
        }
        throw std::logic_error("no known witness named " + std::string(name));
    };
    auto failing = [&](std::string id, std::optional<std::string_view> left, std::string_view right, LawKind kind) {
        std::optional<Formula> l;
        if (left) {
            l = parse(*left);
        }
        auto witness = pinned(id);
        laws.push_back({id, id, kind, Claim{l, parse(right)}, GateProperty::SqrtNotSquared, F, witness});
    };
    failing("semiidempotence-2", "p", "p and p", LawKind::Consequence);
    failing("excluded-middle", std::nullopt, "p or not p", LawKind::Tautology);
    failing("non-contradiction", std::nullopt, "not (p and not p)", LawKind::Tautology);
    failing("distributivity-2", "p and q or p and r", "p and (q or r)", LawKind::Consequence);

    auto property = [&](std::string id, GateProperty p) {
        laws.push_back({id, id, LawKind::GateProperty, std::nullopt, p, H, std::nullopt});
    };
    property("sqrt-not-squared", GateProperty::SqrtNotSquared);
    property("commutation-toffoli-sqrt-not", GateProperty::ToffoliSqrtNotCommute);
    property("commutation-sqrt-not-not", GateProperty::SqrtNotNotCommute);
    property("constant-half", GateProperty::ConstantHalf);
    return laws;
}

}  // namespace

std::string LawSpec::describe() const {
    if (kind == LawKind::GateProperty) {
        return property_statement(property);
    }
    return claim->str();
}

const std::vector<LawSpec> &builtin_laws() {
    static const std::vector<LawSpec> laws = make_builtin_laws();
    return laws;
}

const LawSpec &find_law(std::string_view id) {
    for (const auto &law : builtin_laws()) {
        if (law.id == id) {
            return law;
        }
    }
    throw std::out_of_range("no builtin law with id '" + std::string(id) + "'");
}

std::vector<LawSpec> laws_in_family(std::string_view family) {
    std::vector<LawSpec> out;
    for (const auto &law : builtin_laws()) {
        if (law.family == family) {
            out.push_back(law);
        }
    }
    return out;
}

uint64_t law_seed(uint64_t seed, std::string_view id) {
    return seed ^ hash_string(id);
}

LawReport run_law(const LawSpec &spec, size_t budget, uint64_t seed) {
    LawReport report;
    report.id = spec.id;
    report.family = spec.family;
    report.kind = spec.kind;
    report.statement = spec.describe();
    report.expected = spec.expected;
    report.verdict = Verdict::Unexpected;
    auto start = std::chrono::steady_clock::now();
    try {
        if (budget == 0) {
            throw std::invalid_argument("budget must be at least 1");
        }
        uint64_t own_seed = law_seed(seed, spec.id);
        bool refuted = false;
        if (spec.kind == LawKind::GateProperty) {
            auto outcome = check_property(spec.property, budget, own_seed);
            report.samples = outcome.samples;
            report.worst_margin = outcome.worst;
            refuted = outcome.worst > property_tolerance(spec.property);
        } else {
            SearchOptions options;
            options.budget = budget;
            options.seed = own_seed;
            options.pinned = spec.pinned_counterexample;
            auto result = search(*spec.claim, options);
            report.samples = result.evaluated;
            report.grid_points = result.grid_points;
            report.worst_margin = result.max_margin;
            report.counterexample = result.counterexample;
            refuted = result.counterexample.has_value();
        }
        if (spec.expected == Expectation::Holds) {
            report.verdict = refuted ? Verdict::Unexpected : Verdict::ConfirmedHoldsUnrefuted;
            if (refuted) {
                report.diagnostics = "expected to hold but a counterexample was found";
            }
        } else {
            report.verdict = refuted ? Verdict::ConfirmedFails : Verdict::Unexpected;
            if (!refuted) {
                report.diagnostics = "expected to fail but no counterexample was found";
            }
        }
    } catch (const std::exception &e) {
        report.verdict = Verdict::Unexpected;
        report.diagnostics = std::string("evaluation error: ") + e.what();
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SuiteReport run_suite(size_t budget, uint64_t seed) {
    SuiteReport suite{{}, seed, budget, kEngineVersion, true};
    for (const auto &law : builtin_laws()) {
        suite.laws.push_back(run_law(law, budget, seed));
        if (suite.laws.back().verdict == Verdict::Unexpected) {
            suite.pass = false;
        }
    }
    return suite;
}

nlohmann::json suite_to_json(const SuiteReport &report, bool include_timing) {
    using nlohmann::json;
    json laws = json::array();
    for (const auto &law : report.laws) {
        json entry = {
            {"id", law.id},
            {"family", law.family},
            {"kind", law_kind_name(law.kind)},
            {"statement", law.statement},
            {"expected", expectation_name(law.expected)},
            {"verdict", verdict_name(law.verdict)},
            {"samples", law.samples},
            {"grid_points", law.grid_points},
            {"worst_margin", law.worst_margin},
            {"counterexample", nullptr},
        };
        if (law.counterexample) {
            const auto &c = *law.counterexample;
            entry["counterexample"] = {
                {"origin", witness_origin_name(c.origin)},
                {"sample_index", c.sample_index},
                {"prob_left", c.prob_left},
                {"prob_right", c.prob_right},
                {"margin", c.margin},
                {"realization", realization_to_json(c.realization)},
            };
        }
        if (!law.diagnostics.empty()) {
            entry["diagnostics"] = law.diagnostics;
        }
        if (include_timing) {
            entry["wall_seconds"] = law.wall_seconds;
        }
        laws.push_back(std::move(entry));
    }
    return {
        {"schema", kReportSchema},
        {"engine_version", report.engine_version},
        {"seed", report.seed},
        {"budget", report.budget},
        {"pass", report.pass},
        {"laws", std::move(laws)},
    };
}

std::string suite_to_text(const SuiteReport &report) {
    std::ostringstream out;
    out << report.engine_version << "  seed=" << report.seed << "  budget=" << report.budget << "\n";
    size_t unexpected = 0;
    char line[512];
    for (const auto &law : report.laws) {
        bool ok = law.verdict != Verdict::Unexpected;
        unexpected += !ok;
        std::snprintf(line, sizeof(line), "%s %-30s %-27s samples=%-6zu worst=%-11.4g %.3fs  %s\n",
                      ok ? "[ok]  " : "[FAIL]", law.id.c_str(), verdict_name(law.verdict), law.samples,
                      law.worst_margin, law.wall_seconds, law.statement.c_str());
        out << line;
        if (law.counterexample) {
            const auto &c = *law.counterexample;
            out << "         counterexample (" << witness_origin_name(c.origin) << "): margin " << c.margin << " at "
                << realization_to_json(c.realization).dump() << "\n";
        }
        if (!law.diagnostics.empty()) {
            out << "         " << law.diagnostics << "\n";
        }
    }
    out << (report.pass ? "PASS" : "FAIL") << ": " << report.laws.size() << " laws, " << unexpected
        << " unexpected\n";
    return out.str();
}

}  // namespace qcl
