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

// Acceptance criteria runner. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. All tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qcl/dense_oracle.h"
#include "qcl/gates.h"
#include "qcl/laws.h"
#include "qcl/random.h"
#include "qcl/semantics.h"
#include "qcl/syntax.h"
#include "qcl/xcheck.h"
#include "support/oracle.h"

using namespace qcl;

namespace {

constexpr double kGateTol = 1e-12;
constexpr double kProbTol = 1e-9;
constexpr double kWitnessTol = 1e-6;
constexpr double kDistributivityMinMargin = 0.01;
constexpr double kLawMarginTol = 1e-9;
constexpr double kGateIdentitySeconds = 5.0;
constexpr double kProbIdentitySeconds = 2.0;
constexpr double kSuiteSeconds = 60.0;
constexpr double kKernelSeconds = 0.100;
constexpr size_t kStateBytesLimit = size_t{64} << 20;

const Amplitude I(0, 1);

struct Outcome {
    bool ok;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char *format, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

Outcome gate_identities() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    double worst = 0;
    for (size_t width = 1; width <= 6; width++) {
        for (int trial = 0; trial < 100; trial++) {
            auto psi = random_unit_state(width, rng);
            worst = std::max(worst, reference::max_diff(apply_sqrt_not(apply_sqrt_not(psi)), apply_not(psi)));
            worst = std::max(worst, reference::max_diff(apply_sqrt_not(apply_not(psi)), apply_not(apply_sqrt_not(psi))));
            for (size_t n = 1; n + 1 < width; n++) {
                size_t m = width - 1 - n;
                worst = std::max(worst, reference::max_diff(apply_toffoli(apply_sqrt_not(psi), n, m),
                                                          apply_sqrt_not(apply_toffoli(psi, n, m))));
            }
        }
    }
    double elapsed = seconds_since(start);
    return {worst <= kGateTol && elapsed < kGateIdentitySeconds,
            fmt("max deviation %.3g, %.3f s", worst, elapsed)};
}

Outcome toffoli_truth_table() {
    int matched = 0;
    for (int x = 0; x <= 1; x++) {
        for (int y = 0; y <= 1; y++) {
            for (int z = 0; z <= 1; z++) {
                auto out = apply_toffoli(basis_state({x, y, z}), 1, 1);
                auto expected = basis_state({x, y, (x & y) ^ z});
                // Exact: the gate is a permutation of basis amplitudes.
                matched += out == expected;
            }
        }
    }
    bool special = apply_toffoli(basis_state({1, 1, 0}), 1, 1) == basis_state({1, 1, 1});
    return {matched == 8 && special, fmt("%.0f/8 rows exact", matched)};
}

// Direct sum for prob(SQRT_NOT psi) and prob(NOT SQRT_NOT psi) from the
// amplitude pairs (a_{j-1}, a_j), j odd.
std::pair<double, double> sqrt_not_prob_sums(const Quregister &psi) {
    Amplitude plus = 0.5 * (1.0 + I), minus = 0.5 * (1.0 - I);
    double iv = 0, v = 0;
    for (size_t j = 1; j < psi.dim(); j += 2) {
        iv += std::norm(minus * psi[j - 1] + plus * psi[j]);
        v += std::norm(plus * psi[j - 1] + minus * psi[j]);
    }
    return {iv, v};
}

Outcome prob_identities() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(303);
    double worst = 0;
    for (int trial = 0; trial < 1000; trial++) {
        auto psi = random_unit_state(1, rng);
        auto phi = random_unit_state(1, rng);
        double p = prob(psi), q = prob(phi);
        auto conj = and_gate(psi, phi);
        worst = std::max(worst, std::abs(prob(conj) - p * q));
        worst = std::max(worst, std::abs(prob(apply_not(psi)) - (1 - p)));
        worst = std::max(worst, std::abs(prob(or_gate(psi, phi)) - (p + q - p * q)));
        worst = std::max(worst, std::abs(prob(apply_sqrt_not(conj)) - 0.5));
        for (const auto &s : {psi, tensor(psi, phi), conj}) {
            auto [iv, v] = sqrt_not_prob_sums(s);
            worst = std::max(worst, std::abs(prob(apply_sqrt_not(s)) - iv));
            worst = std::max(worst, std::abs(prob(apply_not(apply_sqrt_not(s))) - v));
            worst = std::max(worst, std::abs(prob(apply_sqrt_not(apply_not(s))) - v));
        }
    }
    double elapsed = seconds_since(start);
    return {worst <= kProbTol && elapsed < kProbIdentitySeconds,
            fmt("max deviation %.3g, %.3f s", worst, elapsed)};
}

Outcome non_truth_functional() {
    double h = std::sqrt(2.0) / 2;
    auto psi = Quregister::qubit(h, h);
    auto phi = Quregister::qubit(h, h * Amplitude(h, h));
    double p_psi = prob(apply_sqrt_not(psi));
    double p_phi = prob(apply_sqrt_not(phi));
    bool ok = std::abs(prob(psi) - 0.5) <= kProbTol && std::abs(prob(phi) - 0.5) <= kProbTol &&
              std::abs(p_psi - 0.5) <= kProbTol && std::abs(p_phi - 0.146447) <= kWitnessTol;
    return {ok, fmt("Prob(SQRT_NOT phi) = %.9f, Prob(SQRT_NOT psi) = %.9f", p_phi, p_psi)};
}

Outcome failing_witnesses() {
    double h = std::sqrt(2.0) / 2;
    Realization alpha;
    alpha.assign("p", Quregister::qubit(h, h));
    bool ok = true;
    auto both = [&](const char *text, double expected) {
        auto f = parse(text);
        double structured = prob_of(f, alpha);
        double dense = reference::dense_prob_of(f, alpha);
        ok &= std::abs(structured - expected) <= kProbTol && std::abs(dense - expected) <= kProbTol;
    };
    both("p", 0.5);
    both("p and p", 0.25);
    both("p or not p", 0.75);
    both("not (p and not p)", 0.75);

    Realization r = alpha;
    r.assign("q", Quregister::qubit(h, h));
    r.assign("r", Quregister::qubit(std::sqrt(3.0) / 2, 0.5));
    auto left = parse("p and q or p and r");
    auto right = parse("p and (q or r)");
    double dl = reference::dense_prob_of(left, r), dr = reference::dense_prob_of(right, r);
    double sl = prob_of(left, r), sr = prob_of(right, r);
    double margin = dl - dr;
    ok &= margin >= kDistributivityMinMargin && std::abs(sl - dl) <= kProbTol && std::abs(sr - dr) <= kProbTol;
    return {ok, fmt("distributivity %.6f > %.6f, margin %.6f", dl, dr, margin)};
}

Outcome holding_suite() {
    auto start = std::chrono::steady_clock::now();
    auto suite = run_suite(kDefaultBudget, 0);
    double elapsed = seconds_since(start);
    size_t checked = 0;
    bool ok = suite.pass;
    double worst = -1;
    for (const auto &law : suite.laws) {
        if (law.kind == LawKind::GateProperty || law.expected != Expectation::Holds) {
            continue;
        }
        checked++;
        ok &= law.verdict == Verdict::ConfirmedHoldsUnrefuted && law.samples >= kDefaultBudget &&
              law.worst_margin <= kLawMarginTol;
        worst = std::max(worst, law.worst_margin);
    }
    ok &= checked == 16 && elapsed < kSuiteSeconds;
    return {ok, fmt("%.0f directions, worst margin %.3g, suite %.2f s", checked, worst, elapsed)};
}

Outcome oracle_equivalence() {
    auto report = run_gate_xcheck(8, 200, 0);
    return {report.pass && report.max_deviation <= kGateTol,
            fmt("%.0f gates, max deviation %.3g", report.entries.size(), report.max_deviation)};
}

Outcome fixed_points() {
    double h = 1 / std::sqrt(2.0);
    auto plus = Quregister::qubit(h, h);
    double d1 = reference::max_diff(apply_not(plus), plus);
    double d2 = reference::max_diff(apply_sqrt_not(plus), plus);
    return {d1 <= kGateTol && d2 <= kGateTol, fmt("NOT %.3g, SQRT_NOT %.3g", d1, d2)};
}

Outcome performance() {
    constexpr size_t width = 20;
    std::mt19937_64 rng(909);
    auto psi = random_unit_state(width, rng);
    size_t bytes = psi.dim() * sizeof(Amplitude);
    double worst = 0;
    std::function<Quregister(const Quregister &)> ops[] = {
        [](const Quregister &s) { return apply_not(s); },
        [](const Quregister &s) { return apply_sqrt_not(s); },
        [](const Quregister &s) { return apply_toffoli(s, 10, 9); },
    };
    for (auto &op : ops) {
        auto start = std::chrono::steady_clock::now();
        auto out = op(psi);
        worst = std::max(worst, seconds_since(start));
        if (out.dim() != psi.dim()) {
            return {false, "width changed"};
        }
    }
    return {worst < kKernelSeconds && bytes < kStateBytesLimit,
            fmt("slowest op %.2f ms, state %.0f MiB", worst * 1000, bytes / double(1 << 20))};
}

Outcome parser_round_trip() {
    std::mt19937_64 rng(1010);
    int failures = 0;
    for (int i = 0; i < 1000; i++) {
        auto f = reference::random_formula(rng, 8);
        failures += !(parse(format(f)) == f);
    }
    using F = Formula;
    auto p = F::atom("p"), q = F::atom("q"), r = F::atom("r");
    bool examples = parse("not (p and q)") == F::neg(F::conj(p, q)) &&
                    parse("snot snot p") == F::sqrt_neg(F::sqrt_neg(p)) &&
                    parse("p and q or r") == F::disj(F::conj(p, q), r);
    return {failures == 0 && examples, fmt("%.0f/1000 round-trip failures", failures)};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"gate identities", gate_identities},
        {"toffoli truth table", toffoli_truth_table},
        {"prob identities", prob_identities},
        {"non-truth-functionality witness", non_truth_functional},
        {"failing-law witnesses", failing_witnesses},
        {"holding-law suite", holding_suite},
        {"oracle equivalence", oracle_equivalence},
        {"fixed points", fixed_points},
        {"kernel performance", performance},
        {"parser round-trip", parser_round_trip},
    };
    int failed = 0;
    int index = 1;
    for (const auto &c : criteria) {
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2d %s: %s\n", outcome.ok ? "PASS" : "FAIL", index++, c.name, outcome.detail.c_str());
        failed += !outcome.ok;
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
