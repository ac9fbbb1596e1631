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

#include "qcl/xcheck.h"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qcl/dense_oracle.h"
#include "qcl/laws.h"
#include "qcl/random.h"

namespace qcl {

namespace {

XcheckEntry check_one(const GateSpec &spec, size_t trials, std::mt19937_64 &rng) {
    auto matrix = dense::matrix_for(spec);
    XcheckEntry entry{spec, trials, 0, dense::check_unitary(matrix)};
    for (size_t t = 0; t < trials; t++) {
        auto psi = random_unit_state(spec.width(), rng);
        auto fast = apply_gate(spec, psi);
        auto slow = dense::apply_dense(matrix, psi);
        for (size_t j = 0; j < psi.dim(); j++) {
            entry.max_deviation = std::max(entry.max_deviation, std::abs(fast[j] - slow[j]));
        }
    }
    return entry;
}

}  // namespace

XcheckReport run_gate_xcheck(size_t max_width, size_t trials, uint64_t seed) {
    if (max_width == 0 || max_width > dense::kDefaultMaxWidth) {
        throw std::invalid_argument("max width must be in [1, " + std::to_string(dense::kDefaultMaxWidth) + "]");
    }
    XcheckReport report{max_width, trials, seed, {}, 0, true};
    std::mt19937_64 rng(seed);
    for (size_t w = 1; w <= max_width; w++) {
        report.entries.push_back(check_one(GateSpec::not_gate(w), trials, rng));
        report.entries.push_back(check_one(GateSpec::sqrt_not(w), trials, rng));
        for (size_t n = 1; n + 2 <= w; n++) {
            report.entries.push_back(check_one(GateSpec::toffoli(n, w - 1 - n), trials, rng));
        }
    }
    for (const auto &e : report.entries) {
        report.max_deviation = std::max({report.max_deviation, e.max_deviation, e.unitarity_deviation});
    }
    report.pass = report.max_deviation <= kXcheckTolerance;
    return report;
}

nlohmann::json xcheck_to_json(const XcheckReport &report) {
    using nlohmann::json;
    json entries = json::array();
    for (const auto &e : report.entries) {
        entries.push_back({{"gate", e.spec.str()},
                           {"width", e.spec.width()},
                           {"trials", e.trials},
                           {"max_deviation", e.max_deviation},
                           {"unitarity_deviation", e.unitarity_deviation}});
    }
    return {{"schema", kReportSchema},
            {"engine_version", kEngineVersion},
            {"max_width", report.max_width},
            {"trials", report.trials},
            {"seed", report.seed},
            {"tolerance", kXcheckTolerance},
            {"max_deviation", report.max_deviation},
            {"pass", report.pass},
            {"gates", std::move(entries)}};
}

std::string xcheck_to_text(const XcheckReport &report) {
    std::ostringstream out;
    out << "gate-xcheck  max_width=" << report.max_width << "  trials=" << report.trials << "  seed=" << report.seed
        << "\n";
    char line[256];
    for (const auto &e : report.entries) {
        std::snprintf(line, sizeof(line), "  %-20s width=%-2zu max_dev=%.3e  unitarity=%.3e\n", e.spec.str().c_str(),
                      e.spec.width(), e.max_deviation, e.unitarity_deviation);
        out << line;
    }
    std::snprintf(line, sizeof(line), "%s: max deviation %.3e (tolerance %.0e)\n", report.pass ? "PASS" : "FAIL",
                  report.max_deviation, kXcheckTolerance);
    out << line;
    return out.str();
}

}  // namespace qcl
