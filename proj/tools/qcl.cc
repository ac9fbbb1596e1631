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

// Command-line front end.
//
// Exit codes: 0 success, 1 an UNEXPECTED law verdict (or a refuted check /
// failed cross-check), 2 usage or formula syntax error, 3 input file error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcl/error.h"
#include "qcl/io.h"
#include "qcl/laws.h"
#include "qcl/semantics.h"
#include "qcl/syntax.h"
#include "qcl/xcheck.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

std::string bit_label(size_t index, size_t width) {
    std::string s = "|";
    for (size_t k = 0; k < width; k++) {
        if (k) {
            s += ',';
        }
        s += ((index >> (width - 1 - k)) & 1) ? '1' : '0';
    }
    return s + ">";
}

int cmd_prob(const std::string &formula, const std::string &real_path) {
    auto f = qcl::parse(formula);
    auto r = qcl::load_realization_file(real_path);
    std::printf("%.12g\n", qcl::prob_of(f, r));
    return kExitOk;
}

int cmd_eval(const std::string &formula, const std::string &real_path, bool amps) {
    auto f = qcl::parse(formula);
    auto r = qcl::load_realization_file(real_path);
    auto psi = qcl::evaluate(f, r);
    std::printf("width %zu\n", psi.n_qubits());
    if (amps) {
        for (size_t j = 0; j < psi.dim(); j++) {
            std::printf("%zu %s %.12g %.12g\n", j, bit_label(j, psi.n_qubits()).c_str(), psi[j].real(),
                        psi[j].imag());
        }
    }
    return kExitOk;
}

int cmd_check(const std::string &left, const std::string &right, const std::string &real_path, size_t budget,
              uint64_t seed) {
    auto a = qcl::parse(left);
    auto b = qcl::parse(right);
    if (!real_path.empty()) {
        auto r = qcl::load_realization_file(real_path);
        auto v = qcl::consequence_at(a, b, r);
        std::printf("%s at realization: Prob(left)=%.12g Prob(right)=%.12g margin=%.12g\n",
                    v.holds_at_sample ? "HOLDS" : "FAILS", v.prob_left, v.prob_right, v.margin);
        return v.holds_at_sample ? kExitOk : kExitUnexpected;
    }
    qcl::SearchOptions options;
    options.budget = budget;
    options.seed = seed;
    auto result = qcl::search(qcl::Claim{a, b}, options);
    if (!result.counterexample) {
        std::printf("UNREFUTED after %zu realizations (max margin %.6g)\n", result.evaluated, result.max_margin);
        return kExitOk;
    }
    const auto &c = *result.counterexample;
    std::printf("REFUTED (%s witness, sample %zu): Prob(left)=%.12g Prob(right)=%.12g margin=%.12g\n",
                qcl::witness_origin_name(c.origin), c.sample_index, c.prob_left, c.prob_right, c.margin);
    std::printf("%s\n", qcl::realization_to_json(c.realization).dump().c_str());
    return kExitUnexpected;
}

int cmd_laws(size_t budget, uint64_t seed, bool json, bool timing) {
    auto report = qcl::run_suite(budget, seed);
    if (json) {
        std::cout << qcl::suite_to_json(report, timing).dump(2) << "\n";
    } else {
        std::cout << qcl::suite_to_text(report);
    }
    return report.pass ? kExitOk : kExitUnexpected;
}

int cmd_xcheck(size_t max_width, size_t trials, uint64_t seed, bool json) {
    auto report = qcl::run_gate_xcheck(max_width, trials, seed);
    if (json) {
        std::cout << qcl::xcheck_to_json(report).dump(2) << "\n";
    } else {
        std::cout << qcl::xcheck_to_text(report);
    }
    return report.pass ? kExitOk : kExitUnexpected;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum computational logic: probability values, gate checks and law search"};
    app.require_subcommand(1);

    std::string formula;
    std::string left;
    std::string right;
    std::string real_path;
    bool amps = false;
    bool json = false;
    bool timing = false;
    size_t budget = qcl::kDefaultBudget;
    uint64_t seed = 0;
    size_t max_width = 8;
    size_t trials = 200;

    auto *prob = app.add_subcommand("prob", "Print Prob(formula) at a realization");
    prob->add_option("formula", formula, "Formula text")->required();
    prob->add_option("--real", real_path, "Realization JSON file")->required();

    auto *eval = app.add_subcommand("eval", "Print the register a realization assigns to a formula");
    eval->add_option("formula", formula, "Formula text")->required();
    eval->add_option("--real", real_path, "Realization JSON file")->required();
    eval->add_flag("--amps", amps, "Print every amplitude");

    auto *check = app.add_subcommand("check", "Check left |= right at a realization or by counterexample search");
    check->add_option("left", left, "Premise formula")->required();
    check->add_option("right", right, "Conclusion formula")->required();
    auto *check_real = check->add_option("--real", real_path, "Realization JSON file");
    auto *check_budget = check->add_option("--budget", budget, "Random samples")->check(CLI::PositiveNumber);
    auto *check_seed = check->add_option("--seed", seed, "Search seed");
    check_real->excludes(check_budget)->excludes(check_seed);

    auto *laws = app.add_subcommand("laws", "Run the builtin law suite");
    laws->add_option("--budget", budget, "Random samples per law")->check(CLI::PositiveNumber);
    laws->add_option("--seed", seed, "Suite seed");
    laws->add_flag("--json", json, "Emit the report as JSON");
    laws->add_flag("--timing", timing, "Include wall times in JSON output");

    auto *xcheck = app.add_subcommand("gate-xcheck", "Compare structured gate kernels with dense matrices");
    xcheck->add_option("--max-width", max_width, "Largest register width")->check(CLI::Range(1, 12));
    xcheck->add_option("--trials", trials, "Random states per gate")->check(CLI::PositiveNumber);
    xcheck->add_option("--seed", seed, "Random seed");
    xcheck->add_flag("--json", json, "Emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (prob->parsed()) {
            return cmd_prob(formula, real_path);
        }
        if (eval->parsed()) {
            return cmd_eval(formula, real_path, amps);
        }
        if (check->parsed()) {
            return cmd_check(left, right, real_path, budget, seed);
        }
        if (laws->parsed()) {
            return cmd_laws(budget, seed, json, timing);
        }
        if (xcheck->parsed()) {
            return cmd_xcheck(max_width, trials, seed, json);
        }
    } catch (const qcl::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qcl::InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const qcl::MissingAssignment &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const qcl::ResourceLimit &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
