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

#include "qcl/gates.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qcl/error.h"
#include "qcl/random.h"
#include "support/oracle.h"

using namespace qcl;
using qcl::reference::max_diff;

namespace {

const double kHalfRoot2 = std::sqrt(2.0) / 2;

Quregister plus_state() {
    return Quregister::qubit(kHalfRoot2, kHalfRoot2);
}

}  // namespace

TEST(gates, not_examples) {
    ASSERT_EQ(apply_not(basis_state({1})), basis_state({0}));
    ASSERT_EQ(apply_not(basis_state({0})), basis_state({1}));
    ASSERT_EQ(apply_not(plus_state()), plus_state());

    Amplitude a{0.6, 0}, b{0, 0.8};
    auto psi = Quregister(2, {a, 0, 0, b});  // a|00> + b|11>
    ASSERT_EQ(apply_not(psi), Quregister(2, {0, a, b, 0}));
}

TEST(gates, not_rejects_non_unit) {
    ASSERT_THROW(apply_not(Quregister::qubit(0.5, 0)), InvalidState);
    ASSERT_THROW(apply_sqrt_not(Quregister::qubit(2, 0)), InvalidState);
}

TEST(gates, sqrt_not_examples) {
    auto out = apply_sqrt_not(basis_state({0}));
    ASSERT_EQ(out, Quregister::qubit({0.5, 0.5}, {0.5, -0.5}));
    out = apply_sqrt_not(basis_state({1}));
    ASSERT_EQ(out, Quregister::qubit({0.5, -0.5}, {0.5, 0.5}));
    ASSERT_LE(max_diff(apply_sqrt_not(plus_state()), plus_state()), 1e-15);
}

TEST(gates, sqrt_not_fixes_phased_plus_state) {
    for (double theta : {0.0, 0.4, 1.3, 2.9, 5.5}) {
        auto psi = plus_state().scaled(std::polar(1.0, theta));
        ASSERT_LE(max_diff(apply_sqrt_not(psi), psi), 1e-15);
    }
}

TEST(gates, sqrt_not_squared_is_not) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; trial++) {
        auto psi = random_unit_state(1 + trial % 7, rng);
        ASSERT_LE(max_diff(apply_sqrt_not(apply_sqrt_not(psi)), apply_not(psi)), 1e-12);
    }
}

TEST(gates, not_is_an_exact_involution) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; trial++) {
        auto psi = random_unit_state(1 + trial % 7, rng);
        ASSERT_EQ(apply_not(apply_not(psi)), psi);
    }
}

TEST(gates, toffoli_truth_table) {
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            for (int z = 0; z < 2; z++) {
                int expected_z = (std::min(x, y) + z) % 2;
                ASSERT_EQ(apply_toffoli(basis_state({x, y, z}), 1, 1), basis_state({x, y, expected_z}))
                    << x << y << z;
            }
        }
    }
}

TEST(gates, toffoli_uses_last_qubit_of_each_factor) {
    // n = 2, m = 1: controls are qubits 2 and 3, target is qubit 4.
    ASSERT_EQ(apply_toffoli(basis_state({0, 1, 1, 0}), 2, 1), basis_state({0, 1, 1, 1}));
    ASSERT_EQ(apply_toffoli(basis_state({1, 0, 1, 0}), 2, 1), basis_state({1, 0, 1, 0}));
    // n = 1, m = 2: controls are qubits 1 and 3.
    ASSERT_EQ(apply_toffoli(basis_state({1, 0, 1, 1}), 1, 2), basis_state({1, 0, 1, 0}));
    ASSERT_EQ(apply_toffoli(basis_state({1, 1, 0, 0}), 1, 2), basis_state({1, 1, 0, 0}));
}

TEST(gates, toffoli_width_mismatch) {
    ASSERT_THROW(apply_toffoli(basis_state({1, 1}), 1, 1), std::invalid_argument);
    ASSERT_THROW(apply_toffoli(basis_state({1, 1, 1}), 0, 2), std::invalid_argument);
}

TEST(gates, toffoli_matches_dense_oracle) {
    std::mt19937_64 rng(3);
    auto matrix = dense::matrix_for(GateSpec::toffoli(2, 1));
    for (int trial = 0; trial < 100; trial++) {
        auto psi = random_unit_state(4, rng);
        ASSERT_LE(max_diff(apply_toffoli(psi, 2, 1), dense::apply_dense(matrix, psi)), 1e-12);
    }
}

TEST(gates, and_truth_table) {
    ASSERT_EQ(and_gate(basis_state({1}), basis_state({1})), basis_state({1, 1, 1}));
    ASSERT_EQ(and_gate(basis_state({1}), basis_state({0})), basis_state({1, 0, 0}));
    ASSERT_EQ(and_gate(basis_state({0}), basis_state({1})), basis_state({0, 1, 0}));
    ASSERT_EQ(and_gate(basis_state({0}), basis_state({0})), basis_state({0, 0, 0}));
}

TEST(gates, and_on_superpositions) {
    Amplitude a0{0.6, 0}, a1{0, 0.8}, b0{std::sqrt(0.5), 0}, b1{0, -std::sqrt(0.5)};
    auto out = and_gate(Quregister::qubit(a0, a1), Quregister::qubit(b0, b1));
    // a1b1|1,1,1> + a1b0|1,0,0> + a0b1|0,1,0> + a0b0|0,0,0>.
    std::vector<Amplitude> expected(8);
    expected[0b111] = a1 * b1;
    expected[0b100] = a1 * b0;
    expected[0b010] = a0 * b1;
    expected[0b000] = a0 * b0;
    ASSERT_LE(max_diff(out, Quregister(3, expected)), 1e-15);
}

TEST(gates, and_equals_composed_definition) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; trial++) {
        auto phi = random_unit_state(1 + trial % 3, rng);
        auto psi = random_unit_state(1 + (trial / 3) % 3, rng);
        auto composed = apply_toffoli(tensor(tensor(phi, psi), basis_state({0})), phi.n_qubits(), psi.n_qubits());
        ASSERT_EQ(and_gate(phi, psi), composed);
    }
}

TEST(gates, or_on_superpositions) {
    Amplitude a0{0.6, 0}, a1{0, 0.8}, b0{0.28, 0}, b1{0.96, 0};
    auto out = or_gate(Quregister::qubit(a0, a1), Quregister::qubit(b0, b1));
    std::vector<Amplitude> expected(8);
    // NOT(T(NOT phi (x) NOT psi (x) |0>)) expanded by hand.
    expected[0b001] = a1 * b1;
    expected[0b011] = a1 * b0;
    expected[0b101] = a0 * b1;
    expected[0b110] = a0 * b0;
    ASSERT_LE(max_diff(out, Quregister(3, expected)), 1e-15);
    ASSERT_EQ(or_gate(basis_state({0}), basis_state({0})), basis_state({1, 1, 0}));
}

TEST(gates, prob_rules) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; trial++) {
        auto psi = random_unit_state(1 + trial % 3, rng);
        auto phi = random_unit_state(1 + (trial / 3) % 3, rng);
        double p = prob(psi);
        double q = prob(phi);
        ASSERT_NEAR(prob(and_gate(psi, phi)), p * q, 1e-9);
        ASSERT_NEAR(prob(apply_not(psi)), 1 - p, 1e-9);
        ASSERT_NEAR(prob(or_gate(psi, phi)), p + q - p * q, 1e-9);
        ASSERT_NEAR(prob(apply_sqrt_not(and_gate(psi, phi))), 0.5, 1e-9);
    }
}

TEST(gates, sqrt_not_prob_formulas) {
    const Amplitude p{0.5, 0.5};   // (1+i)/2
    const Amplitude q{0.5, -0.5};  // (1-i)/2
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 300; trial++) {
        auto psi = random_unit_state(1 + trial % 5, rng);
        double direct_sqrt = 0;
        double direct_swapped = 0;
        for (size_t j = 1; j < psi.dim(); j += 2) {
            direct_sqrt += std::norm(q * psi[j - 1] + p * psi[j]);
            direct_swapped += std::norm(p * psi[j - 1] + q * psi[j]);
        }
        ASSERT_NEAR(prob(apply_sqrt_not(psi)), direct_sqrt, 1e-9);
        ASSERT_NEAR(prob(apply_sqrt_not(apply_not(psi))), direct_swapped, 1e-9);
        ASSERT_NEAR(prob(apply_not(apply_sqrt_not(psi))), direct_swapped, 1e-9);
    }
}

TEST(gates, commutation) {
    std::mt19937_64 rng(7);
    for (size_t n = 1; n <= 2; n++) {
        for (size_t m = 1; m <= 2; m++) {
            for (int trial = 0; trial < 50; trial++) {
                auto psi = random_unit_state(n + m + 1, rng);
                ASSERT_LE(max_diff(apply_toffoli(apply_sqrt_not(psi), n, m), apply_sqrt_not(apply_toffoli(psi, n, m))),
                          1e-12);
            }
        }
    }
    for (int trial = 0; trial < 100; trial++) {
        auto psi = random_unit_state(1 + trial % 6, rng);
        ASSERT_LE(max_diff(apply_sqrt_not(apply_not(psi)), apply_not(apply_sqrt_not(psi))), 1e-12);
    }
}

TEST(gates, unitarity) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; trial++) {
        auto psi = random_unit_state(3 + trial % 4, rng);
        size_t w = psi.n_qubits();
        ASSERT_NEAR(norm(apply_not(psi)), 1.0, 1e-12);
        ASSERT_NEAR(norm(apply_sqrt_not(psi)), 1.0, 1e-12);
        ASSERT_NEAR(norm(apply_toffoli(psi, 1, w - 2)), 1.0, 1e-12);
        auto phi = random_unit_state(1 + trial % 2, rng);
        ASSERT_NEAR(norm(and_gate(psi, phi)), 1.0, 1e-12);
        ASSERT_NEAR(norm(or_gate(psi, phi)), 1.0, 1e-12);
    }
}

TEST(gates, non_truth_functionality_witness) {
    auto psi = plus_state();
    auto phi = Quregister::qubit(kHalfRoot2, kHalfRoot2 * Amplitude(kHalfRoot2, kHalfRoot2));
    ASSERT_NEAR(prob(psi), 0.5, 1e-12);
    ASSERT_NEAR(prob(phi), 0.5, 1e-12);
    ASSERT_NEAR(prob(apply_sqrt_not(psi)), 0.5, 1e-12);
    double expected = 0.125 + std::pow(0.5 - 1 / (2 * std::sqrt(2.0)), 2);
    ASSERT_NEAR(prob(apply_sqrt_not(phi)), expected, 1e-12);
    ASSERT_NEAR(prob(apply_sqrt_not(phi)), 0.146447, 1e-6);
}

TEST(gates, apply_gate_dispatch) {
    auto psi = basis_state({1, 1, 0});
    ASSERT_EQ(apply_gate(GateSpec::toffoli(1, 1), psi), basis_state({1, 1, 1}));
    ASSERT_EQ(apply_gate(GateSpec::not_gate(3), psi), basis_state({1, 1, 1}));
    ASSERT_THROW(apply_gate(GateSpec::not_gate(2), psi), std::invalid_argument);
    ASSERT_EQ(GateSpec::toffoli(2, 1).width(), 4u);
    ASSERT_EQ(GateSpec::toffoli(2, 1).str(), "TOFFOLI(n=2,m=1)");
}

TEST(gates, inplace_kernels_match) {
    std::mt19937_64 rng(9);
    auto psi = random_unit_state(5, rng);
    std::vector<Amplitude> buf(psi.amplitudes().begin(), psi.amplitudes().end());
    kernels::sqrt_not_inplace(buf);
    ASSERT_EQ(Quregister(5, buf), apply_sqrt_not(psi));
    kernels::toffoli_inplace(buf, 2, 2);
    ASSERT_EQ(Quregister(5, buf), apply_toffoli(apply_sqrt_not(psi), 2, 2));
}
