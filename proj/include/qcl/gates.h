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

#ifndef QCL_GATES_H
#define QCL_GATES_H

#include <cstddef>
#include <span>
#include <string>

#include "qcl/quregister.h"

namespace qcl {

enum class GateKind { Not, SqrtNot, Toffoli };

/// A gate instance. NOT and SQRT_NOT act on `n` qubits; TOFFOLI acts on
/// n + m + 1 qubits, controlled by qubits n and n + m (1-based, counted from
/// the left) and targeting the last qubit.
struct GateSpec {
    GateKind kind;
    size_t n;
    size_t m = 0;

    static GateSpec not_gate(size_t width) {
        return {GateKind::Not, width, 0};
    }
    static GateSpec sqrt_not(size_t width) {
        return {GateKind::SqrtNot, width, 0};
    }
    static GateSpec toffoli(size_t n, size_t m) {
        return {GateKind::Toffoli, n, m};
    }

    size_t width() const;
    /// e.g. "NOT(n=3)", "TOFFOLI(n=2,m=1)".
    std::string str() const;
    /// Throws std::invalid_argument for a zero n (or zero m on TOFFOLI).
    void validate() const;

    bool operator==(const GateSpec &) const = default;
};

/// Flips the last qubit: the amplitude at j moves to j ^ 1.
Quregister apply_not(const Quregister &psi);

/// Square root of NOT on the last qubit. Each pair (c0, c1) at (2k, 2k+1)
/// becomes ((1+i)c0 + (1-i)c1) / 2, ((1-i)c0 + (1+i)c1) / 2.
Quregister apply_sqrt_not(const Quregister &psi);

/// T^(n,m,1) on an (n+m+1)-qubit register: the target (last) bit is XORed
/// with the AND of qubits n and n+m.
Quregister apply_toffoli(const Quregister &psi, size_t n, size_t m);

/// T(phi (x) psi (x) |0>) with n = width(phi), m = width(psi).
Quregister and_gate(const Quregister &phi, const Quregister &psi);

/// NOT(AND(NOT phi, NOT psi)).
Quregister or_gate(const Quregister &phi, const Quregister &psi);

/// Dispatches on `spec.kind`; the register width must equal spec.width().
Quregister apply_gate(const GateSpec &spec, const Quregister &psi);

/// In-place kernels over raw amplitude storage. They perform no norm check
/// and produce the same values as the functions above.
namespace kernels {

void not_inplace(std::span<Amplitude> amps);
void sqrt_not_inplace(std::span<Amplitude> amps);
void toffoli_inplace(std::span<Amplitude> amps, size_t n, size_t m);

}  // namespace kernels

}  // namespace qcl

#endif
