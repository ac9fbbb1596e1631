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

#include <stdexcept>
#include <utility>
#include <vector>

#include "qcl/error.h"

namespace qcl {

size_t GateSpec::width() const {
    return kind == GateKind::Toffoli ? n + m + 1 : n;
}

std::string GateSpec::str() const {
    switch (kind) {
        case GateKind::Not:
            return "NOT(n=" + std::to_string(n) + ")";
        case GateKind::SqrtNot:
            return "SQRT_NOT(n=" + std::to_string(n) + ")";
        case GateKind::Toffoli:
            return "TOFFOLI(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
    }
    return "?";
}

void GateSpec::validate() const {
    if (n == 0) {
        throw std::invalid_argument("gate arity n must be positive");
    }
    if (kind == GateKind::Toffoli && m == 0) {
        throw std::invalid_argument("toffoli arity m must be positive");
    }
}

namespace kernels {

void not_inplace(std::span<Amplitude> amps) {
    for (size_t j = 0; j < amps.size(); j += 2) {
        std::swap(amps[j], amps[j + 1]);
    }
}

void sqrt_not_inplace(std::span<Amplitude> amps) {
    const Amplitude p{0.5, 0.5};
    const Amplitude q{0.5, -0.5};
    for (size_t j = 0; j < amps.size(); j += 2) {
        Amplitude c0 = amps[j];
        Amplitude c1 = amps[j + 1];
        amps[j] = p * c0 + q * c1;
        amps[j + 1] = q * c0 + p * c1;
    }
}

void toffoli_inplace(std::span<Amplitude> amps, size_t n, size_t m) {
    size_t width = n + m + 1;
    // Qubit k (1-based from the left) lives at bit width - k.
    size_t controls = (size_t{1} << (width - n)) | (size_t{1} << (width - n - m));
    for (size_t j = 0; j < amps.size(); j += 2) {
        if ((j & controls) == controls) {
            std::swap(amps[j], amps[j + 1]);
        }
    }
}

}  // namespace kernels

namespace {

template <typename Kernel>
Quregister transformed(const Quregister &psi, Kernel kernel) {
    auto src = psi.amplitudes();
    std::vector<Amplitude> out(src.begin(), src.end());
    kernel(std::span<Amplitude>(out));
    return Quregister(psi.n_qubits(), std::move(out));
}

}  // namespace

Quregister apply_not(const Quregister &psi) {
    require_unit(psi, "NOT");
    return transformed(psi, kernels::not_inplace);
}

Quregister apply_sqrt_not(const Quregister &psi) {
    require_unit(psi, "SQRT_NOT");
    return transformed(psi, kernels::sqrt_not_inplace);
}

Quregister apply_toffoli(const Quregister &psi, size_t n, size_t m) {
    GateSpec::toffoli(n, m).validate();
    if (psi.n_qubits() != n + m + 1) {
        throw std::invalid_argument("TOFFOLI(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ") needs " +
                                    std::to_string(n + m + 1) + " qubits, got " + std::to_string(psi.n_qubits()));
    }
    require_unit(psi, "TOFFOLI");
    return transformed(psi, [n, m](std::span<Amplitude> a) { kernels::toffoli_inplace(a, n, m); });
}

Quregister and_gate(const Quregister &phi, const Quregister &psi) {
    require_unit(phi, "AND");
    require_unit(psi, "AND");
    size_t n = phi.n_qubits();
    size_t m = psi.n_qubits();
    if (n + m + 1 > kMaxQubits) {
        throw ResourceLimit("AND result of " + std::to_string(n + m + 1) + " qubits exceeds the limit");
    }
    // phi (x) psi (x) |0> puts phi_j psi_k at index 2 * (j * 2^m + k).
    std::vector<Amplitude> out(size_t{1} << (n + m + 1));
    for (size_t j = 0; j < phi.dim(); j++) {
        for (size_t k = 0; k < psi.dim(); k++) {
            out[((j << m) | k) << 1] = phi[j] * psi[k];
        }
    }
    kernels::toffoli_inplace(out, n, m);
    return Quregister(n + m + 1, std::move(out));
}

Quregister or_gate(const Quregister &phi, const Quregister &psi) {
    return apply_not(and_gate(apply_not(phi), apply_not(psi)));
}

Quregister apply_gate(const GateSpec &spec, const Quregister &psi) {
    spec.validate();
    if (psi.n_qubits() != spec.width()) {
        throw std::invalid_argument(spec.str() + " needs " + std::to_string(spec.width()) + " qubits, got " +
                                    std::to_string(psi.n_qubits()));
    }
    switch (spec.kind) {
        case GateKind::Not:
            return apply_not(psi);
        case GateKind::SqrtNot:
            return apply_sqrt_not(psi);
        case GateKind::Toffoli:
            return apply_toffoli(psi, spec.n, spec.m);
    }
    throw std::invalid_argument("unknown gate kind");
}

}  // namespace qcl
