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

#include "qcl/quregister.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcl/error.h"

namespace qcl {

Quregister::Quregister(size_t n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ == 0) {
        throw std::invalid_argument("a quregister needs at least one qubit");
    }
    if (n_qubits_ > kMaxQubits) {
        throw ResourceLimit("quregister of " + std::to_string(n_qubits_) + " qubits exceeds the limit of " +
                            std::to_string(kMaxQubits));
    }
    if (amplitudes_.size() != (size_t{1} << n_qubits_)) {
        throw std::invalid_argument("expected " + std::to_string(size_t{1} << n_qubits_) + " amplitudes for " +
                                    std::to_string(n_qubits_) + " qubits, got " +
                                    std::to_string(amplitudes_.size()));
    }
}

Quregister Quregister::qubit(Amplitude a0, Amplitude a1) {
    return Quregister(1, {a0, a1});
}

double Quregister::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

bool Quregister::is_unit(double tolerance) const {
    return std::abs(norm_squared() - 1.0) <= tolerance;
}

Quregister Quregister::operator+(const Quregister &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("cannot add quregisters of different widths");
    }
    std::vector<Amplitude> out(amplitudes_);
    for (size_t j = 0; j < out.size(); j++) {
        out[j] += other.amplitudes_[j];
    }
    return Quregister(n_qubits_, std::move(out));
}

Quregister Quregister::scaled(Amplitude factor) const {
    std::vector<Amplitude> out(amplitudes_);
    for (auto &a : out) {
        a *= factor;
    }
    return Quregister(n_qubits_, std::move(out));
}

std::string Quregister::str() const {
    std::stringstream ss;
    bool first = true;
    for (size_t j = 0; j < amplitudes_.size(); j++) {
        const auto &a = amplitudes_[j];
        if (a == Amplitude{}) {
            continue;
        }
        if (!first) {
            ss << " + ";
        }
        first = false;
        ss << '(' << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i)|";
        for (size_t k = 0; k < n_qubits_; k++) {
            if (k) {
                ss << ',';
            }
            ss << ((j >> (n_qubits_ - 1 - k)) & 1);
        }
        ss << '>';
    }
    if (first) {
        ss << '0';
    }
    return ss.str();
}

CoefficientPartition coefficient_partition(size_t n_qubits) {
    CoefficientPartition result;
    size_t dim = size_t{1} << n_qubits;
    result.cplus.reserve(dim / 2);
    result.cminus.reserve(dim / 2);
    for (size_t j = 0; j < dim; j++) {
        (j & 1 ? result.cplus : result.cminus).push_back(j);
    }
    return result;
}

Quregister basis_state(std::span<const Bit> bits) {
    if (bits.empty()) {
        throw std::invalid_argument("basis_state needs a nonempty bit string");
    }
    if (bits.size() > kMaxQubits) {
        throw ResourceLimit("basis state too wide");
    }
    size_t index = 0;
    for (Bit b : bits) {
        index = (index << 1) | static_cast<size_t>(b);
    }
    std::vector<Amplitude> amps(size_t{1} << bits.size());
    amps[index] = 1;
    return Quregister(bits.size(), std::move(amps));
}

Quregister basis_state(std::initializer_list<int> bits) {
    std::vector<Bit> converted;
    converted.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("bits must be 0 or 1");
        }
        converted.push_back(static_cast<Bit>(b));
    }
    return basis_state(converted);
}

Quregister tensor(const Quregister &phi, const Quregister &psi) {
    size_t width = phi.n_qubits() + psi.n_qubits();
    if (width > kMaxQubits) {
        throw ResourceLimit("tensor product of " + std::to_string(width) + " qubits exceeds the limit");
    }
    std::vector<Amplitude> out(size_t{1} << width);
    size_t inner = psi.dim();
    for (size_t j = 0; j < phi.dim(); j++) {
        const Amplitude a = phi[j];
        Amplitude *row = out.data() + j * inner;
        for (size_t k = 0; k < inner; k++) {
            row[k] = a * psi[k];
        }
    }
    return Quregister(width, std::move(out));
}

double prob(const Quregister &psi) {
    double total = 0;
    double odd = 0;
    auto amps = psi.amplitudes();
    for (size_t j = 0; j < amps.size(); j += 2) {
        total += std::norm(amps[j]);
        double s = std::norm(amps[j + 1]);
        total += s;
        odd += s;
    }
    if (total > 1.0 + kUnitTolerance) {
        throw InvalidState("prob is defined for vectors of norm at most 1 (squared norm " + std::to_string(total) +
                           ")");
    }
    return odd;
}

double norm(const Quregister &psi) {
    return std::sqrt(psi.norm_squared());
}

Amplitude inner_product(const Quregister &psi, const Quregister &phi) {
    if (psi.n_qubits() != phi.n_qubits()) {
        throw std::invalid_argument("inner product of quregisters with different widths");
    }
    Amplitude total{};
    for (size_t j = 0; j < psi.dim(); j++) {
        total += std::conj(psi[j]) * phi[j];
    }
    return total;
}

void require_unit(const Quregister &psi, const char *operation) {
    double n2 = psi.norm_squared();
    if (std::abs(n2 - 1.0) > kUnitTolerance) {
        throw InvalidState(std::string(operation) + " requires a unit quregister (squared norm " +
                           std::to_string(n2) + ")");
    }
}

}  // namespace qcl
