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

#ifndef QCL_QUREGISTER_H
#define QCL_QUREGISTER_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qcl {

using Amplitude = std::complex<double>;

/// Admission tolerance on |sum |a_j|^2 - 1| for unit quregisters.
inline constexpr double kUnitTolerance = 1e-10;
/// Absolute tolerance used when comparing probability values.
inline constexpr double kProbTolerance = 1e-9;
/// Largest register the library will allocate (2^30 amplitudes = 16 GiB).
inline constexpr size_t kMaxQubits = 30;

enum class Bit : uint8_t { Zero = 0, One = 1 };

/// A vector in the n-fold tensor product of C^2, stored densely.
///
/// Amplitude index j encodes the basis ket |x_1,...,x_n> with x_1 as the most
/// significant bit, so |0> is (1, 0) and |1> is (0, 1). Values are immutable
/// once constructed; every operation returns a fresh register.
///
/// The class itself does not require unit norm: sub-normalized vectors are
/// legitimate inputs to `prob`. Gate kernels check unit norm on entry.
class Quregister {
   public:
    Quregister(size_t n_qubits, std::vector<Amplitude> amplitudes);

    /// a0|0> + a1|1>.
    static Quregister qubit(Amplitude a0, Amplitude a1);

    size_t n_qubits() const {
        return n_qubits_;
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    const Amplitude &operator[](size_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;
    bool is_unit(double tolerance = kUnitTolerance) const;

    /// Componentwise sum. Both operands must have the same width.
    Quregister operator+(const Quregister &other) const;
    /// Multiplies every amplitude by `factor`.
    Quregister scaled(Amplitude factor) const;

    bool operator==(const Quregister &other) const = default;

    /// Human-readable ket expansion, omitting zero amplitudes.
    std::string str() const;

   private:
    size_t n_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Index sets of the amplitudes attached to basis strings ending in 1
/// (`cplus`, odd indices) and ending in 0 (`cminus`, even indices).
struct CoefficientPartition {
    std::vector<size_t> cplus;
    std::vector<size_t> cminus;
};

CoefficientPartition coefficient_partition(size_t n_qubits);

/// Computational basis vector for the given bit string (x_1 first).
/// Throws std::invalid_argument on an empty sequence.
Quregister basis_state(std::span<const Bit> bits);
Quregister basis_state(std::initializer_list<int> bits);

/// phi (x) psi; the amplitude at j * 2^n_psi + k is a_j * b_k.
Quregister tensor(const Quregister &phi, const Quregister &psi);

/// Sum of |a_j|^2 over odd j. Accepts any vector with squared norm at most
/// 1 + kUnitTolerance; larger vectors raise InvalidState.
double prob(const Quregister &psi);

double norm(const Quregister &psi);

/// <psi|phi>, conjugate-linear in the first argument.
Amplitude inner_product(const Quregister &psi, const Quregister &phi);

/// Throws InvalidState unless `psi` is unit within kUnitTolerance.
void require_unit(const Quregister &psi, const char *operation);

}  // namespace qcl

#endif
