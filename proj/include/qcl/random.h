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

#ifndef QCL_RANDOM_H
#define QCL_RANDOM_H

#include <cstdint>
#include <random>
#include <string_view>

#include "qcl/quregister.h"

namespace qcl {

// std::mt19937_64's output sequence is fixed by the standard, but the
// <random> distributions are not. Everything below converts raw engine
// output by hand so seeded runs agree across standard libraries.

/// Uniform double in [0, 1) built from the top 53 bits.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 finalizer; used to derive independent per-sample seeds.
uint64_t mix64(uint64_t x);

/// FNV-1a over the bytes of `text`.
uint64_t hash_string(std::string_view text);

/// Unit vector with i.i.d. complex Gaussian amplitudes, normalized.
Quregister random_unit_state(size_t n_qubits, std::mt19937_64 &rng);

}  // namespace qcl

#endif
