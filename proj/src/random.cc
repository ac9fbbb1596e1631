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

#include "qcl/random.h"

#include <cmath>
#include <numbers>
#include <vector>

namespace qcl {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t hash_string(std::string_view text) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

Quregister random_unit_state(size_t n_qubits, std::mt19937_64 &rng) {
    std::vector<Amplitude> amps(size_t{1} << n_qubits);
    double total = 0;
    do {
        total = 0;
        for (auto &a : amps) {
            // Box-Muller.
            double u1 = 1.0 - uniform01(rng);
            double u2 = uniform01(rng);
            double r = std::sqrt(-2.0 * std::log(u1));
            double t = 2.0 * std::numbers::pi * u2;
            a = {r * std::cos(t), r * std::sin(t)};
            total += std::norm(a);
        }
    } while (total == 0);
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : amps) {
        a *= scale;
    }
    return Quregister(n_qubits, std::move(amps));
}

}  // namespace qcl
