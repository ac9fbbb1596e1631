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

#ifndef QCL_XCHECK_H
#define QCL_XCHECK_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcl/gates.h"

namespace qcl {

inline constexpr double kXcheckTolerance = 1e-12;

struct XcheckEntry {
    GateSpec spec;
    size_t trials;
    /// max |structured - dense| over all components of all trials.
    double max_deviation;
    /// max |M M^dagger - I|.
    double unitarity_deviation;
};

struct XcheckReport {
    size_t max_width;
    size_t trials;
    uint64_t seed;
    std::vector<XcheckEntry> entries;
    double max_deviation;
    bool pass;
};

/// Compares the structured kernels against dense matrix products on random
/// unit registers: NOT and SQRT_NOT at every width 1..max_width, TOFFOLI at
/// every (n, m) split with n + m + 1 <= max_width.
XcheckReport run_gate_xcheck(size_t max_width, size_t trials, uint64_t seed);

nlohmann::json xcheck_to_json(const XcheckReport &report);
std::string xcheck_to_text(const XcheckReport &report);

}  // namespace qcl

#endif
