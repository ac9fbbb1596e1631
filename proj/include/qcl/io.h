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

#ifndef QCL_IO_H
#define QCL_IO_H

#include <string>
#include <string_view>

#include "json.hpp"
#include "qcl/quregister.h"
#include "qcl/semantics.h"

namespace qcl {

/// Unit-norm tolerance applied to qubits read from realization files.
inline constexpr double kFileUnitTolerance = 1e-8;

/// {"n": int, "amps": [[re, im], ...]}.
nlohmann::json quregister_to_json(const Quregister &psi);
/// Throws InputError on a malformed document.
Quregister quregister_from_json(const nlohmann::json &doc);

std::string serialize(const Quregister &psi);
Quregister deserialize(std::string_view text);

/// {"atom": {"a0": [re, im], "a1": [re, im]}, ...}.
nlohmann::json realization_to_json(const Realization &r);

/// Each qubit must be unit within kFileUnitTolerance; accepted qubits are
/// rescaled to unit norm so they pass the tighter internal check.
/// Throws InputError.
Realization realization_from_json(const nlohmann::json &doc);

Realization load_realization_file(const std::string &path);

}  // namespace qcl

#endif
