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

#ifndef QCL_ERROR_H
#define QCL_ERROR_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcl {

// Malformed arguments (empty bit strings, dimension mismatches) are reported
// with std::invalid_argument. The types below cover the remaining failure
// classes so callers can map them to distinct exit codes.

/// A vector whose norm is outside what the operation admits.
struct InvalidState : std::domain_error {
    using std::domain_error::domain_error;
};

/// A request that would exceed a configured size cap.
struct ResourceLimit : std::length_error {
    using std::length_error::length_error;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string &message, size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position(position) {
    }
    size_t position;
};

/// An atom that appears in a formula has no qubit (or probability) assigned.
struct MissingAssignment : std::out_of_range {
    explicit MissingAssignment(const std::string &atom_name)
        : std::out_of_range("no assignment for atom '" + atom_name + "'"), atom(atom_name) {
    }
    std::string atom;
};

/// Raised by truth-functional evaluation when the formula contains `snot`.
struct NotTruthFunctional : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unreadable or malformed input files (realizations, serialized registers).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcl

#endif
