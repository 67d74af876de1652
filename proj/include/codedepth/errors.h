// Copyright 2026 The codedepth Authors
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

#ifndef CODEDEPTH_ERRORS_H
#define CODEDEPTH_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codedepth {

/// Operands act on different numbers of qubits.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A constructor or operation received an out-of-range parameter.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The state representation cannot perform the requested operation
/// (e.g. a non-Clifford gate on a stabilizer tableau).
struct BackendError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A dense computation would exceed the configured qubit limit.
struct DenseLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A stabilizer/CSS construction violated a structural invariant
/// (non-commuting checks, -I in the group, ...).
struct ConstructionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed text or JSON input. Carries a 1-based line and column.
struct ParseError : std::runtime_error {
    size_t line;
    size_t column;
    ParseError(const std::string &message, size_t line, size_t column)
        : std::runtime_error(
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line(line),
          column(column) {
    }
};

}  // namespace codedepth

#endif
