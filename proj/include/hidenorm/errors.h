// Copyright 2026 The hidenorm Authors
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

#ifndef HIDENORM_ERRORS_H
#define HIDENORM_ERRORS_H

#include <stdexcept>
#include <string>

namespace hidenorm {

/// Shapes that do not fit together (non-square input, mismatched local dimensions, ...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A scalar argument outside the domain of the operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input rejected before any numerical work (NaN/inf entries, schema violations).
struct RejectedInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A structural precondition of the caller was violated (e.g. non-Hermitian operator
/// handed to the Hermitian see-saw, probabilities that do not sum to one).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested quantity is undefined for this input (e.g. a ratio with a zero denominator).
struct DegenerateInputError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace hidenorm

#endif
