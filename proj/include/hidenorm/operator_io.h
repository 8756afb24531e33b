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

#ifndef HIDENORM_OPERATOR_IO_H
#define HIDENORM_OPERATOR_IO_H

#include <functional>
#include <stdexcept>
#include <string>

#include "hidenorm/errors.h"
#include "hidenorm/linalg.h"
#include "hidenorm/xor_games.h"

namespace hidenorm {

/// Problems with an operator or game file. The message names the offending field.
struct FileFormatError : RejectedInputError {
    using RejectedInputError::RejectedInputError;
};

/// A file that cannot be opened for reading or writing.
struct FileAccessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Entrywise asymmetry above which a file-loaded operator is refused as Hermitian.
inline constexpr double kFileAsymmetryLimit = 1e-6;

using WarningSink = std::function<void(const std::string &)>;

/// Reads the operator file schema
///
///     {"n_a": 2, "n_b": 2, "re": [...], "im": [...], "hermitian": true}
///
/// with re/im flat row-major of length (n_a n_b)^2. "hermitian" is optional and defaults
/// to true; Hermitian operators are symmetrized, with a warning through `warn` when the
/// asymmetry exceeds 1e-12 and a FileFormatError above 1e-6.
BipartiteOperator parse_operator_file(const std::string &path, const WarningSink &warn = {});
BipartiteOperator parse_operator_json(const std::string &text, const WarningSink &warn = {});

/// Serializes with shortest round-trip decimal representation.
void write_operator_file(const std::string &path, const BipartiteOperator &op);
std::string operator_to_json(const BipartiteOperator &op);

/// Game files: {"n_a", "n_b", "states": [{"re", "im"}, ...], "signs": [...], "probs": [...]}.
QuantumXorGame parse_game_file(const std::string &path, const WarningSink &warn = {});
QuantumXorGame parse_game_json(const std::string &text, const WarningSink &warn = {});
std::string game_to_json(const QuantumXorGame &game);

}  // namespace hidenorm

#endif
