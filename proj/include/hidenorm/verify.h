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

#ifndef HIDENORM_VERIFY_H
#define HIDENORM_VERIFY_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hidenorm/rng.h"

namespace hidenorm {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    /// Largest observed deviation (always >= 0); the suite passes iff worst <= tolerance.
    double worst = 0.0;
    double tolerance = 0.0;
};

struct VerifyOptions {
    RngSeed seed{};
    int restarts = 50;
    /// Replaces every suite tolerance. Only for exercising the failure path of the harness.
    std::optional<double> forced_tolerance;
};

/// Runs the invariant batteries of every module at desk scale: block identities, trace
/// norm and sign oracles, partial traces, see-saw monotonicity/ordering/homogeneity,
/// swap and local-unitary covariance, the two bound scans, the sqrt(2) field scan, the
/// Werner growth check and the coefficient inequality. Deterministic in the seed.
std::vector<SuiteResult> run_verification(const VerifyOptions &options);

bool all_passed(const std::vector<SuiteResult> &results);

std::string verification_json(const VerifyOptions &options, const std::vector<SuiteResult> &results);

}  // namespace hidenorm

#endif
