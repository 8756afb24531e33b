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

#ifndef HIDENORM_DARWINISM_H
#define HIDENORM_DARWINISM_H

#include <cstdint>
#include <vector>

namespace hidenorm {

// Dimensional coefficients in the objectivity bound for a channel from A to many
// observers. Only the coefficient arithmetic lives here; no channel is simulated.

struct DarwinismParams {
    std::int64_t d_a = 2;     // observed system, >= 2
    std::int64_t d_r = 1;     // observer fragment R, >= 1
    std::int64_t r_size = 1;  // |R|
    std::int64_t q_size = 1;  // |Q|, excluded observers
};

/// min(4, 2 d_r - 1) for d_a = 2, min(2 sqrt(2) d_a, 2 d_r - 1) otherwise.
double omega_new(std::int64_t d_a, std::int64_t d_r);

/// min(d_a^2, 4 d_a^{3/2}, 4 d_r^{3/2}, sqrt(153 d_a d_r), 2 d_r - 1).
double omega_ranard(std::int64_t d_a, std::int64_t d_r);

/// d_a * omega_new(d_a, d_r) * sqrt(2 ln(d_a) |R| / |Q|).
double diamond_bound_rhs(const DarwinismParams &params);

struct CoefficientRow {
    std::int64_t d_a;
    std::int64_t d_r;
    double omega_new;
    double omega_ranard;
    double improvement_factor;  // omega_ranard / omega_new
};

/// Row-major over [d_a_min, d_a_max] x [d_r_min, d_r_max]; an empty range (min > max)
/// gives no rows.
std::vector<CoefficientRow> coefficient_sweep(
    std::int64_t d_a_min, std::int64_t d_a_max, std::int64_t d_r_min, std::int64_t d_r_max);

}  // namespace hidenorm

#endif
