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

#include "hidenorm/darwinism.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hidenorm/errors.h"

namespace hidenorm {

namespace {

void check_dims(std::int64_t d_a, std::int64_t d_r) {
    if (d_a < 2) {
        throw DomainError("d_a must be at least 2, got " + std::to_string(d_a));
    }
    if (d_r < 1) {
        throw DomainError("d_r must be at least 1, got " + std::to_string(d_r));
    }
}

}  // namespace

double omega_new(std::int64_t d_a, std::int64_t d_r) {
    check_dims(d_a, d_r);
    const double observers = 2.0 * static_cast<double>(d_r) - 1.0;
    if (d_a == 2) {
        return std::min(4.0, observers);
    }
    return std::min(2.0 * std::sqrt(2.0) * static_cast<double>(d_a), observers);
}

double omega_ranard(std::int64_t d_a, std::int64_t d_r) {
    check_dims(d_a, d_r);
    const double a = static_cast<double>(d_a);
    const double r = static_cast<double>(d_r);
    return std::min({a * a, 4.0 * std::pow(a, 1.5), 4.0 * std::pow(r, 1.5), std::sqrt(153.0 * a * r), 2.0 * r - 1.0});
}

double diamond_bound_rhs(const DarwinismParams &params) {
    if (params.r_size < 1 || params.q_size < 1) {
        throw DomainError("subset sizes |R| and |Q| must be positive");
    }
    const double a = static_cast<double>(params.d_a);
    const double w = omega_new(params.d_a, params.d_r);
    return a * w *
           std::sqrt(2.0 * std::log(a) * static_cast<double>(params.r_size) / static_cast<double>(params.q_size));
}

std::vector<CoefficientRow> coefficient_sweep(
    std::int64_t d_a_min, std::int64_t d_a_max, std::int64_t d_r_min, std::int64_t d_r_max) {
    std::vector<CoefficientRow> rows;
    if (d_a_min > d_a_max || d_r_min > d_r_max) {
        return rows;
    }
    check_dims(d_a_min, d_r_min);
    for (std::int64_t a = d_a_min; a <= d_a_max; a++) {
        for (std::int64_t r = d_r_min; r <= d_r_max; r++) {
            double w_new = omega_new(a, r);
            double w_old = omega_ranard(a, r);
            rows.push_back({a, r, w_new, w_old, w_old / w_new});
        }
    }
    return rows;
}

}  // namespace hidenorm
