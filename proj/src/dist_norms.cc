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

#include "hidenorm/dist_norms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hidenorm/errors.h"
#include "hidenorm/states.h"

namespace hidenorm {

namespace {

Subsystem other_side(Subsystem s) {
    return s == Subsystem::A ? Subsystem::B : Subsystem::A;
}

ComplexMatrix best_response(const ComplexMatrix &m, Field field) {
    if (field == Field::hermitian) {
        return hermitian_sign(HermitianMatrix(m)).matrix();
    }
    return optimal_contraction_complex(m);
}

void require_field_compatible(const BipartiteOperator &z, Field field, const char *what) {
    if (field == Field::hermitian && !z.is_hermitian()) {
        throw ContractError(std::string(what) + ": Hermitian field requires a Hermitian operator");
    }
}

NormEstimate zero_estimate(const BipartiteOperator &z) {
    NormEstimate e;
    e.value = 0.0;
    e.iterations_used = 1;
    e.converged = true;
    e.best_f = ComplexMatrix::Identity(z.n_a(), z.n_a());
    e.best_g = ComplexMatrix::Identity(z.n_b(), z.n_b());
    e.history = {0.0};
    return e;
}

// One local factor is C^1: the product ball is the full ball of the other factor.
NormEstimate trivial_factor_estimate(const BipartiteOperator &z, Field field) {
    NormEstimate e;
    ComplexMatrix w = best_response(z.matrix(), field);
    e.value = (w * z.matrix()).trace().real();
    e.iterations_used = 1;
    e.converged = true;
    if (z.n_a() == 1) {
        e.best_f = ComplexMatrix::Identity(1, 1);
        e.best_g = std::move(w);
    } else {
        e.best_f = std::move(w);
        e.best_g = ComplexMatrix::Identity(1, 1);
    }
    e.history = {e.value};
    return e;
}

}  // namespace

void SeeSawConfig::validate() const {
    if (restarts <= 0) {
        throw ContractError("SeeSawConfig: restarts must be positive");
    }
    if (max_iters <= 0) {
        throw ContractError("SeeSawConfig: max_iters must be positive");
    }
    if (!(rel_tol > 0.0)) {
        throw ContractError("SeeSawConfig: rel_tol must be positive");
    }
}

double hiding_bound(std::size_t n_a, std::size_t n_b) {
    return 2.0 * std::sqrt(2.0) * static_cast<double>(std::min(n_a, n_b));
}

NormEstimate seesaw_run(
    const BipartiteOperator &z, const ComplexMatrix &start, const SeeSawConfig &config, Subsystem start_side) {
    config.validate();
    require_field_compatible(z, config.field, "seesaw_run");
    const auto n_start = static_cast<Eigen::Index>(z.local_dim(start_side));
    if (start.rows() != n_start || start.cols() != n_start) {
        throw DimensionError("seesaw_run: initial contraction has the wrong dimension for its subsystem");
    }
    if (operator_norm(start) > 1.0 + 1e-12) {
        throw ContractError("seesaw_run: initial contraction has operator norm above 1");
    }
    if (config.field == Field::hermitian && (start - start.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw ContractError("seesaw_run: Hermitian field requires a Hermitian initial contraction");
    }
    if (z.is_zero()) {
        return zero_estimate(z);
    }

    NormEstimate e;
    ComplexMatrix witness[2];  // indexed by Subsystem
    witness[static_cast<int>(start_side)] = start;
    Subsystem fixed = start_side;
    double previous = std::numeric_limits<double>::quiet_NaN();
    double value = 0.0;
    for (int it = 1; it <= config.max_iters; it++) {
        for (int half = 0; half < 2; half++) {
            Subsystem update = other_side(fixed);
            const ComplexMatrix &w_fixed = witness[static_cast<int>(fixed)];
            ComplexMatrix m = update == Subsystem::A ? contract_b(z, w_fixed) : contract_a(z, w_fixed);
            ComplexMatrix w = best_response(m, config.field);
            value = (w * m).trace().real();
            witness[static_cast<int>(update)] = std::move(w);
            e.history.push_back(value);
            fixed = update;
        }
        e.iterations_used = it;
        if (!std::isnan(previous) && value - previous <= config.rel_tol * std::abs(value)) {
            e.converged = true;
            break;
        }
        previous = value;
    }
    e.value = value;
    e.best_f = std::move(witness[static_cast<int>(Subsystem::A)]);
    e.best_g = std::move(witness[static_cast<int>(Subsystem::B)]);
    return e;
}

ComplexMatrix initial_contraction(std::size_t n, const SeeSawConfig &config, int restart) {
    if (restart == 0) {
        return ComplexMatrix::Identity(n, n);
    }
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(restart)));
    if (config.field == Field::hermitian) {
        return hermitian_sign(gue_hermitian(n, rng)).matrix();
    }
    return haar_unitary(n, rng);
}

NormEstimate epsilon_norm(const BipartiteOperator &z, const SeeSawConfig &config) {
    config.validate();
    require_field_compatible(z, config.field, "epsilon_norm");
    if (z.is_zero()) {
        return zero_estimate(z);
    }
    if (z.n_a() == 1 || z.n_b() == 1) {
        return trivial_factor_estimate(z, config.field);
    }
    // Restarts are independent; the reduction keeps the lowest index among ties so the
    // result does not depend on evaluation order.
    NormEstimate best;
    bool have_best = false;
    for (int r = 0; r < config.restarts; r++) {
        NormEstimate e = seesaw_run(z, initial_contraction(z.n_b(), config, r), config);
        e.restart_index = r;
        if (!have_best || e.value > best.value) {
            best = std::move(e);
            have_best = true;
        }
    }
    return best;
}

NormEstimate lo_norm_lower(const BipartiteOperator &z, const SeeSawConfig &config) {
    return epsilon_norm(z, config.with_field(Field::hermitian));
}

double error_probability(double norm_value) {
    if (!(norm_value >= -1e-9 && norm_value <= 1.0 + 1e-9)) {
        throw DomainError("error_probability: norm value " + std::to_string(norm_value) + " outside [0, 1]");
    }
    double v = std::clamp(norm_value, 0.0, 1.0);
    return (1.0 - v) / 2.0;
}

RatioReport hiding_ratio(const BipartiteOperator &z, const SeeSawConfig &config) {
    if (!z.is_hermitian()) {
        throw ContractError("hiding_ratio: operator must be Hermitian");
    }
    if (z.is_zero()) {
        throw DegenerateInputError("hiding_ratio: zero operator, ratio undefined");
    }
    RatioReport r;
    r.trace_norm = trace_norm(z.hermitian());
    r.eps_estimate = epsilon_norm(z, config.with_field(Field::hermitian));
    r.ratio = r.eps_estimate.value > 0.0 ? r.trace_norm / r.eps_estimate.value
                                         : std::numeric_limits<double>::infinity();
    r.bound = hiding_bound(z.n_a(), z.n_b());
    r.satisfied = r.ratio <= r.bound + kBoundSlack;
    r.margin = r.bound - r.ratio;
    return r;
}

FieldComparison complex_vs_hermitian_check(const BipartiteOperator &z, const SeeSawConfig &config) {
    if (!z.is_hermitian()) {
        throw ContractError("complex_vs_hermitian_check: operator must be Hermitian");
    }
    FieldComparison c;
    c.complex_value = epsilon_norm(z, config.with_field(Field::complex)).value;
    c.hermitian_value = epsilon_norm(z, config.with_field(Field::hermitian)).value;
    c.ratio = c.hermitian_value > 0.0 ? c.complex_value / c.hermitian_value
                                      : std::numeric_limits<double>::quiet_NaN();
    return c;
}

}  // namespace hidenorm
