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

#ifndef HIDENORM_DIST_NORMS_H
#define HIDENORM_DIST_NORMS_H

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hidenorm/linalg.h"
#include "hidenorm/rng.h"

namespace hidenorm {

/// Which unit ball the local witnesses f, g range over.
enum class Field { hermitian, complex };

struct SeeSawConfig {
    int restarts = 32;
    int max_iters = 500;
    double rel_tol = 1e-10;
    RngSeed seed{};
    Field field = Field::hermitian;

    /// Throws ContractError on non-positive budgets.
    void validate() const;
    SeeSawConfig with_field(Field f) const {
        SeeSawConfig c = *this;
        c.field = f;
        return c;
    }
};

/// A value of the epsilon norm attained by explicit witnesses, hence a lower bound on it.
struct NormEstimate {
    double value = 0.0;
    bool is_lower_bound = true;
    int iterations_used = 0;
    bool converged = false;
    ComplexMatrix best_f;  // on A
    ComplexMatrix best_g;  // on B
    /// Objective after every half-step of the winning run.
    std::vector<double> history;
    int restart_index = 0;
};

/// Bound-check slack for RatioReport::satisfied.
inline constexpr double kBoundSlack = 1e-6;

/// 2 sqrt(2) min(n_a, n_b).
double hiding_bound(std::size_t n_a, std::size_t n_b);

struct RatioReport {
    double trace_norm = 0.0;
    NormEstimate eps_estimate;
    double ratio = 0.0;
    double bound = 0.0;
    bool satisfied = false;
    double margin = 0.0;
};

struct FieldComparison {
    double complex_value = 0.0;
    double hermitian_value = 0.0;
    /// complex_value / hermitian_value; NaN when hermitian_value is 0.
    double ratio = 0.0;
};

/// Alternating maximization of tr((f (x) g) z) over local contractions.
///
/// Starts from `start`, a contraction on `start_side` (B by default, i.e. the usual g0),
/// and alternately replaces the other side's witness by its exact best response: the sign
/// of the contracted operator (Hermitian field) or the adjoint polar factor (complex field).
/// Each half-step can only increase the objective, so `history` is nondecreasing up to
/// rounding. Stops once a full iteration improves the value by less than rel_tol
/// relatively, or after max_iters iterations.
NormEstimate seesaw_run(
    const BipartiteOperator &z, const ComplexMatrix &start, const SeeSawConfig &config,
    Subsystem start_side = Subsystem::B);

/// The starting contractions used by epsilon_norm: identity first, then for restart r the
/// Hermitian sign of a GUE sample (Hermitian field) or a Haar unitary (complex field), drawn
/// from the stream derive_seed(config.seed, r).
ComplexMatrix initial_contraction(std::size_t n, const SeeSawConfig &config, int restart);

/// Multistart see-saw; returns the best run. Exact shortcuts for z = 0 and for a trivial
/// local factor (n_a = 1 or n_b = 1), where the norm is the trace norm.
NormEstimate epsilon_norm(const BipartiteOperator &z, const SeeSawConfig &config);

/// Hermitian-field epsilon norm, a lower bound on the local-operations distinguishability norm.
NormEstimate lo_norm_lower(const BipartiteOperator &z, const SeeSawConfig &config);

/// (1 - norm_value) / 2. Throws DomainError outside [0, 1] by more than 1e-9.
double error_probability(double norm_value);

/// Trace norm vs Hermitian epsilon norm against 2 sqrt(2) min(n_a, n_b).
/// Throws DegenerateInputError for z = 0 and ContractError for non-Hermitian z.
RatioReport hiding_ratio(const BipartiteOperator &z, const SeeSawConfig &config);

/// Complex-field vs Hermitian-field epsilon norm with otherwise identical budgets.
FieldComparison complex_vs_hermitian_check(const BipartiteOperator &z, const SeeSawConfig &config);

}  // namespace hidenorm

#endif
