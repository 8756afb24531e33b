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

#ifndef HIDENORM_EXPERIMENTS_H
#define HIDENORM_EXPERIMENTS_H

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hidenorm/dist_norms.h"
#include "hidenorm/linalg.h"
#include "hidenorm/rng.h"
#include "hidenorm/xor_games.h"

namespace hidenorm {

/// Instance families for scans.
///   werner   normalized symmetric vs antisymmetric projectors, p = 1/2 (n_a = n_b)
///   gue      difference of two independent GUE samples
///   induced  p rho - (1 - p) sigma, rho and sigma Hilbert-Schmidt random, p uniform
///   product  x (x) y with x, y GUE
///   density  a single Hilbert-Schmidt random state
enum class Generator { werner, gue, induced, product, density };

std::string to_string(Generator g);
/// Throws ContractError on unknown names.
Generator parse_generator(const std::string &name);

BipartiteOperator generate_operator(Generator g, std::size_t n_a, std::size_t n_b, RngSeed seed);

/// Per-instance seed for (generator, n_a, n_b, sample) under a base seed.
RngSeed instance_seed(RngSeed base, Generator g, std::size_t n_a, std::size_t n_b, std::size_t sample);

/// Random game: `num_states` Hilbert-Schmidt states, uniform probabilities, fair random signs.
QuantumXorGame random_game(std::size_t n_a, std::size_t n_b, std::size_t num_states, RngSeed seed);

/// (U (x) V) z (U (x) V)^dagger.
BipartiteOperator conjugate_local(const BipartiteOperator &z, const ComplexMatrix &u, const ComplexMatrix &v);

/// Bound check that retries violations with a larger restart budget, since the epsilon
/// estimate is only a lower bound.
struct BoundCheck {
    RatioReport report;
    bool initially_violated = false;
    bool escalated = false;
};
BoundCheck check_hiding_bound(const BipartiteOperator &z, const SeeSawConfig &config, int escalated_restarts = 500);

struct ScalingConfig {
    Generator generator = Generator::gue;
    std::size_t n_min = 2;
    std::size_t n_max = 4;
    std::size_t samples = 10;
    /// All (n_a, n_b) in the range instead of the diagonal (n, n).
    bool all_pairs = false;
    RngSeed seed{};
    SeeSawConfig seesaw;

    void validate() const;
};

struct ScalingRow {
    std::uint64_t seed;
    std::size_t n_a;
    std::size_t n_b;
    Generator generator;
    std::size_t sample;
    double trace_norm;
    double eps_estimate;
    int restarts;
    bool converged;
    double ratio;
    double bound;
    double margin;
};

/// One row per instance, ordered by (n_a, n_b, sample). The Werner family is
/// deterministic, so it yields a single row per dimension (none when samples = 0) and
/// skips n_a != n_b.
std::vector<ScalingRow> run_scaling(const ScalingConfig &config);

inline constexpr const char *kScalingCsvHeader =
    "seed,n_a,n_b,generator,trace_norm,eps_estimate,restarts,converged,ratio,bound,margin";

void write_scaling_csv(std::ostream &out, const std::vector<ScalingRow> &rows);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace hidenorm

#endif
