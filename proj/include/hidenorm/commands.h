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

#ifndef HIDENORM_COMMANDS_H
#define HIDENORM_COMMANDS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "hidenorm/dist_norms.h"

namespace hidenorm::cli {

enum class OutputFormat { csv, json };

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitIoError = 1,
    kExitValidation = 2,
    kExitDegenerate = 3,
    kExitSuiteFailure = 4,
};

struct CommonOptions {
    std::uint64_t seed = 0;
    int restarts = 32;
    int max_iters = 500;
    double tol = 1e-10;
    std::optional<OutputFormat> format;

    SeeSawConfig seesaw(RngSeed seed) const;
};

struct RatioOptions {
    CommonOptions common;
    /// Operator file; when empty the generator is used.
    std::string input;
    std::string generator = "werner";
    std::size_t n_a = 2;
    std::size_t n_b = 2;
};

struct ScalingOptions {
    CommonOptions common;
    std::string generator = "gue";
    std::size_t n_min = 2;
    std::size_t n_max = 4;
    std::size_t samples = 10;
    bool all_pairs = false;
};

struct XorOptions {
    CommonOptions common;
    /// Game file; when empty, `random_games` random games are generated.
    std::string game;
    std::size_t random_games = 1;
    std::size_t num_states = 4;
    std::size_t n_a = 3;
    std::size_t n_b = 3;
};

struct DarwinismOptions {
    CommonOptions common;
    std::int64_t d_a_min = 2;
    std::int64_t d_a_max = 10;
    std::int64_t d_r_min = 2;
    std::int64_t d_r_max = 10;
    std::int64_t r = 1;
    std::int64_t q = 100;
};

struct VerifyCommandOptions {
    CommonOptions common;
    std::optional<double> forced_tolerance;
};

// Each command writes its result to `out`, diagnostics to `err`, and returns an ExitCode.
// Defaults: ratio, xor and verify emit JSON; scaling and darwinism emit CSV.
int cmd_ratio(const RatioOptions &options, std::ostream &out, std::ostream &err);
int cmd_scaling(const ScalingOptions &options, std::ostream &out, std::ostream &err);
int cmd_xor(const XorOptions &options, std::ostream &out, std::ostream &err);
int cmd_darwinism(const DarwinismOptions &options, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyCommandOptions &options, std::ostream &out, std::ostream &err);

inline constexpr const char *kDarwinismCsvHeader =
    "d_a,d_r,omega_new,omega_ranard,improvement_factor,diamond_bound_rhs";
inline constexpr const char *kXorCsvHeader = "game,seed,n_a,n_b,beta_all,beta_product,ratio,bound,satisfied";

}  // namespace hidenorm::cli

#endif
