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

// hidenorm: trace norms, epsilon norms and data-hiding ratios from the command line.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "hidenorm/commands.h"

using namespace hidenorm::cli;

namespace {


void add_shared(CLI::App *sub, CommonOptions &common, std::string &out_path) {
    sub->add_option("--seed", common.seed, "Base RNG seed")->capture_default_str();
    sub->add_option("--restarts", common.restarts, "See-saw restarts (identity start included)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", common.max_iters, "See-saw iteration cap")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", common.tol, "Relative improvement threshold")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", out_path, "Write output here instead of stdout");
    static const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    sub->add_option("--format", common.format, "Output format")->transform(CLI::CheckedTransformer(formats));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Distinguishability norms and data-hiding ratios for bipartite operators"};
    app.require_subcommand(1);

    RatioOptions ratio;
    std::string ratio_out;
    auto *ratio_cmd = app.add_subcommand("ratio", "Trace norm vs epsilon norm of one operator");
    add_shared(ratio_cmd, ratio.common, ratio_out);
    ratio_cmd->add_option("--input", ratio.input, "Operator JSON file");
    ratio_cmd->add_option("--generator", ratio.generator, "werner|gue|induced|product|density")->capture_default_str();
    ratio_cmd->add_option("--na", ratio.n_a, "Local dimension of A")->capture_default_str();
    ratio_cmd->add_option("--nb", ratio.n_b, "Local dimension of B")->capture_default_str();
    ratio_cmd->add_option_function<std::size_t>(
        "--d", [&](std::size_t d) { ratio.n_a = ratio.n_b = d; }, "Set both local dimensions");

    ScalingOptions scaling;
    std::string scaling_out;
    auto *scaling_cmd = app.add_subcommand("scaling", "Ratio sweep over dimensions and random samples");
    add_shared(scaling_cmd, scaling.common, scaling_out);
    scaling_cmd->add_option("--generator", scaling.generator, "werner|gue|induced|product|density")
        ->capture_default_str();
    scaling_cmd->add_option("--n-min", scaling.n_min, "Smallest local dimension")->capture_default_str();
    scaling_cmd->add_option("--n-max", scaling.n_max, "Largest local dimension")->capture_default_str();
    scaling_cmd->add_option("--samples", scaling.samples, "Samples per dimension pair")->capture_default_str();
    scaling_cmd->add_flag("--all-pairs", scaling.all_pairs, "Sweep every (n_a, n_b), not only n_a = n_b");

    XorOptions xr;
    std::string xor_out;
    auto *xor_cmd = app.add_subcommand("xor", "General vs product bias of quantum XOR games");
    add_shared(xor_cmd, xr.common, xor_out);
    xor_cmd->add_option("--game", xr.game, "Game JSON file");
    xor_cmd->add_option("--random-games", xr.random_games, "Number of random games")->capture_default_str();
    xor_cmd->add_option("--states", xr.num_states, "States per random game")->capture_default_str();
    xor_cmd->add_option("--na", xr.n_a, "Local dimension of A")->capture_default_str();
    xor_cmd->add_option("--nb", xr.n_b, "Local dimension of B")->capture_default_str();

    DarwinismOptions dw;
    std::string dw_out;
    auto *dw_cmd = app.add_subcommand("darwinism", "Objectivity coefficients and diamond-norm bound table");
    add_shared(dw_cmd, dw.common, dw_out);
    dw_cmd->add_option("--da-min", dw.d_a_min)->capture_default_str();
    dw_cmd->add_option("--da-max", dw.d_a_max)->capture_default_str();
    dw_cmd->add_option("--dr-min", dw.d_r_min)->capture_default_str();
    dw_cmd->add_option("--dr-max", dw.d_r_max)->capture_default_str();
    dw_cmd->add_option("--r", dw.r, "|R|, size of the observer fragment")->capture_default_str();
    dw_cmd->add_option("--q", dw.q, "|Q|, size of the excluded set")->capture_default_str();

    VerifyCommandOptions verify;
    verify.common.restarts = 50;
    std::string verify_out;
    auto *verify_cmd = app.add_subcommand("verify", "Run the invariant batteries; nonzero exit on failure");
    add_shared(verify_cmd, verify.common, verify_out);
    verify_cmd->add_option("--force-tolerance", verify.forced_tolerance)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    auto run = [](const std::string &path, auto &&command) -> int {
        if (path.empty()) {
            return command(std::cout);
        }
        std::ofstream file(path);
        if (!file) {
            std::cerr << "error: cannot open " << path << " for writing\n";
            return kExitIoError;
        }
        return command(file);
    };

    if (*ratio_cmd) {
        return run(ratio_out, [&](std::ostream &o) { return cmd_ratio(ratio, o, std::cerr); });
    }
    if (*scaling_cmd) {
        return run(scaling_out, [&](std::ostream &o) { return cmd_scaling(scaling, o, std::cerr); });
    }
    if (*xor_cmd) {
        return run(xor_out, [&](std::ostream &o) { return cmd_xor(xr, o, std::cerr); });
    }
    if (*dw_cmd) {
        return run(dw_out, [&](std::ostream &o) { return cmd_darwinism(dw, o, std::cerr); });
    }
    return run(verify_out, [&](std::ostream &o) { return cmd_verify(verify, o, std::cerr); });
}
