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

#include "hidenorm/commands.h"

#include <cmath>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "hidenorm/darwinism.h"
#include "hidenorm/errors.h"
#include "hidenorm/experiments.h"
#include "hidenorm/operator_io.h"
#include "hidenorm/verify.h"
#include "hidenorm/xor_games.h"

namespace hidenorm::cli {

using ojson = nlohmann::ordered_json;

namespace {

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const DegenerateInputError &e) {
        err << "error: degenerate input: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    }
}

WarningSink warn_to(std::ostream &err) {
    return [&err](const std::string &msg) { err << "warning: " << msg << '\n'; };
}

ojson number_or_null(double x) {
    return std::isfinite(x) ? ojson(x) : ojson(nullptr);
}

ojson estimate_json(const NormEstimate &e) {
    ojson j;
    j["value"] = e.value;
    j["is_lower_bound"] = e.is_lower_bound;
    j["iterations_used"] = e.iterations_used;
    j["converged"] = e.converged;
    j["restart_index"] = e.restart_index;
    return j;
}

ojson budget_json(const SeeSawConfig &c) {
    ojson j;
    j["seed"] = c.seed.value;
    j["restarts"] = c.restarts;
    j["max_iters"] = c.max_iters;
    j["rel_tol"] = c.rel_tol;
    return j;
}

std::string csv_bool(bool b) {
    return b ? "true" : "false";
}

}  // namespace

SeeSawConfig CommonOptions::seesaw(RngSeed s) const {
    SeeSawConfig c;
    c.restarts = restarts;
    c.max_iters = max_iters;
    c.rel_tol = tol;
    c.seed = s;
    c.validate();
    return c;
}

int cmd_ratio(const RatioOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const RngSeed base{options.common.seed};
        std::optional<BipartiteOperator> z;
        std::string source;
        RngSeed inst = base;
        Generator gen = Generator::gue;
        if (!options.input.empty()) {
            z = parse_operator_file(options.input, warn_to(err));
            source = options.input;
        } else {
            gen = parse_generator(options.generator);
            inst = instance_seed(base, gen, options.n_a, options.n_b, 0);
            z = generate_operator(gen, options.n_a, options.n_b, inst);
            source = "generator:" + options.generator;
        }
        SeeSawConfig cfg = options.common.seesaw(derive_seed(inst, 1));
        RatioReport r = hiding_ratio(*z, cfg);
        if (options.common.format.value_or(OutputFormat::json) == OutputFormat::csv) {
            ScalingRow row{inst.value, z->n_a(), z->n_b(), gen, 0, r.trace_norm, r.eps_estimate.value, cfg.restarts,
                           r.eps_estimate.converged, r.ratio, r.bound, r.margin};
            write_scaling_csv(out, {row});
            return kExitOk;
        }
        ojson j;
        j["source"] = source;
        j["n_a"] = z->n_a();
        j["n_b"] = z->n_b();
        j["instance_seed"] = inst.value;
        j["trace_norm"] = r.trace_norm;
        j["eps_estimate"] = estimate_json(r.eps_estimate);
        j["ratio"] = number_or_null(r.ratio);
        j["bound"] = r.bound;
        j["satisfied"] = r.satisfied;
        j["margin"] = number_or_null(r.margin);
        // Only meaningful for p rho - (1-p) sigma, whose norms are at most 1.
        if (r.trace_norm <= 1.0 + 1e-9 && r.eps_estimate.value <= 1.0 + 1e-9) {
            j["lo_error_probability_upper"] = error_probability(r.eps_estimate.value);
            j["abstract_error_cap"] = 0.5 * (1.0 - 1.0 / r.bound);
        }
        j["seesaw"] = budget_json(cfg);
        out << j.dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_scaling(const ScalingOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        ScalingConfig cfg;
        cfg.generator = parse_generator(options.generator);
        cfg.n_min = options.n_min;
        cfg.n_max = options.n_max;
        cfg.samples = options.samples;
        cfg.all_pairs = options.all_pairs;
        cfg.seed = RngSeed{options.common.seed};
        cfg.seesaw = options.common.seesaw(cfg.seed);
        cfg.validate();
        std::vector<ScalingRow> rows = run_scaling(cfg);
        if (options.common.format.value_or(OutputFormat::csv) == OutputFormat::json) {
            ojson arr = ojson::array();
            for (const ScalingRow &r : rows) {
                ojson j;
                j["seed"] = r.seed;
                j["n_a"] = r.n_a;
                j["n_b"] = r.n_b;
                j["generator"] = to_string(r.generator);
                j["trace_norm"] = r.trace_norm;
                j["eps_estimate"] = r.eps_estimate;
                j["restarts"] = r.restarts;
                j["converged"] = r.converged;
                j["ratio"] = number_or_null(r.ratio);
                j["bound"] = r.bound;
                j["margin"] = number_or_null(r.margin);
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << '\n';
        } else {
            write_scaling_csv(out, rows);
        }
        return kExitOk;
    });
}

int cmd_xor(const XorOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        struct Entry {
            std::uint64_t seed;
            std::size_t n_a;
            std::size_t n_b;
            GameReport report;
        };
        std::vector<Entry> entries;
        const RngSeed base{options.common.seed};
        if (!options.game.empty()) {
            QuantumXorGame game = parse_game_file(options.game, warn_to(err));
            SeeSawConfig cfg = options.common.seesaw(derive_seed(base, 1));
            entries.push_back({base.value, game.n_a(), game.n_b(), evaluate_game(game, cfg)});
        } else {
            if (options.num_states < 1) {
                throw ContractError("xor: --states must be at least 1");
            }
            for (std::size_t k = 0; k < options.random_games; k++) {
                RngSeed seed = derive_seed(base, k);
                QuantumXorGame game = random_game(options.n_a, options.n_b, options.num_states, seed);
                SeeSawConfig cfg = options.common.seesaw(derive_seed(seed, 1));
                entries.push_back({seed.value, options.n_a, options.n_b, evaluate_game(game, cfg)});
            }
        }
        if (options.common.format.value_or(OutputFormat::json) == OutputFormat::csv) {
            out << kXorCsvHeader << '\n';
            for (std::size_t k = 0; k < entries.size(); k++) {
                const GameReport &r = entries[k].report;
                out << k << ',' << entries[k].seed << ',' << entries[k].n_a << ',' << entries[k].n_b << ','
                    << format_double(r.beta_all) << ',' << format_double(r.beta_product.value) << ','
                    << (r.ratio ? format_double(*r.ratio) : std::string("undefined")) << ','
                    << format_double(r.bound) << ',' << csv_bool(r.satisfied) << '\n';
            }
            return kExitOk;
        }
        ojson games = ojson::array();
        bool all = true;
        for (const Entry &e : entries) {
            ojson j;
            j["seed"] = e.seed;
            j["n_a"] = e.n_a;
            j["n_b"] = e.n_b;
            j["beta_all"] = e.report.beta_all;
            j["beta_product"] = estimate_json(e.report.beta_product);
            j["ratio"] = e.report.ratio ? number_or_null(*e.report.ratio) : ojson(nullptr);
            j["bound"] = e.report.bound;
            j["satisfied"] = e.report.satisfied;
            all = all && e.report.satisfied;
            games.push_back(std::move(j));
        }
        if (!options.game.empty()) {
            out << games[0].dump(2) << '\n';
        } else {
            ojson j;
            j["all_satisfied"] = all;
            j["games"] = std::move(games);
            out << j.dump(2) << '\n';
        }
        return kExitOk;
    });
}

int cmd_darwinism(const DarwinismOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const bool empty = options.d_a_min > options.d_a_max || options.d_r_min > options.d_r_max;
        if (!empty && options.d_a_min < 2) {
            throw ContractError("darwinism: d_a range must start at 2 or above, got " + std::to_string(options.d_a_min));
        }
        if (!empty && options.d_r_min < 1) {
            throw ContractError("darwinism: d_r range must start at 1 or above");
        }
        if (options.r < 1 || options.q < 1) {
            throw ContractError("darwinism: --r and --q must be positive");
        }
        std::vector<CoefficientRow> rows =
            coefficient_sweep(options.d_a_min, options.d_a_max, options.d_r_min, options.d_r_max);
        auto bound = [&](const CoefficientRow &row) {
            return diamond_bound_rhs(DarwinismParams{row.d_a, row.d_r, options.r, options.q});
        };
        if (options.common.format.value_or(OutputFormat::csv) == OutputFormat::json) {
            ojson arr = ojson::array();
            for (const CoefficientRow &row : rows) {
                ojson j;
                j["d_a"] = row.d_a;
                j["d_r"] = row.d_r;
                j["omega_new"] = row.omega_new;
                j["omega_ranard"] = row.omega_ranard;
                j["improvement_factor"] = row.improvement_factor;
                j["diamond_bound_rhs"] = bound(row);
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << '\n';
            return kExitOk;
        }
        out << kDarwinismCsvHeader << '\n';
        for (const CoefficientRow &row : rows) {
            out << row.d_a << ',' << row.d_r << ',' << format_double(row.omega_new) << ','
                << format_double(row.omega_ranard) << ',' << format_double(row.improvement_factor) << ','
                << format_double(bound(row)) << '\n';
        }
        return kExitOk;
    });
}

int cmd_verify(const VerifyCommandOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        VerifyOptions v;
        v.seed = RngSeed{options.common.seed};
        v.restarts = options.common.restarts;
        v.forced_tolerance = options.forced_tolerance;
        if (v.restarts < 1) {
            throw ContractError("verify: --restarts must be positive");
        }
        std::vector<SuiteResult> results = run_verification(v);
        if (options.common.format.value_or(OutputFormat::json) == OutputFormat::csv) {
            out << "suite,passed,cases,worst,tolerance\n";
            for (const SuiteResult &r : results) {
                out << r.name << ',' << csv_bool(r.passed) << ',' << r.cases << ',' << format_double(r.worst) << ','
                    << format_double(r.tolerance) << '\n';
            }
        } else {
            out << verification_json(v, results) << '\n';
        }
        for (const SuiteResult &r : results) {
            if (!r.passed) {
                err << "FAILED suite " << r.name << ": worst " << r.worst << " > tolerance " << r.tolerance << '\n';
            }
        }
        return all_passed(results) ? kExitOk : kExitSuiteFailure;
    });
}

}  // namespace hidenorm::cli
