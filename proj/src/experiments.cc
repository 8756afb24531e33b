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

#include "hidenorm/experiments.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hidenorm/errors.h"
#include "hidenorm/states.h"

namespace hidenorm {

std::string to_string(Generator g) {
    switch (g) {
        case Generator::werner:
            return "werner";
        case Generator::gue:
            return "gue";
        case Generator::induced:
            return "induced";
        case Generator::product:
            return "product";
        case Generator::density:
            return "density";
    }
    return "?";
}

Generator parse_generator(const std::string &name) {
    for (Generator g : {Generator::werner, Generator::gue, Generator::induced, Generator::product, Generator::density}) {
        if (to_string(g) == name) {
            return g;
        }
    }
    throw ContractError("unknown generator '" + name + "' (expected werner, gue, induced, product or density)");
}

BipartiteOperator generate_operator(Generator g, std::size_t n_a, std::size_t n_b, RngSeed seed) {
    const std::size_t n = n_a * n_b;
    Rng rng(seed);
    switch (g) {
        case Generator::werner:
            if (n_a != n_b) {
                throw DimensionError("werner generator requires n_a = n_b");
            }
            return discrimination_operator(werner_hiding_pair(n_a));
        case Generator::gue: {
            HermitianMatrix a = gue_hermitian(n, rng);
            HermitianMatrix b = gue_hermitian(n, rng);
            return BipartiteOperator(n_a, n_b, a - b);
        }
        case Generator::induced: {
            HermitianMatrix rho = random_density_matrix(n, n, rng);
            HermitianMatrix sigma = random_density_matrix(n, n, rng);
            double p = rng.uniform();
            return discrimination_operator(DiscriminationInstance(n_a, n_b, std::move(rho), std::move(sigma), p));
        }
        case Generator::product: {
            HermitianMatrix x = gue_hermitian(n_a, rng);
            HermitianMatrix y = gue_hermitian(n_b, rng);
            return BipartiteOperator(n_a, n_b, HermitianMatrix(kron(x.matrix(), y.matrix())));
        }
        case Generator::density:
            return BipartiteOperator(n_a, n_b, random_density_matrix(n, n, rng));
    }
    throw ContractError("unknown generator");
}

RngSeed instance_seed(RngSeed base, Generator g, std::size_t n_a, std::size_t n_b, std::size_t sample) {
    RngSeed s = derive_seed(base, static_cast<std::uint64_t>(g));
    s = derive_seed(s, n_a);
    s = derive_seed(s, n_b);
    return derive_seed(s, sample);
}

QuantumXorGame random_game(std::size_t n_a, std::size_t n_b, std::size_t num_states, RngSeed seed) {
    Rng rng(seed);
    const std::size_t n = n_a * n_b;
    std::vector<HermitianMatrix> states;
    std::vector<int> signs;
    for (std::size_t x = 0; x < num_states; x++) {
        states.push_back(random_density_matrix(n, n, rng));
        signs.push_back((rng.bits() & 1U) != 0 ? 1 : -1);
    }
    std::vector<double> probs(num_states, 1.0 / static_cast<double>(num_states));
    return QuantumXorGame(n_a, n_b, std::move(states), std::move(signs), std::move(probs));
}

BipartiteOperator conjugate_local(const BipartiteOperator &z, const ComplexMatrix &u, const ComplexMatrix &v) {
    ComplexMatrix w = kron(u, v);
    ComplexMatrix m = w * z.matrix() * w.adjoint();
    if (z.is_hermitian()) {
        return BipartiteOperator(z.n_a(), z.n_b(), HermitianMatrix(m));
    }
    return BipartiteOperator(z.n_a(), z.n_b(), std::move(m));
}

BoundCheck check_hiding_bound(const BipartiteOperator &z, const SeeSawConfig &config, int escalated_restarts) {
    BoundCheck c;
    c.report = hiding_ratio(z, config);
    if (!c.report.satisfied) {
        c.initially_violated = true;
        c.escalated = true;
        SeeSawConfig bigger = config;
        bigger.restarts = escalated_restarts;
        c.report = hiding_ratio(z, bigger);
    }
    return c;
}

void ScalingConfig::validate() const {
    seesaw.validate();
    if (n_min < 1) {
        throw ContractError("scaling: minimum dimension must be at least 1");
    }
    if (generator == Generator::werner && n_min < 2) {
        throw ContractError("scaling: werner generator needs dimensions of at least 2");
    }
}

std::vector<ScalingRow> run_scaling(const ScalingConfig &config) {
    config.validate();
    std::vector<ScalingRow> rows;
    for (std::size_t a = config.n_min; a <= config.n_max; a++) {
        for (std::size_t b = config.all_pairs ? config.n_min : a; b <= (config.all_pairs ? config.n_max : a); b++) {
            if (config.generator == Generator::werner && a != b) {
                continue;
            }
            std::size_t samples = config.generator == Generator::werner ? std::min<std::size_t>(config.samples, 1)
                                                                        : config.samples;
            for (std::size_t s = 0; s < samples; s++) {
                RngSeed seed = instance_seed(config.seed, config.generator, a, b, s);
                BipartiteOperator z = generate_operator(config.generator, a, b, seed);
                SeeSawConfig sc = config.seesaw;
                sc.seed = derive_seed(seed, 1);
                RatioReport r = hiding_ratio(z, sc);
                rows.push_back(ScalingRow{
                    seed.value, a, b, config.generator, s, r.trace_norm, r.eps_estimate.value, sc.restarts,
                    r.eps_estimate.converged, r.ratio, r.bound, r.margin});
            }
        }
    }
    return rows;
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

void write_scaling_csv(std::ostream &out, const std::vector<ScalingRow> &rows) {
    out << kScalingCsvHeader << '\n';
    for (const ScalingRow &r : rows) {
        out << r.seed << ',' << r.n_a << ',' << r.n_b << ',' << to_string(r.generator) << ','
            << format_double(r.trace_norm) << ',' << format_double(r.eps_estimate) << ',' << r.restarts << ','
            << (r.converged ? "true" : "false") << ',' << format_double(r.ratio) << ',' << format_double(r.bound)
            << ',' << format_double(r.margin) << '\n';
    }
}

}  // namespace hidenorm
