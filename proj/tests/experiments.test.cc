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
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "hidenorm/errors.h"
#include "hidenorm/states.h"

using namespace hidenorm;

namespace {

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST(experiments, generator_names_round_trip) {
    for (Generator g : {Generator::werner, Generator::gue, Generator::induced, Generator::product, Generator::density}) {
        EXPECT_EQ(parse_generator(to_string(g)), g);
    }
    EXPECT_THROW(parse_generator("haar"), ContractError);
}

TEST(experiments, generators_produce_hermitian_operators) {
    for (Generator g : {Generator::gue, Generator::induced, Generator::product, Generator::density}) {
        BipartiteOperator z = generate_operator(g, 2, 3, RngSeed{4});
        EXPECT_EQ(z.n_a(), 2u);
        EXPECT_EQ(z.n_b(), 3u);
        EXPECT_TRUE(z.is_hermitian());
        BipartiteOperator again = generate_operator(g, 2, 3, RngSeed{4});
        EXPECT_TRUE(z.matrix() == again.matrix());
    }
    BipartiteOperator w = generate_operator(Generator::werner, 3, 3, RngSeed{4});
    EXPECT_TRUE(w.matrix().isApprox(discrimination_operator(werner_hiding_pair(3)).matrix(), 1e-15));
    EXPECT_THROW(generate_operator(Generator::werner, 2, 3, RngSeed{}), DimensionError);

    EXPECT_NEAR(generate_operator(Generator::density, 3, 3, RngSeed{5}).matrix().trace().real(), 1.0, 1e-12);
    // p rho - (1 - p) sigma has trace 2p - 1 and trace norm at most 1.
    BipartiteOperator ind = generate_operator(Generator::induced, 3, 2, RngSeed{6});
    EXPECT_LE(trace_norm(ind.hermitian()), 1.0 + 1e-12);
}

TEST(experiments, instance_seeds_are_distinct) {
    RngSeed base{42};
    EXPECT_NE(instance_seed(base, Generator::gue, 2, 3, 0).value, instance_seed(base, Generator::gue, 3, 2, 0).value);
    EXPECT_NE(instance_seed(base, Generator::gue, 2, 2, 0).value, instance_seed(base, Generator::gue, 2, 2, 1).value);
    EXPECT_NE(instance_seed(base, Generator::gue, 2, 2, 0).value, instance_seed(base, Generator::induced, 2, 2, 0).value);
    EXPECT_EQ(instance_seed(base, Generator::gue, 2, 2, 0), instance_seed(base, Generator::gue, 2, 2, 0));
}

TEST(experiments, conjugate_local_preserves_norms) {
    Rng rng(RngSeed{8});
    BipartiteOperator z = generate_operator(Generator::gue, 2, 3, RngSeed{9});
    BipartiteOperator c = conjugate_local(z, haar_unitary(2, rng), haar_unitary(3, rng));
    EXPECT_TRUE(c.is_hermitian());
    EXPECT_NEAR(trace_norm(c.hermitian()), trace_norm(z.hermitian()), 1e-10);
    SeeSawConfig cfg;
    EXPECT_NEAR(epsilon_norm(c, cfg).value, epsilon_norm(z, cfg).value, 1e-6);
}

TEST(experiments, bound_check_reports) {
    SeeSawConfig cfg;
    cfg.restarts = 10;
    BoundCheck c = check_hiding_bound(generate_operator(Generator::gue, 3, 3, RngSeed{10}), cfg);
    EXPECT_TRUE(c.report.satisfied);
    EXPECT_FALSE(c.initially_violated);
    EXPECT_FALSE(c.escalated);
}

TEST(experiments, scaling_rows_and_csv) {
    ScalingConfig cfg;
    cfg.generator = Generator::gue;
    cfg.n_min = 2;
    cfg.n_max = 3;
    cfg.samples = 2;
    cfg.seesaw.restarts = 8;
    auto rows = run_scaling(cfg);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].n_a, 2u);
    EXPECT_EQ(rows[2].n_a, 3u);
    for (const ScalingRow &r : rows) {
        EXPECT_EQ(r.n_a, r.n_b);
        EXPECT_EQ(r.restarts, 8);
        EXPECT_LE(r.eps_estimate, r.trace_norm + 1e-9);
        EXPECT_NEAR(r.margin, r.bound - r.ratio, 1e-12);
    }
    cfg.all_pairs = true;
    EXPECT_EQ(run_scaling(cfg).size(), 8u);

    std::ostringstream out;
    write_scaling_csv(out, rows);
    auto lines = split_lines(out.str());
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0], kScalingCsvHeader);
    EXPECT_EQ(std::count(lines[1].begin(), lines[1].end(), ','), 10);
}

TEST(experiments, zero_samples_gives_header_only) {
    for (Generator g : {Generator::gue, Generator::werner}) {
        ScalingConfig cfg;
        cfg.generator = g;
        cfg.samples = 0;
        auto rows = run_scaling(cfg);
        EXPECT_TRUE(rows.empty());
        std::ostringstream out;
        write_scaling_csv(out, rows);
        EXPECT_EQ(out.str(), std::string(kScalingCsvHeader) + "\n");
    }
}

TEST(experiments, werner_scaling_is_increasing) {
    ScalingConfig cfg;
    cfg.generator = Generator::werner;
    cfg.n_min = 2;
    cfg.n_max = 5;
    cfg.samples = 3;
    cfg.all_pairs = true;
    auto rows = run_scaling(cfg);
    ASSERT_EQ(rows.size(), 4u);
    for (std::size_t k = 1; k < rows.size(); k++) {
        EXPECT_EQ(rows[k].n_a, rows[k - 1].n_a + 1);
        EXPECT_GT(rows[k].ratio, rows[k - 1].ratio);
    }
    EXPECT_NEAR(rows[0].ratio, 1.5, 1e-9);
}

TEST(experiments, scaling_validation) {
    ScalingConfig cfg;
    cfg.n_min = 0;
    EXPECT_THROW(run_scaling(cfg), ContractError);
    cfg.n_min = 1;
    cfg.generator = Generator::werner;
    EXPECT_THROW(run_scaling(cfg), ContractError);
    ScalingConfig bad;
    bad.seesaw.max_iters = 0;
    EXPECT_THROW(run_scaling(bad), ContractError);
}

TEST(experiments, format_double_round_trips) {
    for (double x : {0.1, 1.0 / 3.0, 2.0 * std::sqrt(2.0), 1e-300, -7.25, 0.0}) {
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
    EXPECT_EQ(format_double(1.5), "1.5");
    EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
}
