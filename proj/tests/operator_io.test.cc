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

#include "hidenorm/operator_io.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hidenorm/experiments.h"
#include "hidenorm/states.h"

using namespace hidenorm;

namespace {

std::filesystem::path scratch(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "hidenorm_io_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string error_of(const std::string &text) {
    try {
        parse_operator_json(text);
    } catch (const FileFormatError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(operator_io, identity_file) {
    auto path = scratch("identity.json");
    {
        std::ofstream out(path);
        out << R"({"n_a": 2, "n_b": 2,
                   "re": [1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1],
                   "im": [0,0,0,0, 0,0,0,0, 0,0,0,0, 0,0,0,0]})";
    }
    BipartiteOperator z = parse_operator_file(path.string());
    EXPECT_EQ(z.n_a(), 2u);
    EXPECT_EQ(z.n_b(), 2u);
    EXPECT_TRUE(z.is_hermitian());
    EXPECT_TRUE(z.matrix().isIdentity(0.0));
}

TEST(operator_io, real_symmetric_loads_as_hermitian) {
    BipartiteOperator z = parse_operator_json(
        R"({"n_a": 1, "n_b": 2, "re": [0.5, -0.25, -0.25, 2], "im": [0, 0, 0, 0]})");
    EXPECT_TRUE(z.is_hermitian());
    EXPECT_EQ(z.hermitian().input_asymmetry(), 0.0);
    EXPECT_EQ(z.matrix()(0, 1), Complex(-0.25, 0.0));
}

TEST(operator_io, round_trip_is_exact) {
    for (std::uint64_t s = 0; s < 5; s++) {
        BipartiteOperator z = generate_operator(Generator::gue, 2 + s % 2, 3, RngSeed{s});
        auto path = scratch("round_trip.json");
        write_operator_file(path.string(), z);
        BipartiteOperator back = parse_operator_file(path.string());
        EXPECT_EQ(back.n_a(), z.n_a());
        EXPECT_EQ(back.n_b(), z.n_b());
        EXPECT_LE((back.matrix() - z.matrix()).cwiseAbs().maxCoeff(), 1e-15);
    }
    Rng rng(RngSeed{3});
    BipartiteOperator general(2, 2, ginibre(4, 4, rng));
    BipartiteOperator back = parse_operator_json(operator_to_json(general));
    EXPECT_FALSE(back.is_hermitian());
    EXPECT_TRUE(back.matrix() == general.matrix());
}

TEST(operator_io, distinct_errors_name_the_field) {
    try {
        parse_operator_file(scratch("does_not_exist.json").string());
        FAIL() << "missing file accepted";
    } catch (const FileAccessError &e) {
        EXPECT_NE(std::string(e.what()).find("not found"), std::string::npos);
    }
    std::vector<std::pair<std::string, std::string>> cases = {
        {"{", "not valid JSON"},
        {"[1, 2]", "top level"},
        {R"({"n_b": 1, "re": [1], "im": [0]})", "'n_a'"},
        {R"({"n_a": 0, "n_b": 1, "re": [1], "im": [0]})", "'n_a' must be a positive integer"},
        {R"({"n_a": 1, "n_b": 1, "im": [0]})", "missing field 're'"},
        {R"({"n_a": 1, "n_b": 2, "re": [1, 0, 0], "im": [0, 0, 0, 0]})", "'re' has length 3, expected 4"},
        {R"({"n_a": 1, "n_b": 2, "re": [1, 0, 0, 1], "im": [0, 0]})", "'im' has length 2"},
        {R"({"n_a": 1, "n_b": 1, "re": ["x"], "im": [0]})", "'re' contains a non-numeric"},
        {R"({"n_a": 1, "n_b": 2, "re": [1, 0.001, 0, 1], "im": [0, 0, 0, 0]})", "not Hermitian"},
        {R"({"n_a": 1, "n_b": 1, "re": [1], "im": [0], "hermitian": 3})", "'hermitian' must be a boolean"},
    };
    std::vector<std::string> seen;
    for (const auto &[text, needle] : cases) {
        std::string msg = error_of(text);
        EXPECT_NE(msg.find(needle), std::string::npos) << text << " -> " << msg;
        seen.push_back(msg);
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
}

TEST(operator_io, small_asymmetry_warns_and_symmetrizes) {
    std::vector<std::string> warnings;
    BipartiteOperator z = parse_operator_json(
        R"({"n_a": 1, "n_b": 2, "re": [1, 1e-8, 0, 1], "im": [0, 0, 0, 0]})",
        [&](const std::string &w) { warnings.push_back(w); });
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("symmetrized"), std::string::npos);
    EXPECT_EQ(z.matrix()(0, 1), z.matrix()(1, 0));

    warnings.clear();
    parse_operator_json(
        R"({"n_a": 1, "n_b": 2, "re": [1, 1e-14, 0, 1], "im": [0, 0, 0, 0]})",
        [&](const std::string &w) { warnings.push_back(w); });
    EXPECT_TRUE(warnings.empty());
}

TEST(operator_io, general_operator_skips_symmetrization) {
    BipartiteOperator z = parse_operator_json(
        R"({"n_a": 1, "n_b": 2, "re": [0, 1, 0, 0], "im": [0, 0, 0, 0], "hermitian": false})");
    EXPECT_FALSE(z.is_hermitian());
    EXPECT_EQ(z.matrix()(0, 1), Complex(1.0, 0.0));
    EXPECT_EQ(z.matrix()(1, 0), Complex(0.0, 0.0));
}

TEST(operator_io, game_round_trip) {
    QuantumXorGame g = random_game(2, 2, 3, RngSeed{17});
    QuantumXorGame back = parse_game_json(game_to_json(g));
    ASSERT_EQ(back.size(), g.size());
    EXPECT_EQ(back.signs(), g.signs());
    EXPECT_EQ(back.probs(), g.probs());
    for (std::size_t x = 0; x < g.size(); x++) {
        EXPECT_LE((back.states()[x].matrix() - g.states()[x].matrix()).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(operator_io, game_errors) {
    EXPECT_THROW(parse_game_json(R"({"n_a": 1, "n_b": 1, "signs": [1], "probs": [1]})"), FileFormatError);
    EXPECT_THROW(
        parse_game_json(R"({"n_a": 1, "n_b": 1, "states": [{"re": [1], "im": [0]}], "signs": [2], "probs": [1]})"),
        ContractError);
    EXPECT_THROW(
        parse_game_json(R"({"n_a": 1, "n_b": 1, "states": [{"re": [1], "im": [0]}], "signs": [1], "probs": [0.5]})"),
        ContractError);
}
