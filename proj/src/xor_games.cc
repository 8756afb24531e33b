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

#include "hidenorm/xor_games.h"

#include <cmath>
#include <limits>
#include <string>

#include "hidenorm/errors.h"
#include "hidenorm/states.h"

namespace hidenorm {

QuantumXorGame::QuantumXorGame(
    std::size_t n_a, std::size_t n_b, std::vector<HermitianMatrix> states, std::vector<int> signs,
    std::vector<double> probs)
    : n_a_(n_a), n_b_(n_b), states_(std::move(states)), signs_(std::move(signs)), probs_(std::move(probs)) {
    if (states_.empty()) {
        throw ContractError("QuantumXorGame: a game needs at least one state");
    }
    if (signs_.size() != states_.size() || probs_.size() != states_.size()) {
        throw ContractError(
            "QuantumXorGame: states, signs and probs have lengths " + std::to_string(states_.size()) + ", " +
            std::to_string(signs_.size()) + ", " + std::to_string(probs_.size()));
    }
    double total = 0.0;
    for (std::size_t x = 0; x < states_.size(); x++) {
        if (signs_[x] != 1 && signs_[x] != -1) {
            throw ContractError("QuantumXorGame: sign " + std::to_string(x) + " is not +1 or -1");
        }
        if (!(probs_[x] >= 0.0)) {
            throw ContractError("QuantumXorGame: probability " + std::to_string(x) + " is negative");
        }
        total += probs_[x];
        if (states_[x].dim() != n_a * n_b) {
            throw DimensionError("QuantumXorGame: state " + std::to_string(x) + " does not act on n_a x n_b");
        }
        require_density_matrix(states_[x], ("QuantumXorGame state " + std::to_string(x)).c_str());
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw ContractError(
            "QuantumXorGame: probabilities sum to " + std::to_string(total) + " (deviation " +
            std::to_string(total - 1.0) + ")");
    }
}

BipartiteOperator game_operator(const QuantumXorGame &game) {
    const std::size_t n = game.n_a() * game.n_b();
    ComplexMatrix g = ComplexMatrix::Zero(n, n);
    for (std::size_t x = 0; x < game.size(); x++) {
        g += (game.signs()[x] * game.probs()[x]) * game.states()[x].matrix();
    }
    return BipartiteOperator(game.n_a(), game.n_b(), HermitianMatrix(g));
}

GameReport evaluate_game(const QuantumXorGame &game, const SeeSawConfig &config) {
    BipartiteOperator g = game_operator(game);
    GameReport r;
    r.bound = hiding_bound(game.n_a(), game.n_b());
    r.beta_all = trace_norm(g.hermitian());
    r.beta_product = epsilon_norm(g, config.with_field(Field::hermitian));
    if (g.is_zero()) {
        r.beta_all = 0.0;
        r.satisfied = true;
        return r;
    }
    double ratio = r.beta_product.value > 0.0 ? r.beta_all / r.beta_product.value : std::numeric_limits<double>::infinity();
    r.ratio = ratio;
    r.satisfied = ratio <= r.bound + kBoundSlack;
    return r;
}

}  // namespace hidenorm
