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

#ifndef HIDENORM_XOR_GAMES_H
#define HIDENORM_XOR_GAMES_H

#include <cstddef>
#include <optional>
#include <vector>

#include "hidenorm/dist_norms.h"
#include "hidenorm/linalg.h"

namespace hidenorm {

/// A bipartite quantum XOR game: the referee draws x with probability probs[x], sends
/// states[x], and the players win iff the product of their +-1 answers equals signs[x].
class QuantumXorGame {
   public:
    /// Throws ContractError on unequal lengths, empty games, signs outside {-1, +1},
    /// negative probabilities, probabilities not summing to 1 (1e-10), or non-states.
    QuantumXorGame(
        std::size_t n_a, std::size_t n_b, std::vector<HermitianMatrix> states, std::vector<int> signs,
        std::vector<double> probs);

    std::size_t n_a() const {
        return n_a_;
    }
    std::size_t n_b() const {
        return n_b_;
    }
    std::size_t size() const {
        return states_.size();
    }
    const std::vector<HermitianMatrix> &states() const {
        return states_;
    }
    const std::vector<int> &signs() const {
        return signs_;
    }
    const std::vector<double> &probs() const {
        return probs_;
    }

   private:
    std::size_t n_a_;
    std::size_t n_b_;
    std::vector<HermitianMatrix> states_;
    std::vector<int> signs_;
    std::vector<double> probs_;
};

struct GameReport {
    double beta_all = 0.0;
    NormEstimate beta_product;
    /// Unset when the game operator vanishes.
    std::optional<double> ratio;
    double bound = 0.0;
    bool satisfied = true;
};

/// G = sum_x c_x p_x rho_x.
BipartiteOperator game_operator(const QuantumXorGame &game);

/// Best bias over global strategies (trace norm of G) and over product strategies
/// (Hermitian epsilon norm of G).
GameReport evaluate_game(const QuantumXorGame &game, const SeeSawConfig &config);

}  // namespace hidenorm

#endif
