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

#ifndef HIDENORM_STATES_H
#define HIDENORM_STATES_H

#include <cstddef>

#include "hidenorm/linalg.h"
#include "hidenorm/rng.h"

namespace hidenorm {

/// rows x cols matrix of i.i.d. complex Gaussians, E|g_ij|^2 = 1.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng);

/// Haar-distributed unitary: QR of a Ginibre sample with the phases of diag(R) moved into Q.
ComplexMatrix haar_unitary(std::size_t n, Rng &rng);
ComplexMatrix haar_unitary(std::size_t n, RngSeed seed);

/// GUE sample: N(0,1) diagonal, off-diagonal real and imaginary parts of variance 1/2.
HermitianMatrix gue_hermitian(std::size_t n, Rng &rng);
HermitianMatrix gue_hermitian(std::size_t n, RngSeed seed);

/// Density matrix from the induced measure: G G^dagger / tr(G G^dagger) with G n x env
/// Ginibre. env = n is the Hilbert-Schmidt measure.
HermitianMatrix random_density_matrix(std::size_t n, std::size_t env, Rng &rng);
HermitianMatrix random_density_matrix(std::size_t n, std::size_t env, RngSeed seed);

/// Two states on C^{n_a} (x) C^{n_b} and the prior p of the first.
class DiscriminationInstance {
   public:
    /// Validates positivity (eigenvalue floor -1e-10), unit trace (1e-10), p in [0,1] and
    /// the dimensions.
    DiscriminationInstance(std::size_t n_a, std::size_t n_b, HermitianMatrix rho, HermitianMatrix sigma, double p);

    std::size_t n_a() const {
        return n_a_;
    }
    std::size_t n_b() const {
        return n_b_;
    }
    const HermitianMatrix &rho() const {
        return rho_;
    }
    const HermitianMatrix &sigma() const {
        return sigma_;
    }
    double p() const {
        return p_;
    }

   private:
    std::size_t n_a_;
    std::size_t n_b_;
    HermitianMatrix rho_;
    HermitianMatrix sigma_;
    double p_;
};

/// Throws ContractError unless m is positive semidefinite with unit trace.
void require_density_matrix(const HermitianMatrix &m, const char *what);

/// The flip operator |i j> -> |j i> on C^d (x) C^d.
ComplexMatrix swap_operator(std::size_t d);

/// Normalized symmetric and antisymmetric Werner states at p = 1/2. Requires d >= 2.
DiscriminationInstance werner_hiding_pair(std::size_t d);

/// z = p rho - (1 - p) sigma.
BipartiteOperator discrimination_operator(const DiscriminationInstance &inst);

}  // namespace hidenorm

#endif
