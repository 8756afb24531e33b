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

#include "hidenorm/states.h"

#include <cmath>
#include <string>

#include "hidenorm/errors.h"

namespace hidenorm {

namespace {

void require_positive_dim(std::size_t n, const char *what) {
    if (n == 0) {
        throw DimensionError(std::string(what) + ": dimension must be at least 1");
    }
}

}  // namespace

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix g(rows, cols);
    // Fill row-major so the stream order does not depend on Eigen's storage order.
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            g(r, c) = rng.complex_normal();
        }
    }
    return g;
}

ComplexMatrix haar_unitary(std::size_t n, Rng &rng) {
    require_positive_dim(n, "haar_unitary");
    ComplexMatrix g = ginibre(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix &r = qr.matrixQR();
    for (std::size_t k = 0; k < n; k++) {
        Complex d = r(k, k);
        double a = std::abs(d);
        q.col(k) *= a > 0.0 ? d / a : Complex(1.0);
    }
    return q;
}

ComplexMatrix haar_unitary(std::size_t n, RngSeed seed) {
    Rng rng(seed);
    return haar_unitary(n, rng);
}

HermitianMatrix gue_hermitian(std::size_t n, Rng &rng) {
    require_positive_dim(n, "gue_hermitian");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < n; j++) {
            m(i, j) = rng.complex_normal();
            m(j, i) = std::conj(m(i, j));
        }
    }
    return HermitianMatrix(m);
}

HermitianMatrix gue_hermitian(std::size_t n, RngSeed seed) {
    Rng rng(seed);
    return gue_hermitian(n, rng);
}

HermitianMatrix random_density_matrix(std::size_t n, std::size_t env, Rng &rng) {
    require_positive_dim(n, "random_density_matrix");
    require_positive_dim(env, "random_density_matrix");
    ComplexMatrix g = ginibre(n, env, rng);
    ComplexMatrix w = g * g.adjoint();
    double tr = w.trace().real();
    return HermitianMatrix(ComplexMatrix(w / tr));
}

HermitianMatrix random_density_matrix(std::size_t n, std::size_t env, RngSeed seed) {
    Rng rng(seed);
    return random_density_matrix(n, env, rng);
}

void require_density_matrix(const HermitianMatrix &m, const char *what) {
    double tr = m.matrix().trace().real();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw ContractError(std::string(what) + ": trace " + std::to_string(tr) + " is not 1");
    }
    double lo = hermitian_eigen(m).eigenvalues.minCoeff();
    if (lo < -1e-10) {
        throw ContractError(std::string(what) + ": not positive semidefinite (eigenvalue " + std::to_string(lo) + ")");
    }
}

DiscriminationInstance::DiscriminationInstance(
    std::size_t n_a, std::size_t n_b, HermitianMatrix rho, HermitianMatrix sigma, double p)
    : n_a_(n_a), n_b_(n_b), rho_(std::move(rho)), sigma_(std::move(sigma)), p_(p) {
    if (n_a == 0 || n_b == 0 || rho_.dim() != n_a * n_b || sigma_.dim() != n_a * n_b) {
        throw DimensionError("DiscriminationInstance: rho and sigma must both act on the declared n_a x n_b space");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("DiscriminationInstance: prior p must lie in [0, 1]");
    }
    require_density_matrix(rho_, "DiscriminationInstance rho");
    require_density_matrix(sigma_, "DiscriminationInstance sigma");
}

ComplexMatrix swap_operator(std::size_t d) {
    ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            f(j * d + i, i * d + j) = 1.0;
        }
    }
    return f;
}

DiscriminationInstance werner_hiding_pair(std::size_t d) {
    if (d < 2) {
        throw DomainError("werner_hiding_pair: d must be at least 2 (no antisymmetric states for d = 1)");
    }
    const double dd = static_cast<double>(d);
    ComplexMatrix id = ComplexMatrix::Identity(d * d, d * d);
    ComplexMatrix flip = swap_operator(d);
    ComplexMatrix p_sym = (id + flip) * 0.5;
    ComplexMatrix p_asym = (id - flip) * 0.5;
    HermitianMatrix rho(ComplexMatrix(p_sym * (2.0 / (dd * (dd + 1.0)))));
    HermitianMatrix sigma(ComplexMatrix(p_asym * (2.0 / (dd * (dd - 1.0)))));
    return DiscriminationInstance(d, d, std::move(rho), std::move(sigma), 0.5);
}

BipartiteOperator discrimination_operator(const DiscriminationInstance &inst) {
    HermitianMatrix z = inst.rho() * inst.p() - inst.sigma() * (1.0 - inst.p());
    return BipartiteOperator(inst.n_a(), inst.n_b(), std::move(z));
}

}  // namespace hidenorm
