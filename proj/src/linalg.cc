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

#include "hidenorm/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "hidenorm/errors.h"

namespace hidenorm {

namespace {

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols()) {
        throw DimensionError(
            std::string(what) + ": expected a square matrix, got " + std::to_string(m.rows()) + "x" +
            std::to_string(m.cols()));
    }
}

void require_finite(const ComplexMatrix &m, const char *what) {
    if (!m.allFinite()) {
        throw RejectedInputError(std::string(what) + ": matrix has non-finite entries");
    }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix &m) {
    require_square(m, "HermitianMatrix");
    require_finite(m, "HermitianMatrix");
    if (m.rows() == 0) {
        throw DimensionError("HermitianMatrix: dimension must be positive");
    }
    asymmetry_ = (m - m.adjoint()).cwiseAbs().maxCoeff();
    m_ = (m + m.adjoint()) * 0.5;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    return HermitianMatrix(ComplexMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
    return HermitianMatrix(ComplexMatrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
    return HermitianMatrix(ComplexMatrix(m_ * s));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix &o) const {
    if (o.dim() != dim()) {
        throw DimensionError("HermitianMatrix: dimension mismatch in sum");
    }
    return HermitianMatrix(ComplexMatrix(m_ + o.m_));
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix &o) const {
    if (o.dim() != dim()) {
        throw DimensionError("HermitianMatrix: dimension mismatch in difference");
    }
    return HermitianMatrix(ComplexMatrix(m_ - o.m_));
}

BipartiteOperator::BipartiteOperator(std::size_t n_a, std::size_t n_b, HermitianMatrix m)
    : n_a_(n_a), n_b_(n_b), m_(m.matrix()), hermitian_(true) {
    if (n_a == 0 || n_b == 0 || m.dim() != n_a * n_b) {
        throw DimensionError(
            "BipartiteOperator: matrix of dimension " + std::to_string(m.dim()) + " does not match " +
            std::to_string(n_a) + "x" + std::to_string(n_b));
    }
}

BipartiteOperator::BipartiteOperator(std::size_t n_a, std::size_t n_b, ComplexMatrix m)
    : n_a_(n_a), n_b_(n_b), m_(std::move(m)), hermitian_(false) {
    require_square(m_, "BipartiteOperator");
    require_finite(m_, "BipartiteOperator");
    if (n_a == 0 || n_b == 0 || static_cast<std::size_t>(m_.rows()) != n_a * n_b) {
        throw DimensionError(
            "BipartiteOperator: matrix of dimension " + std::to_string(m_.rows()) + " does not match " +
            std::to_string(n_a) + "x" + std::to_string(n_b));
    }
}

HermitianMatrix BipartiteOperator::hermitian() const {
    if (!hermitian_) {
        throw ContractError("BipartiteOperator: operator is not Hermitian");
    }
    return HermitianMatrix(m_);
}

BipartiteOperator BipartiteOperator::scaled(double s) const {
    if (hermitian_) {
        return BipartiteOperator(n_a_, n_b_, HermitianMatrix(ComplexMatrix(m_ * s)));
    }
    return BipartiteOperator(n_a_, n_b_, ComplexMatrix(m_ * s));
}

EigenDecomposition hermitian_eigen(const HermitianMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix());
    if (solver.info() != Eigen::Success) {
        throw RejectedInputError("hermitian_eigen: eigensolver did not converge");
    }
    // Eigen sorts ascending.
    EigenDecomposition out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

double trace_norm(const HermitianMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

double trace_norm(const ComplexMatrix &m) {
    require_square(m, "trace_norm");
    require_finite(m, "trace_norm");
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().sum();
}

double operator_norm(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

HermitianMatrix hermitian_sign(const HermitianMatrix &m) {
    EigenDecomposition eig = hermitian_eigen(m);
    double scale = eig.eigenvalues.cwiseAbs().maxCoeff();
    // Eigenvalues that are zero up to solver noise count as zero and map to +1.
    double zero_band = 8.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(m.dim()) * scale;
    RealVector signs(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < signs.size(); k++) {
        signs(k) = eig.eigenvalues(k) >= -zero_band ? 1.0 : -1.0;
    }
    const ComplexMatrix &v = eig.eigenvectors;
    return HermitianMatrix(ComplexMatrix(v * signs.cast<Complex>().asDiagonal() * v.adjoint()));
}

ComplexMatrix optimal_contraction_complex(const ComplexMatrix &m) {
    require_square(m, "optimal_contraction_complex");
    require_finite(m, "optimal_contraction_complex");
    if (m.isZero(0.0)) {
        return ComplexMatrix::Identity(m.rows(), m.cols());
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixV() * svd.matrixU().adjoint();
}

ComplexMatrix partial_trace(const ComplexMatrix &z, std::size_t n_a, std::size_t n_b, Subsystem keep) {
    require_square(z, "partial_trace");
    if (static_cast<std::size_t>(z.rows()) != n_a * n_b) {
        throw DimensionError(
            "partial_trace: matrix of dimension " + std::to_string(z.rows()) + " does not match " +
            std::to_string(n_a) + "x" + std::to_string(n_b));
    }
    const Eigen::Index na = static_cast<Eigen::Index>(n_a);
    const Eigen::Index nb = static_cast<Eigen::Index>(n_b);
    if (keep == Subsystem::A) {
        ComplexMatrix out = ComplexMatrix::Zero(na, na);
        for (Eigen::Index i = 0; i < na; i++) {
            for (Eigen::Index k = 0; k < na; k++) {
                for (Eigen::Index j = 0; j < nb; j++) {
                    out(i, k) += z(i * nb + j, k * nb + j);
                }
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
    for (Eigen::Index i = 0; i < na; i++) {
        out += z.block(i * nb, i * nb, nb, nb);
    }
    return out;
}

ComplexMatrix partial_trace(const BipartiteOperator &z, Subsystem keep) {
    return partial_trace(z.matrix(), z.n_a(), z.n_b(), keep);
}

ComplexMatrix contract_b(const BipartiteOperator &z, const ComplexMatrix &g) {
    const Eigen::Index na = static_cast<Eigen::Index>(z.n_a());
    const Eigen::Index nb = static_cast<Eigen::Index>(z.n_b());
    if (g.rows() != nb || g.cols() != nb) {
        throw DimensionError("contract_b: contraction does not act on subsystem B");
    }
    const ComplexMatrix &m = z.matrix();
    ComplexMatrix out(na, na);
    // out(i, k) = sum_{j,l} z[(i,j),(k,l)] g(l, j) = tr(Z_ik g), Z_ik the (i,k) block.
    for (Eigen::Index i = 0; i < na; i++) {
        for (Eigen::Index k = 0; k < na; k++) {
            out(i, k) = (m.block(i * nb, k * nb, nb, nb).cwiseProduct(g.transpose())).sum();
        }
    }
    return out;
}

ComplexMatrix contract_a(const BipartiteOperator &z, const ComplexMatrix &f) {
    const Eigen::Index na = static_cast<Eigen::Index>(z.n_a());
    const Eigen::Index nb = static_cast<Eigen::Index>(z.n_b());
    if (f.rows() != na || f.cols() != na) {
        throw DimensionError("contract_a: contraction does not act on subsystem A");
    }
    const ComplexMatrix &m = z.matrix();
    ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
    // out = sum_{i,k} f(k, i) Z_ik.
    for (Eigen::Index i = 0; i < na; i++) {
        for (Eigen::Index k = 0; k < na; k++) {
            out += f(k, i) * m.block(i * nb, k * nb, nb, nb);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

Complex product_expectation(const BipartiteOperator &z, const ComplexMatrix &f, const ComplexMatrix &g) {
    return (f * contract_b(z, g)).trace();
}

BipartiteOperator swap_subsystems(const BipartiteOperator &z) {
    const Eigen::Index na = static_cast<Eigen::Index>(z.n_a());
    const Eigen::Index nb = static_cast<Eigen::Index>(z.n_b());
    const ComplexMatrix &m = z.matrix();
    ComplexMatrix out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; i++) {
        for (Eigen::Index j = 0; j < nb; j++) {
            for (Eigen::Index k = 0; k < na; k++) {
                for (Eigen::Index l = 0; l < nb; l++) {
                    out(j * na + i, l * na + k) = m(i * nb + j, k * nb + l);
                }
            }
        }
    }
    if (z.is_hermitian()) {
        return BipartiteOperator(z.n_b(), z.n_a(), HermitianMatrix(out));
    }
    return BipartiteOperator(z.n_b(), z.n_a(), std::move(out));
}

}  // namespace hidenorm
