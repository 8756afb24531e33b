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

#ifndef HIDENORM_LINALG_H
#define HIDENORM_LINALG_H

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace hidenorm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Entrywise deviation from Hermiticity tolerated silently by HermitianMatrix.
inline constexpr double kHermitianTolerance = 1e-12;

/// A square complex matrix equal to its own adjoint.
///
/// Construction symmetrizes the input as (m + m^dagger)/2 and remembers how far the
/// input was from Hermitian, so callers loading data from files can warn or reject.
class HermitianMatrix {
   public:
    explicit HermitianMatrix(const ComplexMatrix &m);

    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix diagonal(std::span<const double> values);
    static HermitianMatrix zero(std::size_t n);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }
    /// max_ij |m_ij - conj(m_ji)| of the matrix handed to the constructor.
    double input_asymmetry() const {
        return asymmetry_;
    }
    bool asymmetry_warning() const {
        return asymmetry_ > kHermitianTolerance;
    }

    HermitianMatrix operator*(double s) const;
    HermitianMatrix operator+(const HermitianMatrix &o) const;
    HermitianMatrix operator-(const HermitianMatrix &o) const;

   private:
    ComplexMatrix m_;
    double asymmetry_ = 0.0;
};

enum class Subsystem { A, B };

/// An operator on C^{n_a} (x) C^{n_b}. Row/column index (i, j) maps to i * n_b + j.
class BipartiteOperator {
   public:
    BipartiteOperator(std::size_t n_a, std::size_t n_b, HermitianMatrix m);
    /// General (not necessarily Hermitian) operator, for the complex-field norm.
    BipartiteOperator(std::size_t n_a, std::size_t n_b, ComplexMatrix m);

    std::size_t n_a() const {
        return n_a_;
    }
    std::size_t n_b() const {
        return n_b_;
    }
    std::size_t dim() const {
        return n_a_ * n_b_;
    }
    std::size_t local_dim(Subsystem s) const {
        return s == Subsystem::A ? n_a_ : n_b_;
    }
    bool is_hermitian() const {
        return hermitian_;
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }
    /// Throws ContractError unless the operator was built as Hermitian.
    HermitianMatrix hermitian() const;
    bool is_zero() const {
        return m_.isZero(0.0);
    }

    BipartiteOperator scaled(double s) const;

   private:
    std::size_t n_a_;
    std::size_t n_b_;
    ComplexMatrix m_;
    bool hermitian_;
};

struct EigenDecomposition {
    RealVector eigenvalues;     // descending
    ComplexMatrix eigenvectors; // columns, unitary
};

EigenDecomposition hermitian_eigen(const HermitianMatrix &m);

double trace_norm(const HermitianMatrix &m);
double trace_norm(const ComplexMatrix &m);
double operator_norm(const ComplexMatrix &m);

/// The Hermitian unitary V sign(Lambda) V^dagger, with sign(0) = +1. It maximizes
/// tr(f m) over Hermitian contractions f, attaining trace_norm(m).
HermitianMatrix hermitian_sign(const HermitianMatrix &m);

/// The contraction f maximizing Re tr(f m) over all complex contractions: V U^dagger
/// for m = U S V^dagger. Returns the identity for m = 0.
ComplexMatrix optimal_contraction_complex(const ComplexMatrix &m);

ComplexMatrix partial_trace(const ComplexMatrix &z, std::size_t n_a, std::size_t n_b, Subsystem keep);
ComplexMatrix partial_trace(const BipartiteOperator &z, Subsystem keep);

/// tr_B[z (1 (x) g)], an n_a x n_a matrix with tr(f m) = tr((f (x) g) z).
ComplexMatrix contract_b(const BipartiteOperator &z, const ComplexMatrix &g);
/// tr_A[z (f (x) 1)], an n_b x n_b matrix with tr(g m) = tr((f (x) g) z).
ComplexMatrix contract_a(const BipartiteOperator &z, const ComplexMatrix &f);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// tr((f (x) g) z) without forming the Kronecker product.
Complex product_expectation(const BipartiteOperator &z, const ComplexMatrix &f, const ComplexMatrix &g);

/// The operator S z S with S the swap C^{n_a} (x) C^{n_b} -> C^{n_b} (x) C^{n_a}.
BipartiteOperator swap_subsystems(const BipartiteOperator &z);

}  // namespace hidenorm

#endif
