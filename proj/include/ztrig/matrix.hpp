/*
 * Copyright 2026 The ztrig Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "ztrig/lie.hpp"

namespace ztrig {

using Complex = std::complex<double>;

/// Dense square matrix of complex doubles with finite entries.
class ComplexMatrix {
public:
    using Storage = Eigen::MatrixXcd;

    /// Throws std::invalid_argument if m is not square or has non-finite entries.
    explicit ComplexMatrix(Storage m);
    static ComplexMatrix zero(int dim);
    static ComplexMatrix identity(int dim);
    static ComplexMatrix from_real(const Eigen::MatrixXd& m);

    [[nodiscard]] int dim() const { return static_cast<int>(m_.rows()); }
    [[nodiscard]] const Storage& mat() const { return m_; }
    [[nodiscard]] Complex operator()(int r, int c) const { return m_(r, c); }

    [[nodiscard]] ComplexMatrix adjoint() const { return ComplexMatrix(m_.adjoint(), Unchecked{}); }
    [[nodiscard]] ComplexMatrix conjugate() const { return ComplexMatrix(m_.conjugate(), Unchecked{}); }
    /// Largest |imag| over all entries.
    [[nodiscard]] double max_imag() const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
    ComplexMatrix operator-() const { return ComplexMatrix(-m_, Unchecked{}); }

private:
    struct Unchecked {};
    ComplexMatrix(Storage m, Unchecked) : m_(std::move(m)) {}

    Storage m_;
};

/// [a, b] = ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pauli matrices sigma_1, sigma_2, sigma_3 (index 1..3).
ComplexMatrix pauli(int index);

/// Matrix exponential by scaling and squaring with a degree-18 Taylor
/// polynomial. The argument is scaled by 2^-s until its 1-norm is at most
/// 0.5, then the result is squared s times.
ComplexMatrix mat_exp(const ComplexMatrix& a);

/// (cos a, sin a) through e^{ia} and e^{-ia}.
std::pair<ComplexMatrix, ComplexMatrix> mat_cos_sin(const ComplexMatrix& a);

/// Substitutes x for X and y for Y and evaluates every commutator tree.
ComplexMatrix eval_lie_expr(const LieExpr& e, const ComplexMatrix& x, const ComplexMatrix& y);

/// Spectral norm by power iteration on a^H a.
double two_norm_est(const ComplexMatrix& a);

}  // namespace ztrig
