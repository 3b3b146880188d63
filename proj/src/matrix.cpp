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

#include "ztrig/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace ztrig {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim())
                                    + " vs " + std::to_string(b.dim()) + ")");
    }
}

constexpr int kTaylorDegree = 18;
constexpr double kScaledNormTarget = 0.5;

}  // namespace

ComplexMatrix::ComplexMatrix(Storage m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw std::invalid_argument("ComplexMatrix: matrix must be square and non-empty");
    }
    if (!m_.allFinite()) {
        throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix ComplexMatrix::zero(int dim) { return ComplexMatrix(Storage::Zero(dim, dim)); }
ComplexMatrix ComplexMatrix::identity(int dim) { return ComplexMatrix(Storage::Identity(dim, dim)); }
ComplexMatrix ComplexMatrix::from_real(const Eigen::MatrixXd& m) { return ComplexMatrix(m.cast<Complex>()); }

double ComplexMatrix::max_imag() const { return m_.imag().cwiseAbs().maxCoeff(); }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "operator+");
    return ComplexMatrix(a.m_ + b.m_, ComplexMatrix::Unchecked{});
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "operator-");
    return ComplexMatrix(a.m_ - b.m_, ComplexMatrix::Unchecked{});
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "operator*");
    return ComplexMatrix(a.m_ * b.m_, ComplexMatrix::Unchecked{});
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(s * a.m_, ComplexMatrix::Unchecked{}); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix pauli(int index)
{
    const Complex i{0.0, 1.0};
    ComplexMatrix::Storage m(2, 2);
    switch (index) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
    return ComplexMatrix(m);
}

ComplexMatrix mat_exp(const ComplexMatrix& a)
{
    const Eigen::MatrixXcd& m = a.mat();
    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > kScaledNormTarget) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / kScaledNormTarget)));
    }
    const Eigen::MatrixXcd scaled = m * std::ldexp(1.0, -squarings);

    // Horner form of sum_{k<=18} A^k / k!.
    const auto n = m.rows();
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
    for (int k = kTaylorDegree; k >= 1; --k) {
        result = Eigen::MatrixXcd::Identity(n, n) + (scaled * result) / static_cast<double>(k);
    }
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    return ComplexMatrix(std::move(result));
}

std::pair<ComplexMatrix, ComplexMatrix> mat_cos_sin(const ComplexMatrix& a)
{
    const Complex i{0.0, 1.0};
    const ComplexMatrix ep = mat_exp(i * a);
    const ComplexMatrix em = mat_exp(-i * a);
    return {Complex(0.5) * (ep + em), Complex(0.0, -0.5) * (ep - em)};
}

ComplexMatrix eval_lie_expr(const LieExpr& e, const ComplexMatrix& x, const ComplexMatrix& y)
{
    require_same_dim(x, y, "eval_lie_expr");
    std::unordered_map<const void*, Eigen::MatrixXcd> cache;
    const auto eval = [&](const auto& self, const LieTerm& t) -> const Eigen::MatrixXcd& {
        if (auto it = cache.find(t.id()); it != cache.end()) {
            return it->second;
        }
        Eigen::MatrixXcd v;
        if (t.is_leaf()) {
            v = t.generator() == Generator::X ? x.mat() : y.mat();
        } else {
            const Eigen::MatrixXcd l = self(self, t.left());
            const Eigen::MatrixXcd& r = self(self, t.right());
            v = l * r - r * l;
        }
        return cache.emplace(t.id(), std::move(v)).first->second;
    };

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(x.dim(), x.dim());
    for (const auto& [t, c] : e.terms()) {
        acc += c.to_double() * eval(eval, t);
    }
    return ComplexMatrix(std::move(acc));
}

double two_norm_est(const ComplexMatrix& a)
{
    constexpr int kMaxIterations = 1000;
    constexpr double kRelTol = 1e-10;

    const Eigen::MatrixXcd& m = a.mat();
    const auto n = m.rows();
    // Start from a^H applied to a fixed ramp, plus the ramp itself so the
    // start vector cannot vanish for nonzero a.
    Eigen::VectorXcd ramp(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        ramp(j) = 1.0 + 0.1 * static_cast<double>(j) / static_cast<double>(n);
    }
    Eigen::VectorXcd v = m.adjoint() * ramp + 1e-3 * ramp;
    if (v.norm() == 0.0) {
        return 0.0;
    }
    v.normalize();

    // ||a v|| is the Rayleigh estimate of sigma_max for unit v.
    double sigma = (m * v).norm();
    for (int it = 0; it < kMaxIterations; ++it) {
        Eigen::VectorXcd w = m.adjoint() * (m * v);
        const double wn = w.norm();
        if (wn == 0.0) {
            return 0.0;
        }
        v = w / wn;
        const double next = (m * v).norm();
        if (std::abs(next - sigma) <= kRelTol * next) {
            return next;
        }
        sigma = next;
    }
    return sigma;
}

}  // namespace ztrig
