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

#include "ztrig/trig.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace ztrig {

namespace {

void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y, const char* where)
{
    if (x.dim() != y.dim()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch");
    }
}

void require_order(int n, const char* where)
{
    if (n < 1) {
        throw std::invalid_argument(std::string(where) + ": order must be >= 1");
    }
}

double inv_factorial(int n) { return 1.0 / std::tgamma(static_cast<double>(n) + 1.0); }

using Mat = Eigen::MatrixXcd;

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

/// Matrix-valued f_{n,k} recursion; c_[i] holds C_{i+2}.
class NumericRecursion {
public:
    NumericRecursion(const Mat& x, const Mat& y) : x_(x), y_(y) {}

    const Mat& f(int n, int k)
    {
        const auto key = std::make_pair(n, k);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        Mat value = Mat::Zero(x_.rows(), x_.cols());
        if (n == 1) {
            const double sign = k % 2 == 0 ? 1.0 : -1.0;
            Mat adx = y_;
            for (int j = 1; j <= k; ++j) {
                adx = comm(x_, adx);
                Mat t = adx;
                for (int r = 0; r < k - j; ++r) {
                    t = comm(y_, t);
                }
                value += (sign * inv_factorial(j) * inv_factorial(k - j)) * t;
            }
        } else {
            const Mat& cn = c_.at(static_cast<std::size_t>(n - 2));
            for (int j = 0; j <= k / n - 1; ++j) {
                Mat t = f(n - 1, k - n * j);
                for (int r = 0; r < j; ++r) {
                    t = comm(cn, t);
                }
                value += ((j % 2 == 0 ? 1.0 : -1.0) * inv_factorial(j)) * t;
            }
        }
        return memo_.emplace(key, std::move(value)).first->second;
    }

    std::vector<Mat> run(int n_max)
    {
        c_.push_back(0.5 * f(1, 1));
        for (int n = 3; n <= n_max; ++n) {
            c_.push_back(f((n - 1) / 2, n - 1) / static_cast<double>(n));
        }
        return c_;
    }

private:
    Mat x_;
    Mat y_;
    std::vector<Mat> c_;
    std::map<std::pair<int, int>, Mat> memo_;
};

/// i^p for integer p >= 0.
Complex i_power(int p)
{
    switch (p % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

TrigApproximation from_chain(const FactorChain& z, std::vector<ComplexMatrix> c_terms)
{
    return TrigApproximation{z.order, Complex(0.5) * (z.z1 + z.z2), Complex(0.0, -0.5) * (z.z1 - z.z2),
                             std::move(c_terms)};
}

}  // namespace

std::vector<ComplexMatrix> numeric_c_terms(const ComplexMatrix& x, const ComplexMatrix& y, int n_max)
{
    require_same_dim(x, y, "numeric_c_terms");
    if (n_max < 2) {
        throw std::invalid_argument("numeric_c_terms: n_max must be >= 2");
    }
    NumericRecursion rec(x.mat(), y.mat());
    std::vector<ComplexMatrix> out;
    for (auto& m : rec.run(n_max)) {
        out.emplace_back(std::move(m));
    }
    return out;
}

ComplexMatrix zassenhaus_truncated_product(const ComplexMatrix& x, const ComplexMatrix& y, int n)
{
    require_same_dim(x, y, "zassenhaus_truncated_product");
    require_order(n, "zassenhaus_truncated_product");
    ComplexMatrix p = mat_exp(x) * mat_exp(y);
    if (n >= 2) {
        for (const auto& c : numeric_c_terms(x, y, n)) {
            p = p * mat_exp(c);
        }
    }
    return p;
}

TrigApproximation psi_recursive(const ComplexMatrix& x, const ComplexMatrix& y, int n)
{
    require_same_dim(x, y, "psi_recursive");
    require_order(n, "psi_recursive");
    const auto [cx, sx] = mat_cos_sin(x);
    const auto [cy, sy] = mat_cos_sin(y);
    ComplexMatrix pc = cx * cy - sx * sy;
    ComplexMatrix ps = cx * sy + sx * cy;

    std::vector<ComplexMatrix> c_terms;
    if (n >= 2) {
        c_terms = numeric_c_terms(x, y, n);
    }
    for (int m = 2; m <= n; ++m) {
        const ComplexMatrix& c = c_terms[static_cast<std::size_t>(m - 2)];
        const int k = m / 2;
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        if (m % 2 == 0) {
            const ComplexMatrix e = mat_exp(Complex(sign) * c);
            pc = pc * e;
            ps = ps * e;
        } else {
            const auto [cc, sc] = mat_cos_sin(c);
            ComplexMatrix next_c = pc * cc - Complex(sign) * (ps * sc);
            ComplexMatrix next_s = ps * cc + Complex(sign) * (pc * sc);
            pc = std::move(next_c);
            ps = std::move(next_s);
        }
    }
    return TrigApproximation{n, std::move(pc), std::move(ps), std::move(c_terms)};
}

FactorChain factor_chain(const ComplexMatrix& x, const ComplexMatrix& y, int n)
{
    require_same_dim(x, y, "factor_chain");
    require_order(n, "factor_chain");
    const Complex i{0.0, 1.0};
    ComplexMatrix z1 = mat_exp(i * x) * mat_exp(i * y);
    ComplexMatrix z2 = mat_exp(-i * x) * mat_exp(-i * y);
    if (n >= 2) {
        const auto c_terms = numeric_c_terms(x, y, n);
        for (int m = 2; m <= n; ++m) {
            const ComplexMatrix& c = c_terms[static_cast<std::size_t>(m - 2)];
            const Complex hat = i_power(m);
            const Complex tilde = std::conj(hat);  // (-i)^m
            z1 = z1 * mat_exp(hat * c);
            z2 = z2 * mat_exp(tilde * c);
        }
    }
    return FactorChain{std::move(z1), std::move(z2), n};
}

TrigApproximation psi_via_factored_z(const ComplexMatrix& x, const ComplexMatrix& y, int n)
{
    const FactorChain z = factor_chain(x, y, n);
    return from_chain(z, n >= 2 ? numeric_c_terms(x, y, n) : std::vector<ComplexMatrix>{});
}

TrigApproximation left_oriented_psi(const ComplexMatrix& x, const ComplexMatrix& y, int n)
{
    require_same_dim(x, y, "left_oriented_psi");
    require_order(n, "left_oriented_psi");
    const Complex i{0.0, 1.0};
    std::vector<ComplexMatrix> c_terms;
    ComplexMatrix z1 = mat_exp(i * y) * mat_exp(i * x);
    ComplexMatrix z2 = mat_exp(-i * y) * mat_exp(-i * x);
    if (n >= 2) {
        c_terms = numeric_c_terms(x, y, n);
        for (int m = 2; m <= n; ++m) {
            const double bar_sign = m % 2 == 0 ? -1.0 : 1.0;  // (-1)^{m+1}
            const ComplexMatrix cbar = Complex(bar_sign) * c_terms[static_cast<std::size_t>(m - 2)];
            z1 = mat_exp(i_power(m) * cbar) * z1;
            z2 = mat_exp(std::conj(i_power(m)) * cbar) * z2;
        }
    }
    return from_chain(FactorChain{std::move(z1), std::move(z2), n}, std::move(c_terms));
}

ComplexMatrix generalized_identity_eval(const ComplexMatrix& x, const ComplexMatrix& y, int n,
                                        GeneralizedIdentity which)
{
    require_same_dim(x, y, "generalized_identity_eval");
    require_order(n, "generalized_identity_eval");
    const TrigApproximation minus = psi_recursive(x, -y, n);
    const TrigApproximation plus = psi_recursive(x, y, n);
    if (which == GeneralizedIdentity::cos_diff) {
        return minus.psi_c - plus.psi_c;
    }
    return minus.psi_s + plus.psi_s;
}

ComplexMatrix symmetrized_cos(const ComplexMatrix& x, const ComplexMatrix& y)
{
    require_same_dim(x, y, "symmetrized_cos");
    const auto [cx, sx] = mat_cos_sin(x);
    const auto [cy, sy] = mat_cos_sin(y);
    const ComplexMatrix half_comm = Complex(0.5) * commutator(x, y);
    const ComplexMatrix first = (cx * cy - sx * sy) * mat_exp(half_comm);
    const ComplexMatrix second = (cy * cx - sy * sx) * mat_exp(-half_comm);
    return Complex(0.5) * first + Complex(0.5) * second;
}

}  // namespace ztrig
