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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "test_support.hpp"
#include "ztrig/experiments.hpp"
#include "ztrig/trig.hpp"

using namespace ztrig;
using ztrig::testing::svd_norm;

namespace {

double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return svd_norm(a - b); }

const Complex I{0.0, 1.0};

struct Exact {
    ComplexMatrix c;
    ComplexMatrix s;
};

Exact exact(const ComplexMatrix& x, const ComplexMatrix& y)
{
    auto [c, s] = mat_cos_sin(x + y);
    return {c, s};
}

}  // namespace

TEST_CASE("numeric C terms match the symbolic ones")
{
    std::mt19937_64 rng(29);
    const ComplexMatrix x = ztrig::testing::random_matrix(rng, 4, 0.6, true);
    const ComplexMatrix y = ztrig::testing::random_matrix(rng, 4, 0.4, true);
    const auto sym = zassenhaus_terms(8);
    const auto num = numeric_c_terms(x, y, 8);
    REQUIRE(num.size() == sym.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
        CAPTURE(i + 2);
        CHECK(dist(num[i], eval_lie_expr(sym[i], x, y)) < 1e-14);
    }
    CHECK_THROWS_AS(numeric_c_terms(x, y, 1), std::invalid_argument);
    CHECK_THROWS_AS(numeric_c_terms(x, ComplexMatrix::identity(3), 4), std::invalid_argument);
}

TEST_CASE("zassenhaus_truncated_product")
{
    std::mt19937_64 rng(31);
    const auto [cx, cy] = ztrig::testing::diagonal_pair(rng, 4, 1.0);
    CHECK(dist(zassenhaus_truncated_product(cx, cy, 1), mat_exp(cx + cy)) < 1e-13);

    const auto [nx, ny] = ztrig::testing::nilpotent_pair(2.0);
    const Eigen::MatrixXcd ref = ztrig::testing::taylor_exp((nx + ny).mat(), 6);
    CHECK(svd_norm(zassenhaus_truncated_product(nx, ny, 2).mat() - ref) < 1e-14);

    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix x = ztrig::testing::random_matrix(rng, 4, 0.5);
        const ComplexMatrix y = ztrig::testing::random_matrix(rng, 4, 0.4);
        const ComplexMatrix e = mat_exp(x + y);
        CHECK(dist(zassenhaus_truncated_product(x, y, 10), e) < dist(zassenhaus_truncated_product(x, y, 4), e));
    }
}

TEST_CASE("psi_recursive exactness tiers")
{
    std::mt19937_64 rng(37);
    const auto [cx, cy] = ztrig::testing::diagonal_pair(rng, 5, 2.0);
    const auto p1 = psi_recursive(cx, cy, 1);
    const Exact e1 = exact(cx, cy);
    CHECK(dist(p1.psi_c, e1.c) < 1e-14);
    CHECK(dist(p1.psi_s, e1.s) < 1e-14);
    CHECK(p1.c_terms_used.empty());

    // Vanishing double commutators make the order-2 factorization exact.
    for (const double scale : {0.5, 1.0, 3.0}) {
        const auto [x, y] = ztrig::testing::nilpotent_pair(scale);
        const auto p2 = psi_recursive(x, y, 2);
        Eigen::MatrixXcd c_ref = Eigen::MatrixXcd::Identity(3, 3);
        Eigen::MatrixXcd s_ref = (x + y).mat();
        const Eigen::MatrixXcd sq = s_ref * s_ref;
        c_ref -= 0.5 * sq;
        s_ref -= sq * s_ref / 6.0;
        CHECK(svd_norm(p2.psi_c.mat() - c_ref) < 1e-13);
        CHECK(svd_norm(p2.psi_s.mat() - s_ref) < 1e-13);
        CHECK(p2.c_terms_used.size() == 1);
    }

    CHECK_THROWS_AS(psi_recursive(cx, cy, 0), std::invalid_argument);
    CHECK_THROWS_AS(psi_recursive(cx, ComplexMatrix::identity(2), 3), std::invalid_argument);
}

TEST_CASE("psi_recursive at order 4 equals the explicit product form")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix x = ztrig::testing::random_matrix(rng, 4, 0.5);
        const ComplexMatrix y = ztrig::testing::random_matrix(rng, 4, 0.5);
        const auto c = numeric_c_terms(x, y, 4);
        const auto [cosx, sinx] = mat_cos_sin(x);
        const auto [cosy, siny] = mat_cos_sin(y);
        const auto [cos3, sin3] = mat_cos_sin(c[1]);
        const ComplexMatrix em2 = mat_exp(-c[0]);
        const ComplexMatrix e4 = mat_exp(c[2]);
        const ComplexMatrix a = cosx * cosy - sinx * siny;
        const ComplexMatrix b = cosx * siny + sinx * cosy;
        const ComplexMatrix ref_c = (a * em2 * cos3 + b * em2 * sin3) * e4;
        const ComplexMatrix ref_s = ((sinx * siny - cosx * cosy) * em2 * sin3 + b * em2 * cos3) * e4;
        const auto p = psi_recursive(x, y, 4);
        CHECK(dist(p.psi_c, ref_c) <= 1e-13);
        CHECK(dist(p.psi_s, ref_s) <= 1e-13);
    }
}

TEST_CASE("recursive and factored constructions agree")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        const double nx = 0.1 + 0.08 * trial;
        const double ny = 0.5 - 0.06 * trial;
        const ComplexMatrix x = ztrig::testing::random_matrix(rng, 6, nx);
        const ComplexMatrix y = ztrig::testing::random_matrix(rng, 6, ny);
        const double tol = 1e-12 * std::exp(2.0 * (nx + ny));
        for (int n = 1; n <= 10; ++n) {
            CAPTURE(n);
            const auto r = psi_recursive(x, y, n);
            const auto f = psi_via_factored_z(x, y, n);
            CHECK(dist(r.psi_c, f.psi_c) <= tol);
            CHECK(dist(r.psi_s, f.psi_s) <= tol);
        }
    }
}

TEST_CASE("factor_chain")
{
    std::mt19937_64 rng(47);
    const ComplexMatrix x = ztrig::testing::random_matrix(rng, 5, 0.7);
    const ComplexMatrix y = ztrig::testing::random_matrix(rng, 5, 0.3);
    for (const int n : {1, 2, 5, 8}) {
        const FactorChain ch = factor_chain(x, y, n);
        CHECK(ch.order == n);
        CHECK(dist(ch.z2, ch.z1.conjugate()) <= 1e-12);
    }
    const FactorChain zero = factor_chain(ComplexMatrix::zero(3), ComplexMatrix::zero(3), 6);
    CHECK(dist(zero.z1, ComplexMatrix::identity(3)) == 0.0);
    for (const int n : {1, 3, 6}) {
        const auto p = psi_via_factored_z(ComplexMatrix::zero(3), ComplexMatrix::zero(3), n);
        CHECK(dist(p.psi_c, ComplexMatrix::identity(3)) == 0.0);
        CHECK(dist(p.psi_s, ComplexMatrix::zero(3)) == 0.0);
    }
}

TEST_CASE("realness of the approximations for real input")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix x = ztrig::testing::random_matrix(rng, 5, 0.6);
        const ComplexMatrix y = ztrig::testing::random_matrix(rng, 5, 0.4);
        for (const int n : {1, 4, 9}) {
            const auto r = psi_recursive(x, y, n);
            const auto f = psi_via_factored_z(x, y, n);
            const auto l = left_oriented_psi(x, y, n);
            CHECK(r.psi_c.max_imag() <= 1e-12);
            CHECK(r.psi_s.max_imag() <= 1e-12);
            CHECK(f.psi_c.max_imag() <= 1e-12);
            CHECK(f.psi_s.max_imag() <= 1e-12);
            CHECK(l.psi_c.max_imag() <= 1e-12);
            CHECK(l.psi_s.max_imag() <= 1e-12);
        }
    }
}

TEST_CASE("complex input goes through the factored chain")
{
    std::mt19937_64 rng(59);
    const ComplexMatrix x = ztrig::testing::random_matrix(rng, 4, 0.3, true);
    const ComplexMatrix y = ztrig::testing::random_matrix(rng, 4, 0.3, true);
    const Exact e = exact(x, y);
    const auto f = psi_via_factored_z(x, y, 10);
    CHECK(dist(f.psi_c, e.c) < 1e-6);
    CHECK(dist(f.psi_s, e.s) < 1e-6);
}

TEST_CASE("error decays log-linearly in the order")
{
    std::mt19937_64 rng(61);
    for (const int dim : {3, 6, 10}) {
        const ComplexMatrix x = ztrig::testing::random_matrix(rng, dim, 0.5);
        const ComplexMatrix y = ztrig::testing::random_matrix(rng, dim, 0.5);
        const Exact e = exact(x, y);
        std::vector<double> n_values;
        std::vector<double> log_c;
        std::vector<double> log_s;
        for (int n = 1; n <= 12; ++n) {
            const auto p = psi_recursive(x, y, n);
            n_values.push_back(n);
            log_c.push_back(std::log10(dist(p.psi_c, e.c) + 1e-300));
            log_s.push_back(std::log10(dist(p.psi_s, e.s) + 1e-300));
        }
        const LineFit fc = fit_line(n_values, log_c);
        const LineFit fs = fit_line(n_values, log_s);
        CAPTURE(dim);
        CHECK(fc.slope < 0.0);
        CHECK(fc.r_squared >= 0.9);
        CHECK(fs.slope < 0.0);
        CHECK(fs.r_squared >= 0.9);
    }
}

TEST_CASE("left_oriented_psi")
{
    std::mt19937_64 rng(67);
    const auto [cx, cy] = ztrig::testing::commuting_pair(rng, 4, 0.8);
    for (const int n : {1, 3, 6}) {
        const auto l = left_oriented_psi(cx, cy, n);
        const auto r = psi_recursive(cx, cy, n);
        CHECK(dist(l.psi_c, r.psi_c) < 1e-13);
        CHECK(dist(l.psi_s, r.psi_s) < 1e-13);
    }

    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix x = ztrig::testing::random_matrix(rng, 4, 0.45);
        const ComplexMatrix y = ztrig::testing::random_matrix(rng, 4, 0.35);
        const Exact e = exact(x, y);
        const auto l2 = left_oriented_psi(x, y, 2);
        const auto l8 = left_oriented_psi(x, y, 8);
        CHECK(dist(l8.psi_c, e.c) < dist(l2.psi_c, e.c));
        CHECK(dist(l8.psi_s, e.s) < dist(l2.psi_s, e.s));
    }

    const auto [nx, ny] = ztrig::testing::nilpotent_pair(1.5);
    const Exact en = exact(nx, ny);
    const auto ln = left_oriented_psi(nx, ny, 2);
    CHECK(dist(ln.psi_c, en.c) < 1e-13);
    CHECK(dist(ln.psi_s, en.s) < 1e-13);
}

TEST_CASE("generalized identities")
{
    std::mt19937_64 rng(71);
    const auto [x, y] = ztrig::testing::diagonal_pair(rng, 4, 1.2);
    const auto [cx, sx] = mat_cos_sin(x);
    const auto [cy, sy] = mat_cos_sin(y);
    CHECK(dist(generalized_identity_eval(x, y, 1, GeneralizedIdentity::cos_diff), Complex(2.0) * (sx * sy)) < 1e-13);
    CHECK(dist(generalized_identity_eval(x, y, 1, GeneralizedIdentity::sin_sum), Complex(2.0) * (sx * cy)) < 1e-13);

    const ComplexMatrix z = ComplexMatrix::zero(4);
    CHECK(dist(generalized_identity_eval(x, z, 3, GeneralizedIdentity::cos_diff), z) < 1e-15);
    CHECK(dist(generalized_identity_eval(x, z, 3, GeneralizedIdentity::sin_sum), Complex(2.0) * sx) < 1e-15);

    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix a = ztrig::testing::random_matrix(rng, 4, 0.3);
        const ComplexMatrix b = ztrig::testing::random_matrix(rng, 4, 0.25);
        const double tol = 10.0 * std::pow(0.55, 5);
        const auto [cm, sm] = mat_cos_sin(a - b);
        const auto [cp, sp] = mat_cos_sin(a + b);
        CHECK(dist(generalized_identity_eval(a, b, 4, GeneralizedIdentity::cos_diff), cm - cp) <= tol);
        CHECK(dist(generalized_identity_eval(a, b, 4, GeneralizedIdentity::sin_sum), sm + sp) <= tol);
    }
    CHECK_THROWS_AS(generalized_identity_eval(x, y, 0, GeneralizedIdentity::sin_sum), std::invalid_argument);
}

TEST_CASE("symmetrized_cos")
{
    std::mt19937_64 rng(73);
    const auto [cx, cy] = ztrig::testing::commuting_pair(rng, 4, 1.0);
    CHECK(dist(symmetrized_cos(cx, cy), exact(cx, cy).c) < 1e-13);

    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix x = ztrig::testing::random_matrix(rng, 5, 1.0);
        const ComplexMatrix y = ztrig::testing::random_matrix(rng, 5, 0.8);
        CHECK(dist(symmetrized_cos(x, y), symmetrized_cos(y, x)) <= 1e-15);
    }

    const auto [nx, ny] = ztrig::testing::nilpotent_pair(2.0);
    const ComplexMatrix ref = exact(nx, ny).c;
    CHECK(dist(symmetrized_cos(nx, ny), ref) < 1e-13);
    CHECK(dist(symmetrized_cos(ny, nx), ref) < 1e-13);
    CHECK_THROWS_AS(symmetrized_cos(nx, ComplexMatrix::identity(2)), std::invalid_argument);
}
