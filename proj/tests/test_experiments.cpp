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
#include <filesystem>
#include <numbers>
#include <sstream>

#include "test_support.hpp"
#include "ztrig/experiments.hpp"

using namespace ztrig;
using ztrig::testing::svd_norm;

TEST_CASE("parse_matrix_json")
{
    const ComplexMatrix s1 = parse_matrix_json(R"({"rows":2,"cols":2,"real":[[0,1],[1,0]]})");
    CHECK(svd_norm(s1 - pauli(1)) == 0.0);

    const ComplexMatrix s2 =
        parse_matrix_json(R"({"rows":2,"cols":2,"real":[[0,0],[0,0]],"imag":[[0,-1],[1,0]]})");
    CHECK(svd_norm(s2 - pauli(2)) == 0.0);

    const auto message = [](const std::string& text) {
        try {
            parse_matrix_json(text);
        } catch (const MatrixFileError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message(R"({"rows":2,"cols":2})").find("\"real\"") != std::string::npos);
    CHECK(message(R"({"cols":2,"real":[[1,2],[3,4]]})").find("\"rows\"") != std::string::npos);
    CHECK(message(R"({"rows":2,"cols":3,"real":[[1,2,3],[4,5,6]]})").find("square") != std::string::npos);
    CHECK(message(R"({"rows":2,"cols":2,"real":[[1,2],[3]]})") != "no error");
    CHECK(message(R"({"rows":1,"cols":1,"real":[["a"]]})") != "no error");
    CHECK(message("{\n  \"rows\": 2,\n  \"cols\": 2\n  \"real\": []\n}").find("line 4") != std::string::npos);
}

TEST_CASE("matrix files round-trip")
{
    std::mt19937_64 rng(83);
    const ComplexMatrix m = ztrig::testing::random_matrix(rng, 5, 3.0, true);
    const auto path = std::filesystem::temp_directory_path() / "ztrig_roundtrip_test.json";
    write_matrix_file(path, m);
    const ComplexMatrix back = parse_matrix_file(path);
    std::filesystem::remove(path);
    CHECK(back.mat() == m.mat());

    CHECK_FALSE(matrix_to_json(pauli(1)).contains("imag"));
    CHECK(matrix_to_json(pauli(2)).contains("imag"));
    CHECK_THROWS_AS(parse_matrix_file("/nonexistent/ztrig.json"), MatrixFileError);
}

TEST_CASE("config")
{
    ExperimentConfig cfg;
    CHECK(cfg.lambda() == doctest::Approx(std::sqrt(2.0)));
    cfg.beta = 3.0;
    CHECK(cfg.lambda() == doctest::Approx(std::sqrt(10.0)));
    const auto j = cfg.to_json();
    CHECK(j.at("seed") == 42);
    CHECK(j.at("lambda").get<double>() == doctest::Approx(std::sqrt(10.0)));
    CHECK(j.at("frechet_variant") == "trig");
}

TEST_CASE("fit_line")
{
    const LineFit f = fit_line({1, 2, 3, 4}, {3, 5, 7, 9});
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    CHECK(f.r_squared == doctest::Approx(1.0));
    CHECK_THROWS_AS(fit_line({1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(fit_line({1, 2}, {2}), std::invalid_argument);
}

TEST_CASE("Taylor cos/sin agrees with the exponential route")
{
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix a = ztrig::testing::random_matrix(rng, 6, 2.0);
        const auto [c, s] = mat_cos_sin(a);
        const auto [ct, st] = mat_cos_sin_taylor(a);
        CHECK(svd_norm(c - ct) < 1e-12);
        CHECK(svd_norm(s - st) < 1e-12);
    }
}

TEST_CASE("Pauli experiment")
{
    ExperimentConfig cfg;
    cfg.max_order = 10;
    const PauliReport r = run_pauli(cfg);
    REQUIRE(r.rows.size() == 10);
    CHECK(r.exact_reference_residual <= 1e-13);

    // Closed form: cos(eps(s1 + beta s3)) = cos(eps lambda) I.
    const double el = cfg.epsilon * cfg.lambda();
    const auto [c, s] = mat_cos_sin(Complex(cfg.epsilon) * (pauli(1) + Complex(cfg.beta) * pauli(3)));
    CHECK(svd_norm(c - Complex(std::cos(el)) * ComplexMatrix::identity(2)) < 1e-15);
    CHECK(svd_norm(s - Complex(std::sin(el) / cfg.lambda()) * (pauli(1) + Complex(cfg.beta) * pauli(3))) < 1e-15);

    for (const auto& row : r.rows) {
        CHECK(row.coeffs.residual_c <= 1e-12);
        CHECK(row.coeffs.residual_s <= 1e-12);
    }
    // Even orders shrink the commutator coefficient monotonically.
    for (const int n : {2, 4, 6}) {
        CHECK(std::abs(r.rows[static_cast<std::size_t>(n + 1)].coeffs.gc) <
              std::abs(r.rows[static_cast<std::size_t>(n - 1)].coeffs.gc));
    }
    CHECK(std::abs(r.rows[7].coeffs.gc) < 1e-9);
    CHECK(r.rows[7].ratio_cos >= std::pow(2.0, 7.5));
    CHECK(r.rows[7].ratio_cos <= std::pow(2.0, 10.5));
    CHECK(r.rows[9].coeffs.fc == doctest::Approx(std::cos(el)).epsilon(1e-12));

    std::ostringstream os;
    r.write_csv(os);
    CHECK(os.str().find("# seed=42") != std::string::npos);
    CHECK(os.str().find("n,fc,gc,fs,gs,err_cos") != std::string::npos);
    CHECK(r.to_json().at("config").at("epsilon") == 0.1);

    cfg.max_order = 1;
    CHECK_THROWS_AS(run_pauli(cfg), std::invalid_argument);
    cfg.max_order = 4;
    cfg.epsilon = 0.0;
    CHECK_THROWS_AS(run_pauli(cfg), std::invalid_argument);
}

TEST_CASE("random error decay")
{
    ExperimentConfig cfg;
    const DecayReport r = run_random_error_decay(cfg);
    REQUIRE(r.rows.size() == 12);
    CHECK(r.fit_cos.slope < 0.0);
    CHECK(r.fit_cos.r_squared >= 0.9);
    CHECK(r.fit_sin.slope < 0.0);
    CHECK(r.fit_sin.r_squared >= 0.9);
    CHECK(r.rows[11].log10_err_cos < r.rows[1].log10_err_cos);
    CHECK(r.reference_taylor_residual <= 1e-10);

    std::ostringstream a;
    std::ostringstream b;
    r.write_csv(a);
    run_random_error_decay(cfg).write_csv(b);
    CHECK(a.str() == b.str());

    for (const std::uint64_t seed : {1u, 7u, 1234u}) {
        cfg.seed = seed;
        const DecayReport rs = run_random_error_decay(cfg);
        CHECK(rs.fit_cos.slope < 0.0);
        CHECK(rs.fit_cos.r_squared >= 0.9);
    }

    const auto [x, y] = random_unit_pair(10, 42);
    CHECK(svd_norm(x) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(svd_norm(y) == doctest::Approx(1.0).epsilon(1e-8));
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            CHECK(x(i, j).real() > 0.0);
            CHECK(x(i, j).imag() == 0.0);
        }
    }
}

TEST_CASE("Frechet pair")
{
    const auto [a, b] = frechet_pair(1.0, FrechetVariant::exponential);
    CHECK(a(0, 1).real() == doctest::Approx(std::numbers::pi));
    CHECK(a(1, 0).real() == doctest::Approx(-std::numbers::pi));
    CHECK(b(0, 1).real() == doctest::Approx(std::numbers::pi * (10.0 + 4.0 * std::sqrt(6.0))));
    CHECK(b(1, 0).real() == doctest::Approx(std::numbers::pi * (-10.0 + 4.0 * std::sqrt(6.0))));

    ExperimentConfig cfg;
    for (const double alpha : {1.0, 2.0}) {
        cfg.alpha = alpha;
        const FrechetReport r = run_frechet(cfg);
        CAPTURE(alpha);
        CHECK(r.commutator_norm > 0.1);
        CHECK(r.cos_residual <= 1e-10);
        CHECK(r.sin_residual <= 1e-10);
        CHECK(r.addition_formulae_hold);
        CHECK(r.to_json().at("verdict") == "addition formulae hold");
    }

    // The exponential pair commutes under the exponential map instead.
    cfg.alpha = 1.0;
    cfg.frechet_variant = FrechetVariant::exponential;
    const FrechetReport expo = run_frechet(cfg);
    CHECK(expo.exp_residual <= 1e-10);
    CHECK(expo.cos_residual > 1.0);
    CHECK_FALSE(expo.addition_formulae_hold);

    cfg.frechet_variant = FrechetVariant::trig;
    cfg.t = 0.5;
    CHECK_FALSE(run_frechet(cfg).addition_formulae_hold);
    cfg.alpha = 0.0;
    CHECK_THROWS_AS(run_frechet(cfg), std::invalid_argument);
}
