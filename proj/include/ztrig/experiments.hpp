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

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ztrig/matrix.hpp"

namespace ztrig {

/// Which version of the two-matrix Frechet example to build. `trig` uses
/// lower-left entries of opposite sign to `exponential`, so that A^2 = pi^2 I,
/// B^2 = 4 pi^2 I and (A+B)^2 = 25 pi^2 I; that is the form for which the
/// cosine/sine addition formulae hold at t = 1. `exponential` has A^2 = -pi^2 I
/// and satisfies e^A e^B = e^{A+B} instead.
enum class FrechetVariant { trig, exponential };

struct ExperimentConfig {
    double epsilon = 0.1;
    double beta = 1.0;
    double alpha = 1.0;
    double t = 1.0;
    int dim = 10;
    std::uint64_t seed = 42;
    int max_order = 12;
    FrechetVariant frechet_variant = FrechetVariant::trig;

    /// sqrt(1 + beta^2), always derived.
    [[nodiscard]] double lambda() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

// ---------------------------------------------------------------------------
// Matrix files: {"rows": r, "cols": c, "real": [[...]], "imag": [[...]]},
// "imag" optional.

class MatrixFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix parse_matrix_file(const std::filesystem::path& path);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

// ---------------------------------------------------------------------------

/// Taylor series of cos and sin to the given degree with compensated
/// summation; an oracle independent of the exponential route.
std::pair<ComplexMatrix, ComplexMatrix> mat_cos_sin_taylor(const ComplexMatrix& a, int degree = 30);

/// Least-squares line through (x_i, y_i).
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Psi^C = fc I + gc (i sigma_2), Psi^S = fs sigma_1 + gs sigma_3.
struct PauliDecomposition {
    double fc = 0.0;
    double gc = 0.0;
    double fs = 0.0;
    double gs = 0.0;
    double residual_c = 0.0;  // spectral norm of the reconstruction error
    double residual_s = 0.0;
};
PauliDecomposition decompose_pauli(const ComplexMatrix& psi_c, const ComplexMatrix& psi_s);

struct PauliRow {
    int order = 0;
    PauliDecomposition coeffs;
    double err_cos = 0.0;
    double err_sin = 0.0;
    double err_cos_half = 0.0;  // same order at epsilon / 2
    double err_sin_half = 0.0;
    double ratio_cos = 0.0;  // err_cos / err_cos_half
    double ratio_sin = 0.0;
};

struct PauliReport {
    ExperimentConfig config;
    /// ||mat_cos_sin(eps (sigma_1 + beta sigma_3)) - closed form||, max of cos and sin parts.
    double exact_reference_residual = 0.0;
    std::vector<PauliRow> rows;  // orders 1 .. max_order

    [[nodiscard]] nlohmann::json to_json() const;
    void write_csv(std::ostream& os) const;
};

/// X = eps sigma_1, Y = eps beta sigma_3 against the exact
/// cos(eps lambda) I and sin(eps lambda)/lambda (sigma_1 + beta sigma_3).
PauliReport run_pauli(const ExperimentConfig& cfg);

struct DecayRow {
    int order = 0;
    double log10_err_cos = 0.0;
    double log10_err_sin = 0.0;
};

struct DecayReport {
    ExperimentConfig config;
    std::vector<DecayRow> rows;
    LineFit fit_cos;
    LineFit fit_sin;
    /// ||cos(A+B) via e^{i(A+B)} - Taylor cos(A+B)||, max with the sine part.
    double reference_taylor_residual = 0.0;

    [[nodiscard]] nlohmann::json to_json() const;
    void write_csv(std::ostream& os) const;
};

/// Two dim x dim matrices with entries uniform on (0,1) from the seeded
/// generator, each scaled to unit spectral norm.
std::pair<ComplexMatrix, ComplexMatrix> random_unit_pair(int dim, std::uint64_t seed);

/// log10 spectral errors of Psi_n against cos/sin(A+B) for n = 1..max_order.
DecayReport run_random_error_decay(const ExperimentConfig& cfg);

struct FrechetReport {
    ExperimentConfig config;
    ComplexMatrix a;
    ComplexMatrix b;
    double commutator_norm = 0.0;
    double cos_residual = 0.0;  // ||cos((A+B)t) - (cos At cos Bt - sin At sin Bt)||
    double sin_residual = 0.0;  // ||sin((A+B)t) - (sin At cos Bt + cos At sin Bt)||
    double exp_residual = 0.0;  // ||e^{At} e^{Bt} - e^{(A+B)t}||
    bool addition_formulae_hold = false;  // both residuals <= 1e-10

    [[nodiscard]] nlohmann::json to_json() const;
};

std::pair<ComplexMatrix, ComplexMatrix> frechet_pair(double alpha, FrechetVariant variant);
FrechetReport run_frechet(const ExperimentConfig& cfg);

}  // namespace ztrig
