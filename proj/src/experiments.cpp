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

#include "ztrig/experiments.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "ztrig/trig.hpp"

namespace ztrig {

using nlohmann::json;

namespace {

std::string variant_name(FrechetVariant v) { return v == FrechetVariant::trig ? "trig" : "exponential"; }

/// (line, column) of a byte offset, both 1-based.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Eigen::MatrixXd read_array(const json& doc, const char* field, long rows, long cols)
{
    const json& arr = doc.at(field);
    if (!arr.is_array() || static_cast<long>(arr.size()) != rows) {
        throw MatrixFileError(std::string("matrix file: field \"") + field + "\" must be an array of "
                              + std::to_string(rows) + " rows");
    }
    Eigen::MatrixXd m(rows, cols);
    for (long r = 0; r < rows; ++r) {
        const json& row = arr[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<long>(row.size()) != cols) {
            throw MatrixFileError(std::string("matrix file: row ") + std::to_string(r) + " of \"" + field
                                  + "\" must have " + std::to_string(cols) + " entries");
        }
        for (long c = 0; c < cols; ++c) {
            const json& v = row[static_cast<std::size_t>(c)];
            if (!v.is_number()) {
                throw MatrixFileError(std::string("matrix file: non-numeric entry in \"") + field + "\"");
            }
            m(r, c) = v.get<double>();
            if (!std::isfinite(m(r, c))) {
                throw MatrixFileError(std::string("matrix file: non-finite entry in \"") + field + "\"");
            }
        }
    }
    return m;
}

json real_matrix_json(const Eigen::MatrixXd& m)
{
    json rows = json::array();
    for (long r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (long c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json line_fit_json(const LineFit& f)
{
    return {{"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}};
}

/// Uniform double on the open interval (0, 1) from the top 53 bits.
double open_unit(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; }

ComplexMatrix pauli_cos_exact(const ExperimentConfig& cfg, double eps)
{
    return Complex(std::cos(eps * cfg.lambda())) * ComplexMatrix::identity(2);
}

ComplexMatrix pauli_sin_exact(const ExperimentConfig& cfg, double eps)
{
    const double lam = cfg.lambda();
    return Complex(std::sin(eps * lam) / lam) * (pauli(1) + Complex(cfg.beta) * pauli(3));
}

std::pair<double, double> pauli_errors(const ExperimentConfig& cfg, double eps, int order)
{
    const ComplexMatrix x = Complex(eps) * pauli(1);
    const ComplexMatrix y = Complex(eps * cfg.beta) * pauli(3);
    const TrigApproximation psi = psi_recursive(x, y, order);
    return {two_norm_est(psi.psi_c - pauli_cos_exact(cfg, eps)), two_norm_est(psi.psi_s - pauli_sin_exact(cfg, eps))};
}

}  // namespace

double ExperimentConfig::lambda() const { return std::sqrt(1.0 + beta * beta); }

json ExperimentConfig::to_json() const
{
    return {{"epsilon", epsilon}, {"beta", beta},   {"lambda", lambda()},    {"alpha", alpha},
            {"t", t},             {"dim", dim},     {"seed", seed},          {"max_order", max_order},
            {"frechet_variant", variant_name(frechet_variant)}};
}

// ---------------------------------------------------------------------------

ComplexMatrix parse_matrix_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw MatrixFileError("matrix file: parse error at line " + std::to_string(line) + ", column "
                              + std::to_string(col) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw MatrixFileError("matrix file: top level must be an object");
    }
    for (const char* field : {"rows", "cols", "real"}) {
        if (!doc.contains(field)) {
            throw MatrixFileError(std::string("matrix file: missing field \"") + field + "\"");
        }
    }
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
        throw MatrixFileError("matrix file: \"rows\" and \"cols\" must be integers");
    }
    const long rows = doc["rows"].get<long>();
    const long cols = doc["cols"].get<long>();
    if (rows <= 0 || cols <= 0) {
        throw MatrixFileError("matrix file: \"rows\" and \"cols\" must be positive");
    }
    const Eigen::MatrixXd re = read_array(doc, "real", rows, cols);
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(rows, cols);
    if (doc.contains("imag")) {
        im = read_array(doc, "imag", rows, cols);
    }
    if (rows != cols) {
        throw MatrixFileError("matrix file: matrix must be square, got " + std::to_string(rows) + "x"
                              + std::to_string(cols));
    }
    Eigen::MatrixXcd m(rows, cols);
    m.real() = re;
    m.imag() = im;
    return ComplexMatrix(std::move(m));
}

ComplexMatrix parse_matrix_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw MatrixFileError("matrix file: cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_matrix_json(ss.str());
    } catch (const MatrixFileError& e) {
        throw MatrixFileError(path.string() + ": " + e.what());
    }
}

json matrix_to_json(const ComplexMatrix& m)
{
    json doc = {{"rows", m.dim()}, {"cols", m.dim()}, {"real", real_matrix_json(m.mat().real())}};
    if (m.max_imag() != 0.0) {
        doc["imag"] = real_matrix_json(m.mat().imag());
    }
    return doc;
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m)
{
    std::ofstream out(path);
    if (!out) {
        throw MatrixFileError("matrix file: cannot write " + path.string());
    }
    out << matrix_to_json(m).dump(2) << '\n';
}

// ---------------------------------------------------------------------------

std::pair<ComplexMatrix, ComplexMatrix> mat_cos_sin_taylor(const ComplexMatrix& a, int degree)
{
    const auto n = a.dim();
    const Eigen::MatrixXcd& m = a.mat();
    Eigen::MatrixXcd cos_sum = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd sin_sum = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd cos_comp = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd sin_comp = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);  // a^k / k!

    const auto kahan_add = [](Eigen::MatrixXcd& sum, Eigen::MatrixXcd& comp, const Eigen::MatrixXcd& v) {
        const Eigen::MatrixXcd yv = v - comp;
        const Eigen::MatrixXcd t = sum + yv;
        comp = (t - sum) - yv;
        sum = t;
    };

    for (int k = 0; k <= degree; ++k) {
        if (k > 0) {
            term = (term * m) / static_cast<double>(k);
        }
        const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
        if (k % 2 == 0) {
            kahan_add(cos_sum, cos_comp, sign * term);
        } else {
            kahan_add(sin_sum, sin_comp, sign * term);
        }
    }
    return {ComplexMatrix(std::move(cos_sum)), ComplexMatrix(std::move(sin_sum))};
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_line: need at least two points of matching length");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

PauliDecomposition decompose_pauli(const ComplexMatrix& psi_c, const ComplexMatrix& psi_s)
{
    if (psi_c.dim() != 2 || psi_s.dim() != 2) {
        throw std::invalid_argument("decompose_pauli: expects 2x2 matrices");
    }
    const ComplexMatrix j = Complex(0.0, 1.0) * pauli(2);  // [[0,1],[-1,0]]
    PauliDecomposition d;
    d.fc = 0.5 * psi_c.mat().trace().real();
    d.gc = 0.5 * (psi_c.mat() * j.mat().adjoint()).trace().real();
    d.fs = 0.5 * (psi_s.mat() * pauli(1).mat()).trace().real();
    d.gs = 0.5 * (psi_s.mat() * pauli(3).mat()).trace().real();
    d.residual_c = two_norm_est(psi_c - (Complex(d.fc) * ComplexMatrix::identity(2) + Complex(d.gc) * j));
    d.residual_s = two_norm_est(psi_s - (Complex(d.fs) * pauli(1) + Complex(d.gs) * pauli(3)));
    return d;
}

PauliReport run_pauli(const ExperimentConfig& cfg)
{
    if (cfg.max_order < 2) {
        throw std::invalid_argument("run_pauli: max_order must be >= 2");
    }
    if (!(cfg.epsilon > 0.0)) {
        throw std::invalid_argument("run_pauli: epsilon must be positive");
    }
    PauliReport report;
    report.config = cfg;

    const ComplexMatrix sum = Complex(cfg.epsilon) * (pauli(1) + Complex(cfg.beta) * pauli(3));
    const auto [c, s] = mat_cos_sin(sum);
    report.exact_reference_residual = std::max(two_norm_est(c - pauli_cos_exact(cfg, cfg.epsilon)),
                                               two_norm_est(s - pauli_sin_exact(cfg, cfg.epsilon)));

    const ComplexMatrix x = Complex(cfg.epsilon) * pauli(1);
    const ComplexMatrix y = Complex(cfg.epsilon * cfg.beta) * pauli(3);
    for (int n = 1; n <= cfg.max_order; ++n) {
        const TrigApproximation psi = psi_recursive(x, y, n);
        PauliRow row;
        row.order = n;
        row.coeffs = decompose_pauli(psi.psi_c, psi.psi_s);
        row.err_cos = two_norm_est(psi.psi_c - pauli_cos_exact(cfg, cfg.epsilon));
        row.err_sin = two_norm_est(psi.psi_s - pauli_sin_exact(cfg, cfg.epsilon));
        std::tie(row.err_cos_half, row.err_sin_half) = pauli_errors(cfg, 0.5 * cfg.epsilon, n);
        row.ratio_cos = row.err_cos / row.err_cos_half;
        row.ratio_sin = row.err_sin / row.err_sin_half;
        report.rows.push_back(row);
    }
    return report;
}

json PauliReport::to_json() const
{
    json rows_json = json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"n", r.order},
                             {"fc", r.coeffs.fc},
                             {"gc", r.coeffs.gc},
                             {"fs", r.coeffs.fs},
                             {"gs", r.coeffs.gs},
                             {"residual_c", r.coeffs.residual_c},
                             {"residual_s", r.coeffs.residual_s},
                             {"err_cos", r.err_cos},
                             {"err_sin", r.err_sin},
                             {"err_cos_half", r.err_cos_half},
                             {"err_sin_half", r.err_sin_half},
                             {"ratio_cos", r.ratio_cos},
                             {"ratio_sin", r.ratio_sin}});
    }
    return {{"experiment", "pauli"},
            {"config", config.to_json()},
            {"exact_reference_residual", exact_reference_residual},
            {"rows", rows_json}};
}

namespace {

void write_config_comments(std::ostream& os, const ExperimentConfig& cfg)
{
    const json doc = cfg.to_json();
    for (const auto& [key, value] : doc.items()) {
        os << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

}  // namespace

void PauliReport::write_csv(std::ostream& os) const
{
    const auto old_precision = os.precision();
    os << std::setprecision(17);
    os << "# experiment=pauli\n";
    write_config_comments(os, config);
    os << "# exact_reference_residual=" << exact_reference_residual << '\n';
    os << "n,fc,gc,fs,gs,err_cos,err_sin,err_cos_half,err_sin_half,ratio_cos,ratio_sin\n";
    for (const auto& r : rows) {
        os << r.order << ',' << r.coeffs.fc << ',' << r.coeffs.gc << ',' << r.coeffs.fs << ',' << r.coeffs.gs << ','
           << r.err_cos << ',' << r.err_sin << ',' << r.err_cos_half << ',' << r.err_sin_half << ',' << r.ratio_cos
           << ',' << r.ratio_sin << '\n';
    }
    os.precision(old_precision);
}

// ---------------------------------------------------------------------------

std::pair<ComplexMatrix, ComplexMatrix> random_unit_pair(int dim, std::uint64_t seed)
{
    if (dim < 2) {
        throw std::invalid_argument("random_unit_pair: dim must be >= 2");
    }
    std::mt19937_64 rng(seed);
    const auto draw = [&] {
        Eigen::MatrixXd m(dim, dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                m(r, c) = open_unit(rng);
            }
        }
        ComplexMatrix cm = ComplexMatrix::from_real(m);
        return Complex(1.0 / two_norm_est(cm)) * cm;
    };
    ComplexMatrix a = draw();
    ComplexMatrix b = draw();
    return {std::move(a), std::move(b)};
}

DecayReport run_random_error_decay(const ExperimentConfig& cfg)
{
    if (cfg.dim < 2) {
        throw std::invalid_argument("run_random_error_decay: dim must be >= 2");
    }
    if (cfg.max_order < 2) {
        throw std::invalid_argument("run_random_error_decay: max_order must be >= 2");
    }
    DecayReport report;
    report.config = cfg;
    const auto [a, b] = random_unit_pair(cfg.dim, cfg.seed);
    const auto [ref_c, ref_s] = mat_cos_sin(a + b);
    const auto [tay_c, tay_s] = mat_cos_sin_taylor(a + b);
    report.reference_taylor_residual = std::max(two_norm_est(ref_c - tay_c), two_norm_est(ref_s - tay_s));

    std::vector<double> ns;
    std::vector<double> ec;
    std::vector<double> es;
    for (int n = 1; n <= cfg.max_order; ++n) {
        const TrigApproximation psi = psi_recursive(a, b, n);
        DecayRow row{n, std::log10(two_norm_est(psi.psi_c - ref_c)), std::log10(two_norm_est(psi.psi_s - ref_s))};
        ns.push_back(n);
        ec.push_back(row.log10_err_cos);
        es.push_back(row.log10_err_sin);
        report.rows.push_back(row);
    }
    report.fit_cos = fit_line(ns, ec);
    report.fit_sin = fit_line(ns, es);
    return report;
}

json DecayReport::to_json() const
{
    json rows_json = json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"n", r.order}, {"log10_err_cos", r.log10_err_cos}, {"log10_err_sin", r.log10_err_sin}});
    }
    return {{"experiment", "random"},
            {"config", config.to_json()},
            {"reference_taylor_residual", reference_taylor_residual},
            {"fit_cos", line_fit_json(fit_cos)},
            {"fit_sin", line_fit_json(fit_sin)},
            {"rows", rows_json}};
}

void DecayReport::write_csv(std::ostream& os) const
{
    const auto old_precision = os.precision();
    os << std::setprecision(17);
    os << "# experiment=random\n";
    write_config_comments(os, config);
    os << "# reference_taylor_residual=" << reference_taylor_residual << '\n';
    os << "# slope_cos=" << fit_cos.slope << " r2_cos=" << fit_cos.r_squared << '\n';
    os << "# slope_sin=" << fit_sin.slope << " r2_sin=" << fit_sin.r_squared << '\n';
    os << "n,log10_err_cos,log10_err_sin\n";
    for (const auto& r : rows) {
        os << r.order << ',' << r.log10_err_cos << ',' << r.log10_err_sin << '\n';
    }
    os.precision(old_precision);
}

// ---------------------------------------------------------------------------

std::pair<ComplexMatrix, ComplexMatrix> frechet_pair(double alpha, FrechetVariant variant)
{
    if (alpha == 0.0 || !std::isfinite(alpha)) {
        throw std::invalid_argument("frechet_pair: alpha must be finite and nonzero");
    }
    const double pi = std::numbers::pi;
    const double r6 = std::sqrt(6.0);
    Eigen::MatrixXd a(2, 2);
    Eigen::MatrixXd b(2, 2);
    if (variant == FrechetVariant::exponential) {
        a << 0.0, pi * alpha, -pi / alpha, 0.0;
        b << 0.0, pi * (10.0 + 4.0 * r6) * alpha, pi * (-10.0 + 4.0 * r6) / alpha, 0.0;
    } else {
        a << 0.0, pi * alpha, pi / alpha, 0.0;
        b << 0.0, pi * (10.0 + 4.0 * r6) * alpha, pi * (10.0 - 4.0 * r6) / alpha, 0.0;
    }
    return {ComplexMatrix::from_real(a), ComplexMatrix::from_real(b)};
}

FrechetReport run_frechet(const ExperimentConfig& cfg)
{
    auto [a, b] = frechet_pair(cfg.alpha, cfg.frechet_variant);
    const Complex t(cfg.t);
    const auto [ca, sa] = mat_cos_sin(t * a);
    const auto [cb, sb] = mat_cos_sin(t * b);
    const auto [cab, sab] = mat_cos_sin(t * (a + b));

    FrechetReport r{cfg, a, b};
    r.commutator_norm = two_norm_est(commutator(a, b));
    r.cos_residual = two_norm_est(cab - (ca * cb - sa * sb));
    r.sin_residual = two_norm_est(sab - (sa * cb + ca * sb));
    r.exp_residual = two_norm_est(mat_exp(t * a) * mat_exp(t * b) - mat_exp(t * (a + b)));
    r.addition_formulae_hold = r.cos_residual <= 1e-10 && r.sin_residual <= 1e-10;
    return r;
}

json FrechetReport::to_json() const
{
    return {{"experiment", "frechet"},
            {"config", config.to_json()},
            {"A", matrix_to_json(a)},
            {"B", matrix_to_json(b)},
            {"commutator_norm", commutator_norm},
            {"cos_residual", cos_residual},
            {"sin_residual", sin_residual},
            {"exp_residual", exp_residual},
            {"verdict", addition_formulae_hold ? "addition formulae hold" : "addition formulae fail"}};
}

}  // namespace ztrig
