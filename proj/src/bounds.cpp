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

#include "ztrig/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace ztrig {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kConvergentBelow = 0.99;
constexpr double kDivergentAbove = 1.01;

/// log(sum exp(v)) over v, tolerating -inf entries.
double log_sum_exp(const std::vector<double>& v)
{
    double m = kNegInf;
    for (const double t : v) {
        m = std::max(m, t);
    }
    if (m == kNegInf) {
        return kNegInf;
    }
    double s = 0.0;
    for (const double t : v) {
        s += std::exp(t - m);
    }
    return m + std::log(s);
}

double log_or_neginf(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

}  // namespace

double BoundTable::log_d(int n, int k) const
{
    const auto it = log_d_.find({n, k});
    if (it == log_d_.end()) {
        throw std::out_of_range("BoundTable: d_{" + std::to_string(n) + "," + std::to_string(k) + "} not stored");
    }
    return it->second;
}

double BoundTable::d(int n, int k) const { return std::exp(log_d(n, k)); }

double BoundTable::log_delta(int n) const
{
    if (n < 2 || n > n_max_) {
        throw std::out_of_range("BoundTable: delta_" + std::to_string(n) + " not stored");
    }
    return log_delta_[static_cast<std::size_t>(n - 2)];
}

double BoundTable::delta(int n) const { return std::exp(log_delta(n)); }

std::vector<std::pair<int, int>> BoundTable::d_keys() const
{
    std::vector<std::pair<int, int>> keys;
    keys.reserve(log_d_.size());
    for (const auto& [key, v] : log_d_) {
        keys.push_back(key);
    }
    return keys;
}

BoundTable bound_tables(double x, double y, int n_max)
{
    if (!(x >= 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("bound_tables: norms must be finite and nonnegative");
    }
    if (n_max < 2) {
        throw std::invalid_argument("bound_tables: n_max must be >= 2");
    }
    BoundTable t;
    t.x_ = x;
    t.y_ = y;
    t.n_max_ = n_max;
    const double lx = log_or_neginf(x);
    const double ly = log_or_neginf(y);
    const double ln2 = std::log(2.0);

    const auto log_d1 = [&](int k) {
        std::vector<double> terms;
        for (int j = 1; j <= k; ++j) {
            terms.push_back(k * ln2 - std::lgamma(j + 1.0) - std::lgamma(k - j + 1.0) + j * lx + (k - j + 1) * ly);
        }
        return log_sum_exp(terms);
    };

    const auto get_d = [&](const auto& self, int n, int k) -> double {
        if (auto it = t.log_d_.find({n, k}); it != t.log_d_.end()) {
            return it->second;
        }
        double v = kNegInf;
        if (n == 1) {
            v = log_d1(k);
        } else {
            const double log_two_delta = ln2 + t.log_delta_[static_cast<std::size_t>(n - 2)];
            std::vector<double> terms;
            for (int j = 0; j <= k / n - 1; ++j) {
                // j * (-inf) is NaN for j = 0; the j = 0 factor is exactly 1.
                const double power = j == 0 ? 0.0 : j * log_two_delta;
                terms.push_back(power - std::lgamma(j + 1.0) + self(self, n - 1, k - n * j));
            }
            v = log_sum_exp(terms);
        }
        t.log_d_.emplace(std::make_pair(n, k), v);
        return v;
    };

    t.log_delta_.push_back(get_d(get_d, 1, 1) - ln2);
    for (int n = 3; n <= n_max; ++n) {
        t.log_delta_.push_back(get_d(get_d, (n - 1) / 2, n - 1) - std::log(static_cast<double>(n)));
    }
    return t;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::convergent: return "convergent";
    case Verdict::divergent: return "divergent";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

double tail_ratio_estimate(const BoundTable& t)
{
    if (t.n_max() < kMinVerdictOrder) {
        throw std::invalid_argument("tail_ratio_estimate: bound table needs n_max >= "
                                    + std::to_string(kMinVerdictOrder));
    }
    const int lo = t.n_max() / 2;
    const int count = t.n_max() - lo + 1;
    Eigen::MatrixXd design(count, 3);
    Eigen::VectorXd rhs(count);
    for (int i = 0; i < count; ++i) {
        const int n = lo + i;
        const double ld = t.log_delta(n);
        if (!std::isfinite(ld)) {
            // A zero anywhere in the tail means the letters never mix
            // (one norm is zero) and the whole series vanishes.
            return 0.0;
        }
        design(i, 0) = 1.0;
        design(i, 1) = n;
        design(i, 2) = std::log(static_cast<double>(n));
        rhs(i) = ld;
    }
    const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
    return std::exp(coef(1));
}

Verdict series_convergence_verdict(const BoundTable& t)
{
    const double rho = tail_ratio_estimate(t);
    if (rho < kConvergentBelow) {
        return Verdict::convergent;
    }
    if (rho > kDivergentAbove) {
        return Verdict::divergent;
    }
    return Verdict::inconclusive;
}

std::vector<RegionCell> region_scan(double x_max, double y_max, int grid, int n_max)
{
    if (grid < 2) {
        throw std::invalid_argument("region_scan: grid must be >= 2");
    }
    if (!(x_max > 0.0) || !(y_max > 0.0)) {
        throw std::invalid_argument("region_scan: x_max and y_max must be positive");
    }
    std::vector<RegionCell> cells;
    cells.reserve(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const double x = x_max * i / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double y = y_max * j / (grid - 1);
            cells.push_back({x, y, series_convergence_verdict(bound_tables(x, y, n_max))});
        }
    }
    return cells;
}

void write_region_csv(std::ostream& os, const std::vector<RegionCell>& cells)
{
    os << "x,y,verdict\n";
    const auto old_precision = os.precision();
    os << std::setprecision(17);
    for (const auto& c : cells) {
        os << c.x << ',' << c.y << ',' << to_string(c.verdict) << '\n';
    }
    os.precision(old_precision);
}

}  // namespace ztrig
