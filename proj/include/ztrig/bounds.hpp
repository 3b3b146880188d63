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

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ztrig {

/// Norm bounds ||f_{n,k}|| <= d_{n,k} and ||C_n|| <= delta_n for
/// ||X|| = x, ||Y|| = y, from the f_{n,k} recursion and ||[A,B]|| <= 2||A|| ||B||:
///
///   d_{1,k} = sum_{j=1}^{k} 2^k / (j!(k-j)!) x^j y^{k-j+1}
///   d_{n,k} = sum_{j=0}^{[k/n]-1} (2 delta_n)^j / j! d_{n-1,k-nj}
///   delta_2 = d_{1,1} / 2,  delta_n = d_{[(n-1)/2],n-1} / n
///
/// Everything is accumulated as natural logarithms so large orders do not
/// overflow; a zero bound is stored as -infinity.
class BoundTable {
public:
    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] double y() const { return y_; }
    [[nodiscard]] int n_max() const { return n_max_; }

    [[nodiscard]] double log_d(int n, int k) const;
    [[nodiscard]] double d(int n, int k) const;
    [[nodiscard]] double log_delta(int n) const;
    [[nodiscard]] double delta(int n) const;

    /// Stored (n, k) keys of d.
    [[nodiscard]] std::vector<std::pair<int, int>> d_keys() const;

private:
    friend BoundTable bound_tables(double x, double y, int n_max);
    double x_ = 0.0;
    double y_ = 0.0;
    int n_max_ = 0;
    std::map<std::pair<int, int>, double> log_d_;
    std::vector<double> log_delta_;  // index n - 2
};

BoundTable bound_tables(double x, double y, int n_max);

enum class Verdict { convergent, divergent, inconclusive };

std::string to_string(Verdict v);

/// Minimum n_max accepted by series_convergence_verdict.
inline constexpr int kMinVerdictOrder = 30;

/// Asymptotic ratio delta_{n+1} / delta_n estimated from the tail
/// n in [n_max/2, n_max] by the least-squares fit
///   log delta_n ~ a + n log(rho) + b log(n).
/// The log(n) column absorbs the slow algebraic drift of consecutive ratios
/// and averages out their even/odd oscillation. Returns 0 if every tail
/// bound is zero.
double tail_ratio_estimate(const BoundTable& t);

/// convergent if the estimated tail ratio is below 0.99, divergent above
/// 1.01, inconclusive in between. All-zero tails are convergent.
Verdict series_convergence_verdict(const BoundTable& t);

struct RegionCell {
    double x = 0.0;
    double y = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

/// Verdicts on the uniform grid x_i = i x_max / (grid-1), y_j = j y_max / (grid-1),
/// ordered with x as the outer index.
std::vector<RegionCell> region_scan(double x_max, double y_max, int grid, int n_max);

/// CSV with header "x,y,verdict", one row per cell.
void write_region_csv(std::ostream& os, const std::vector<RegionCell>& cells);

}  // namespace ztrig
