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

#include <vector>

#include "ztrig/matrix.hpp"

namespace ztrig {

/// Psi_n^[C] ~ cos(x+y) and Psi_n^[S] ~ sin(x+y) at order n.
struct TrigApproximation {
    int order = 0;
    ComplexMatrix psi_c;
    ComplexMatrix psi_s;
    std::vector<ComplexMatrix> c_terms_used;  // C_2 ... C_order
};

/// z_{n,1} = e^{ix} e^{iy} e^{i^2 C_2} ... e^{i^n C_n} and
/// z_{n,2} = e^{-ix} e^{-iy} e^{(-i)^2 C_2} ... e^{(-i)^n C_n}.
struct FactorChain {
    ComplexMatrix z1;
    ComplexMatrix z2;
    int order = 0;
};

/// Runs the f_{n,k} / C_n recursion directly on matrices, with ad as the
/// matrix commutator. Returns [C_2(x,y), ..., C_{n_max}(x,y)].
std::vector<ComplexMatrix> numeric_c_terms(const ComplexMatrix& x, const ComplexMatrix& y, int n_max);

/// e^x e^y e^{C_2} ... e^{C_n}; just e^x e^y when n = 1.
ComplexMatrix zassenhaus_truncated_product(const ComplexMatrix& x, const ComplexMatrix& y, int n);

/// Recursive construction of Psi_n:
///   Psi_1^C = cos x cos y - sin x sin y,  Psi_1^S = cos x sin y + sin x cos y
///   Psi_{2k}   = Psi_{2k-1} e^{(-1)^k C_{2k}}                    (both parts)
///   Psi_{2k+1}^C = Psi_{2k}^C cos C_{2k+1} - (-1)^k Psi_{2k}^S sin C_{2k+1}
///   Psi_{2k+1}^S = Psi_{2k}^S cos C_{2k+1} + (-1)^k Psi_{2k}^C sin C_{2k+1}
TrigApproximation psi_recursive(const ComplexMatrix& x, const ComplexMatrix& y, int n);

/// Builds the two Zassenhaus chains for e^{+-i(x+y)} truncated at order n.
FactorChain factor_chain(const ComplexMatrix& x, const ComplexMatrix& y, int n);

/// Psi from the chains: ((z1 + z2) / 2, (z1 - z2) / 2i).
TrigApproximation psi_via_factored_z(const ComplexMatrix& x, const ComplexMatrix& y, int n);

/// Mirror of psi_via_factored_z built on the left-oriented factorization
/// e^{X+Y} = ... e^{Cbar_3} e^{Cbar_2} e^Y e^X with Cbar_i = (-1)^{i+1} C_i.
TrigApproximation left_oriented_psi(const ComplexMatrix& x, const ComplexMatrix& y, int n);

enum class GeneralizedIdentity { cos_diff, sin_sum };

/// cos(x-y) - cos(x+y) (cos_diff) or sin(x-y) + sin(x+y) (sin_sum) at
/// order n, combining psi_recursive for (x, -y) and (x, y).
ComplexMatrix generalized_identity_eval(const ComplexMatrix& x, const ComplexMatrix& y, int n,
                                        GeneralizedIdentity which);

/// X <-> Y invariant second-order cosine:
/// 1/2 (cos x cos y - sin x sin y) e^{[x,y]/2} + 1/2 (cos y cos x - sin y sin x) e^{-[x,y]/2}.
ComplexMatrix symmetrized_cos(const ComplexMatrix& x, const ComplexMatrix& y);

}  // namespace ztrig
