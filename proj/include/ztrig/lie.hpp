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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ztrig/rational.hpp"

namespace ztrig {

enum class Generator : std::uint8_t { X, Y };

/// Nested commutator tree over the generators X and Y.
///
/// Trees are immutable and share structure. Each node caches its leaf word
/// and a preorder shape code so that structural comparison is a pair of
/// string comparisons.
class LieTerm {
public:
    explicit LieTerm(Generator g);

    /// Bracket [left, right]. Callers must not pass structurally identical
    /// children; LieExpr::bracket drops those before they get here.
    static LieTerm bracket(const LieTerm& left, const LieTerm& right);

    [[nodiscard]] int degree() const { return static_cast<int>(node_->leaves.size()); }
    [[nodiscard]] bool is_leaf() const { return !node_->left; }
    [[nodiscard]] Generator generator() const;
    [[nodiscard]] LieTerm left() const;
    [[nodiscard]] LieTerm right() const;

    /// Leaf labels read left to right, e.g. "XXY" for [X,[X,Y]].
    [[nodiscard]] const std::string& leaves() const { return node_->leaves; }
    /// Preorder code, 'B' for a bracket and 'L' for a leaf.
    [[nodiscard]] const std::string& shape() const { return node_->shape; }

    /// Nested-bracket rendering such as "[Y,[X,Y]]".
    [[nodiscard]] std::string to_string() const;

    /// True if some bracket in the tree has structurally identical children.
    [[nodiscard]] bool has_self_bracket() const;

    /// Stable identity of the shared node, used for per-call evaluation caches.
    [[nodiscard]] const void* id() const { return node_.get(); }

    friend bool operator==(const LieTerm& a, const LieTerm& b);

private:
    struct Node {
        std::optional<Generator> gen;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        std::string leaves;
        std::string shape;
    };
    explicit LieTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

/// Canonical order: degree, then leaf labels left to right, then shape.
struct CanonicalOrder {
    bool operator()(const LieTerm& a, const LieTerm& b) const;
};

/// Exact rational linear combination of commutator trees.
class LieExpr {
public:
    using TermMap = std::map<LieTerm, Rational, CanonicalOrder>;

    LieExpr() = default;
    static LieExpr generator(Generator g);
    static LieExpr term(const LieTerm& t, const Rational& coeff = Rational(1));

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Common degree of all terms, or nullopt if empty or mixed.
    [[nodiscard]] std::optional<int> grade() const;

    /// Coefficient of t, zero if absent.
    [[nodiscard]] Rational coefficient(const LieTerm& t) const;

    void add_term(const LieTerm& t, const Rational& coeff);

    LieExpr& operator+=(const LieExpr& rhs);
    LieExpr& operator-=(const LieExpr& rhs);
    LieExpr& operator*=(const Rational& s);
    friend LieExpr operator+(LieExpr a, const LieExpr& b) { return a += b; }
    friend LieExpr operator-(LieExpr a, const LieExpr& b) { return a -= b; }
    friend LieExpr operator*(const Rational& s, LieExpr a) { return a *= s; }
    LieExpr operator-() const;

    /// Bilinear bracket [a, b]; pairs of identical trees vanish.
    static LieExpr bracket(const LieExpr& a, const LieExpr& b);

    /// Rendering such as "1/6 [X,[X,Y]] + 1/3 [Y,[X,Y]]"; "0" when empty.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const LieExpr& a, const LieExpr& b);

private:
    TermMap terms_;
};

/// ad_a^power b.
LieExpr ad_apply(const LieExpr& a, const LieExpr& b, unsigned power);

/// f_{1,k} = sum_{j=1}^{k} (-1)^k / (j!(k-j)!) ad_Y^{k-j} ad_X^j Y, degree k+1.
LieExpr f1k(int k);

/// f_{n,k} for n >= 2, k >= n. lower_c holds C_2, ..., C_n (at least n-1
/// entries, lower_c[0] = C_2).
LieExpr fnk(int n, int k, const std::vector<LieExpr>& lower_c);

/// Default cap on symbolic order; numeric paths handle anything higher.
inline constexpr int kSymbolicOrderCap = 10;

/// Zassenhaus exponents [C_2, ..., C_{n_max}] in
/// e^{X+Y} = e^X e^Y e^{C_2} e^{C_3} ...
std::vector<LieExpr> zassenhaus_terms(int n_max, int order_cap = kSymbolicOrderCap);

/// Exponents of the left-oriented factorization
/// e^{X+Y} = ... e^{Cbar_3} e^{Cbar_2} e^Y e^X, Cbar_i = (-1)^{i+1} C_i.
std::vector<LieExpr> left_zassenhaus_terms(int n_max, int order_cap = kSymbolicOrderCap);

}  // namespace ztrig
