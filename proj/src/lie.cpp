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

#include "ztrig/lie.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ztrig {

LieTerm::LieTerm(Generator g)
{
    auto n = std::make_shared<Node>();
    n->gen = g;
    n->leaves = g == Generator::X ? "X" : "Y";
    n->shape = "L";
    node_ = std::move(n);
}

LieTerm LieTerm::bracket(const LieTerm& left, const LieTerm& right)
{
    auto n = std::make_shared<Node>();
    n->left = left.node_;
    n->right = right.node_;
    n->leaves = left.node_->leaves + right.node_->leaves;
    n->shape = "B" + left.node_->shape + right.node_->shape;
    return LieTerm(std::move(n));
}

Generator LieTerm::generator() const
{
    if (!node_->gen) {
        throw std::logic_error("LieTerm::generator on a bracket");
    }
    return *node_->gen;
}

LieTerm LieTerm::left() const
{
    if (is_leaf()) {
        throw std::logic_error("LieTerm::left on a leaf");
    }
    return LieTerm(node_->left);
}

LieTerm LieTerm::right() const
{
    if (is_leaf()) {
        throw std::logic_error("LieTerm::right on a leaf");
    }
    return LieTerm(node_->right);
}

std::string LieTerm::to_string() const
{
    if (is_leaf()) {
        return node_->leaves;
    }
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

bool LieTerm::has_self_bracket() const
{
    if (is_leaf()) {
        return false;
    }
    const LieTerm l = left();
    const LieTerm r = right();
    return l == r || l.has_self_bracket() || r.has_self_bracket();
}

bool operator==(const LieTerm& a, const LieTerm& b)
{
    return a.node_ == b.node_ || (a.node_->leaves == b.node_->leaves && a.node_->shape == b.node_->shape);
}

bool CanonicalOrder::operator()(const LieTerm& a, const LieTerm& b) const
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    if (const int c = a.leaves().compare(b.leaves()); c != 0) {
        return c < 0;
    }
    return a.shape() < b.shape();
}

// ---------------------------------------------------------------------------

LieExpr LieExpr::generator(Generator g) { return term(LieTerm(g)); }

LieExpr LieExpr::term(const LieTerm& t, const Rational& coeff)
{
    LieExpr e;
    e.add_term(t, coeff);
    return e;
}

std::optional<int> LieExpr::grade() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    const int d = terms_.begin()->first.degree();
    for (const auto& [t, c] : terms_) {
        if (t.degree() != d) {
            return std::nullopt;
        }
    }
    return d;
}

Rational LieExpr::coefficient(const LieTerm& t) const
{
    const auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LieExpr::add_term(const LieTerm& t, const Rational& coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(t, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

LieExpr& LieExpr::operator+=(const LieExpr& rhs)
{
    for (const auto& [t, c] : rhs.terms_) {
        add_term(t, c);
    }
    return *this;
}

LieExpr& LieExpr::operator-=(const LieExpr& rhs)
{
    for (const auto& [t, c] : rhs.terms_) {
        add_term(t, -c);
    }
    return *this;
}

LieExpr& LieExpr::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, c] : terms_) {
        c *= s;
    }
    return *this;
}

LieExpr LieExpr::operator-() const
{
    LieExpr r = *this;
    r *= Rational(-1);
    return r;
}

LieExpr LieExpr::bracket(const LieExpr& a, const LieExpr& b)
{
    LieExpr r;
    for (const auto& [ta, ca] : a.terms_) {
        for (const auto& [tb, cb] : b.terms_) {
            if (ta == tb) {
                continue;
            }
            r.add_term(LieTerm::bracket(ta, tb), ca * cb);
        }
    }
    return r;
}

std::string LieExpr::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (first) {
            os << c.to_string();
        } else {
            os << (c.sign() < 0 ? " - " : " + ") << (c.sign() < 0 ? (-c).to_string() : c.to_string());
        }
        os << ' ' << t.to_string();
        first = false;
    }
    return os.str();
}

bool operator==(const LieExpr& a, const LieExpr& b)
{
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    auto ib = b.terms_.begin();
    for (const auto& [t, c] : a.terms_) {
        if (!(t == ib->first) || !(c == ib->second)) {
            return false;
        }
        ++ib;
    }
    return true;
}

// ---------------------------------------------------------------------------

LieExpr ad_apply(const LieExpr& a, const LieExpr& b, unsigned power)
{
    LieExpr r = b;
    for (unsigned i = 0; i < power && !r.empty(); ++i) {
        r = LieExpr::bracket(a, r);
    }
    return r;
}

LieExpr f1k(int k)
{
    if (k < 1) {
        throw std::invalid_argument("f1k: k must be >= 1");
    }
    const LieExpr x = LieExpr::generator(Generator::X);
    const LieExpr y = LieExpr::generator(Generator::Y);
    const Rational sign(k % 2 == 0 ? 1 : -1);

    LieExpr result;
    LieExpr adx_j = y;  // ad_X^j Y
    for (int j = 1; j <= k; ++j) {
        adx_j = LieExpr::bracket(x, adx_j);
        const Rational coeff = sign * Rational::factorial_inverse(static_cast<unsigned>(j))
                             * Rational::factorial_inverse(static_cast<unsigned>(k - j));
        result += coeff * ad_apply(y, adx_j, static_cast<unsigned>(k - j));
    }
    return result;
}

namespace {

/// Memoized evaluator of the f_{n,k} recursion. c_terms[i] holds C_{i+2}.
class FRecursion {
public:
    explicit FRecursion(const std::vector<LieExpr>& c_terms) : c_(c_terms) {}

    const LieExpr& f(int n, int k)
    {
        const auto key = std::make_pair(n, k);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        LieExpr value;
        if (n == 1) {
            value = f1k(k);
        } else {
            if (static_cast<int>(c_.size()) < n - 1) {
                throw std::invalid_argument("fnk: C_" + std::to_string(n) + " has not been supplied");
            }
            const LieExpr& cn = c_[static_cast<std::size_t>(n - 2)];
            for (int j = 0; j <= k / n - 1; ++j) {
                const Rational coeff = Rational(j % 2 == 0 ? 1 : -1) * Rational::factorial_inverse(static_cast<unsigned>(j));
                value += coeff * ad_apply(cn, f(n - 1, k - n * j), static_cast<unsigned>(j));
            }
        }
        return memo_.emplace(key, std::move(value)).first->second;
    }

    void push_c(LieExpr c) { c_.push_back(std::move(c)); }
    [[nodiscard]] const std::vector<LieExpr>& c_terms() const { return c_; }

private:
    std::vector<LieExpr> c_;
    std::map<std::pair<int, int>, LieExpr> memo_;
};

}  // namespace

LieExpr fnk(int n, int k, const std::vector<LieExpr>& lower_c)
{
    if (n < 2 || k < n) {
        throw std::invalid_argument("fnk: requires n >= 2 and k >= n");
    }
    FRecursion rec(lower_c);
    return rec.f(n, k);
}

std::vector<LieExpr> zassenhaus_terms(int n_max, int order_cap)
{
    if (n_max < 2) {
        throw std::invalid_argument("zassenhaus_terms: n_max must be >= 2");
    }
    if (n_max > order_cap) {
        throw std::invalid_argument("zassenhaus_terms: order " + std::to_string(n_max)
                                    + " exceeds the symbolic cap " + std::to_string(order_cap));
    }
    FRecursion rec({});
    rec.push_c(Rational(1, 2) * f1k(1));
    for (int n = 3; n <= n_max; ++n) {
        rec.push_c(Rational(1, n) * rec.f((n - 1) / 2, n - 1));
    }
    return rec.c_terms();
}

std::vector<LieExpr> left_zassenhaus_terms(int n_max, int order_cap)
{
    std::vector<LieExpr> c = zassenhaus_terms(n_max, order_cap);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int order = static_cast<int>(i) + 2;
        if (order % 2 == 0) {
            c[i] = -c[i];
        }
    }
    return c;
}

}  // namespace ztrig
