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

#include "ztrig/ncpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ztrig {

Word Word::parse(const std::string& letters)
{
    if (letters.size() > static_cast<std::size_t>(NCPoly::kMaxTruncation)) {
        throw std::invalid_argument("Word::parse: word too long");
    }
    Word w;
    for (const char ch : letters) {
        if (ch != 'X' && ch != 'Y') {
            throw std::invalid_argument(std::string("Word::parse: bad letter '") + ch + "'");
        }
        w = w * letter(ch == 'X' ? Generator::X : Generator::Y);
    }
    return w;
}

std::string Word::to_string() const
{
    std::string s(length, 'X');
    for (int i = 0; i < length; ++i) {
        if ((bits >> (length - 1 - i)) & 1u) {
            s[static_cast<std::size_t>(i)] = 'Y';
        }
    }
    return s;
}

NCPoly::NCPoly(int truncation_degree) : truncation_(truncation_degree)
{
    if (truncation_degree < 0 || truncation_degree > kMaxTruncation) {
        throw std::invalid_argument("NCPoly: truncation degree out of range");
    }
}

NCPoly NCPoly::constant(int truncation_degree, const Rational& c)
{
    NCPoly p(truncation_degree);
    p.add_term(Word{}, c);
    return p;
}

NCPoly NCPoly::letter(int truncation_degree, Generator g)
{
    NCPoly p(truncation_degree);
    p.add_term(Word::letter(g), Rational(1));
    return p;
}

Rational NCPoly::coefficient(const Word& w) const
{
    const auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

NCPoly NCPoly::homogeneous_part(int d) const
{
    NCPoly r(truncation_);
    for (const auto& [w, c] : terms_) {
        if (w.length == d) {
            r.terms_.emplace_hint(r.terms_.end(), w, c);
        }
    }
    return r;
}

void NCPoly::add_term(const Word& w, const Rational& c)
{
    if (w.length > truncation_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

namespace {

void require_same_truncation(const NCPoly& a, const NCPoly& b)
{
    if (a.truncation() != b.truncation()) {
        throw std::invalid_argument("NCPoly: truncation degrees differ");
    }
}

}  // namespace

NCPoly& NCPoly::operator+=(const NCPoly& rhs)
{
    require_same_truncation(*this, rhs);
    for (const auto& [w, c] : rhs.terms_) {
        add_term(w, c);
    }
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs)
{
    require_same_truncation(*this, rhs);
    for (const auto& [w, c] : rhs.terms_) {
        add_term(w, -c);
    }
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) {
        c *= s;
    }
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b)
{
    require_same_truncation(a, b);
    const int n = a.truncation_;
    // Dense accumulator indexed by (2^len - 1) + bits.
    const std::size_t slots = (std::size_t{1} << (n + 1)) - 1;
    std::vector<Rational> acc(slots);
    std::vector<bool> touched(slots, false);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            if (wa.length + wb.length > n) {
                // b is ordered by length, so the rest of this row is too long.
                break;
            }
            const Word w = wa * wb;
            const std::size_t idx = ((std::size_t{1} << w.length) - 1) + w.bits;
            acc[idx] += ca * cb;
            touched[idx] = true;
        }
    }
    NCPoly r(n);
    for (int len = 0; len <= n; ++len) {
        const std::size_t base = (std::size_t{1} << len) - 1;
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            const std::size_t idx = base + bits;
            if (touched[idx] && !acc[idx].is_zero()) {
                r.terms_.emplace_hint(r.terms_.end(), Word{static_cast<std::uint8_t>(len), bits}, acc[idx]);
            }
        }
    }
    return r;
}

std::string NCPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first) {
            os << c.to_string();
        } else {
            os << (c.sign() < 0 ? " - " : " + ") << (c.sign() < 0 ? (-c).to_string() : c.to_string());
        }
        if (w.length > 0) {
            os << ' ' << w.to_string();
        }
        first = false;
    }
    return os.str();
}

NCPoly nc_mul(const NCPoly& p, const NCPoly& q) { return p * q; }

NCPoly nc_exp(const NCPoly& p)
{
    if (!p.constant_term().is_zero()) {
        throw std::invalid_argument("nc_exp: argument must have zero constant term");
    }
    const int n = p.truncation();
    NCPoly result = NCPoly::constant(n, Rational(1));
    NCPoly power = NCPoly::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        power = power * p;
        if (power.is_zero()) {
            break;
        }
        result += Rational::factorial_inverse(static_cast<unsigned>(k)) * power;
    }
    return result;
}

NCPoly nc_log(const NCPoly& p)
{
    if (p.constant_term() != Rational(1)) {
        throw std::invalid_argument("nc_log: argument must have constant term 1");
    }
    const int n = p.truncation();
    const NCPoly q = p - NCPoly::constant(n, Rational(1));
    NCPoly result(n);
    NCPoly power = NCPoly::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        power = power * q;
        if (power.is_zero()) {
            break;
        }
        result += Rational(k % 2 == 1 ? 1 : -1, k) * power;
    }
    return result;
}

namespace {

NCPoly expand(const LieTerm& t, int truncation)
{
    if (t.is_leaf()) {
        return NCPoly::letter(truncation, t.generator());
    }
    const NCPoly a = expand(t.left(), truncation);
    const NCPoly b = expand(t.right(), truncation);
    return a * b - b * a;
}

}  // namespace

NCPoly to_ncpoly(const LieExpr& e, int truncation)
{
    NCPoly r(truncation);
    for (const auto& [t, c] : e.terms()) {
        if (t.degree() > truncation) {
            throw std::invalid_argument("to_ncpoly: term degree exceeds truncation");
        }
        r += c * expand(t, truncation);
    }
    return r;
}

NCPoly oracle_zassenhaus(int n)
{
    if (n < 2) {
        throw std::invalid_argument("oracle_zassenhaus: n must be >= 2");
    }
    const NCPoly x = NCPoly::letter(n, Generator::X);
    const NCPoly y = NCPoly::letter(n, Generator::Y);
    // e^{-C_{m-1}} ... e^{-C_2} e^{-Y} e^{-X} e^{X+Y} = e^{C_m} e^{C_{m+1}} ...
    NCPoly product = nc_exp(Rational(-1) * y) * nc_exp(Rational(-1) * x) * nc_exp(x + y);
    NCPoly c_m(n);
    for (int m = 2; m <= n; ++m) {
        c_m = nc_log(product).homogeneous_part(m);
        if (m < n) {
            product = nc_exp(Rational(-1) * c_m) * product;
        }
    }
    return c_m;
}

}  // namespace ztrig
