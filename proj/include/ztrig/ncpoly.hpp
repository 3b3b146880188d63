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

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "ztrig/lie.hpp"
#include "ztrig/rational.hpp"

namespace ztrig {

/// Word over {X, Y}. Letter i (0-based, left to right) is bit (length-1-i)
/// of `bits`, with X = 0 and Y = 1.
struct Word {
    std::uint8_t length = 0;
    std::uint32_t bits = 0;

    static Word letter(Generator g) { return {1, g == Generator::Y ? 1u : 0u}; }
    static Word parse(const std::string& letters);
    [[nodiscard]] std::string to_string() const;

    friend Word operator*(Word a, Word b)
    {
        return {static_cast<std::uint8_t>(a.length + b.length), (a.bits << b.length) | b.bits};
    }
    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Noncommutative polynomial in X, Y with exact coefficients, truncated at a
/// fixed degree. Products silently drop words longer than the truncation.
class NCPoly {
public:
    static constexpr int kMaxTruncation = 20;

    explicit NCPoly(int truncation_degree);
    static NCPoly constant(int truncation_degree, const Rational& c);
    static NCPoly letter(int truncation_degree, Generator g);

    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const std::map<Word, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const Word& w) const;
    [[nodiscard]] Rational constant_term() const { return coefficient(Word{}); }

    /// Degree-d homogeneous part, same truncation.
    [[nodiscard]] NCPoly homogeneous_part(int d) const;

    void add_term(const Word& w, const Rational& c);

    NCPoly& operator+=(const NCPoly& rhs);
    NCPoly& operator-=(const NCPoly& rhs);
    NCPoly& operator*=(const Rational& s);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

    /// e.g. "-1/2 XY + 1/2 YX"; "0" when empty.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const NCPoly& a, const NCPoly& b)
    {
        return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
    }

private:
    int truncation_;
    std::map<Word, Rational> terms_;
};

NCPoly nc_mul(const NCPoly& p, const NCPoly& q);

/// Truncated exponential; p must have zero constant term.
NCPoly nc_exp(const NCPoly& p);

/// Truncated logarithm; p must have constant term 1.
NCPoly nc_log(const NCPoly& p);

/// Expands every bracket [a,b] as ab - ba.
NCPoly to_ncpoly(const LieExpr& e, int truncation);

/// Zassenhaus exponent of degree n obtained by solving the factorization
/// order by order in the truncated free associative algebra, independently
/// of the f_{n,k} recursion. Returns the degree-n part at truncation n.
NCPoly oracle_zassenhaus(int n);

}  // namespace ztrig
