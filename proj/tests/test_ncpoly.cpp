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

#include <random>
#include <stdexcept>

#include "ztrig/ncpoly.hpp"

using namespace ztrig;

namespace {

NCPoly poly(int trunc, std::initializer_list<std::pair<const char*, Rational>> terms)
{
    NCPoly p(trunc);
    for (const auto& [w, c] : terms) {
        p.add_term(Word::parse(w), c);
    }
    return p;
}

}  // namespace

TEST_CASE("Word encoding")
{
    const Word w = Word::parse("XYY");
    CHECK(w.length == 3);
    CHECK(w.bits == 0b011u);
    CHECK(w.to_string() == "XYY");
    CHECK((Word::parse("XY") * Word::parse("YX")).to_string() == "XYYX");
    CHECK(Word{}.to_string().empty());
    CHECK_THROWS_AS(Word::parse("XZ"), std::invalid_argument);
}

TEST_CASE("products respect truncation")
{
    const NCPoly x = NCPoly::letter(3, Generator::X);
    const NCPoly y = NCPoly::letter(3, Generator::Y);
    CHECK((x * y - y * x).to_string() == "1 XY - 1 YX");
    const NCPoly p = x * y * x * y;
    CHECK(p.is_zero());
    CHECK_THROWS_AS(NCPoly(NCPoly::kMaxTruncation + 1), std::invalid_argument);
    CHECK_THROWS_AS(NCPoly(-1), std::invalid_argument);
    CHECK_THROWS_AS(nc_mul(NCPoly(3), NCPoly(4)), std::invalid_argument);
}

TEST_CASE("exp and log examples")
{
    CHECK(nc_exp(NCPoly(5)) == NCPoly::constant(5, Rational(1)));

    const NCPoly x = NCPoly::letter(6, Generator::X);
    CHECK(nc_log(nc_exp(x)) == x);

    const NCPoly e = nc_exp(x);
    CHECK(e.coefficient(Word::parse("XXXX")) == Rational(1, 24));
    CHECK(e * e == nc_exp(Rational(2) * x));

    const NCPoly y = NCPoly::letter(4, Generator::Y);
    const NCPoly xy4 = NCPoly::letter(4, Generator::X);
    // The degree-2 part of log(e^X e^Y) is [X,Y]/2.
    const NCPoly bch = nc_log(nc_exp(xy4) * nc_exp(y));
    CHECK(bch.homogeneous_part(2) == poly(4, {{"XY", Rational(1, 2)}, {"YX", Rational(-1, 2)}}));

    CHECK_THROWS_AS(nc_exp(NCPoly::constant(3, Rational(1))), std::invalid_argument);
    CHECK_THROWS_AS(nc_log(x), std::invalid_argument);
}

TEST_CASE("log(exp p) = p for random polynomials without constant term")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<std::uint32_t> bits(0, 15);
    for (int trial = 0; trial < 10; ++trial) {
        NCPoly p(6);
        for (int k = 0; k < 4; ++k) {
            const std::uint8_t len = static_cast<std::uint8_t>(1 + k % 3);
            const Word w{len, bits(rng) & ((1u << len) - 1u)};
            p.add_term(w, Rational(coeff(rng), 3));
        }
        CHECK(nc_log(nc_exp(p)) == p);
    }
}

TEST_CASE("Lie expression expansion")
{
    const LieTerm x{Generator::X};
    const LieTerm y{Generator::Y};
    LieExpr e;
    e.add_term(LieTerm::bracket(x, LieTerm::bracket(x, y)), Rational(1));
    CHECK(to_ncpoly(e, 5).to_string() == "1 XXY - 2 XYX + 1 YXX");
}

TEST_CASE("symbolic exponents agree with the brute-force series oracle")
{
    const auto c = zassenhaus_terms(8);
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        const NCPoly expected = oracle_zassenhaus(n);
        CHECK(to_ncpoly(c[static_cast<std::size_t>(n - 2)], n) == expected);
    }
}

TEST_CASE("oracle reproduces the known low-order exponents")
{
    CHECK(oracle_zassenhaus(2) == poly(2, {{"XY", Rational(-1, 2)}, {"YX", Rational(1, 2)}}));
    const NCPoly c3 = oracle_zassenhaus(3);
    CHECK(c3.coefficient(Word::parse("XXY")) == Rational(1, 6));
    CHECK(c3.coefficient(Word::parse("YYX")) == Rational(-1, 3));
    CHECK(c3.coefficient(Word::parse("YXY")) == Rational(2, 3));
    CHECK(c3.coefficient(Word::parse("XYX")) == Rational(-1, 3));
}

TEST_CASE("left-oriented exponents factor e^{X+Y} from the other side")
{
    // e^{X+Y} = ... e^{Cbar_3} e^{Cbar_2} e^Y e^X, so peeling Y and X off the right
    // and the Cbar factors off the left must leave the identity to order 6.
    const int t = 6;
    const auto cbar = left_zassenhaus_terms(t);
    const NCPoly x = NCPoly::letter(t, Generator::X);
    const NCPoly y = NCPoly::letter(t, Generator::Y);
    NCPoly rest = nc_exp(x + y) * nc_exp(Rational(-1) * x) * nc_exp(Rational(-1) * y);
    for (std::size_t i = cbar.size(); i-- > 0;) {
        rest = nc_exp(Rational(-1) * to_ncpoly(cbar[i], t)) * rest;
    }
    CHECK(rest == NCPoly::constant(t, Rational(1)));
}

TEST_CASE("right factorization is exact through the truncation")
{
    const int t = 7;
    const auto c = zassenhaus_terms(t);
    const NCPoly x = NCPoly::letter(t, Generator::X);
    const NCPoly y = NCPoly::letter(t, Generator::Y);
    NCPoly prod = nc_exp(x) * nc_exp(y);
    for (const auto& cn : c) {
        prod = prod * nc_exp(to_ncpoly(cn, t));
    }
    CHECK(prod == nc_exp(x + y));
}
