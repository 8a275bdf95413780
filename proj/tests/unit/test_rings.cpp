/* Copyright 2026 The mixshuffle Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <doctest.h>

#include <random>

#include "mixshuffle/rings.hpp"

using namespace mixshuffle;

TEST_CASE("ring parsing and names")
{
    CHECK(RingSpec::parse("Q").name() == "Q");
    CHECK(RingSpec::parse("Z").name() == "Z");
    CHECK(RingSpec::parse("F3").name() == "F_3");
    CHECK(RingSpec::parse("F_5") == RingSpec::prime_field(5));
    CHECK(RingSpec::parse("Z/3^6") == RingSpec::truncated_padic(3, 6));
    CHECK(RingSpec::parse("Z_2^4").modulus() == 16);
    CHECK_THROWS_AS(RingSpec::parse("F4"), Error);
    CHECK_THROWS_AS(RingSpec::parse("R"), ParseError);
    CHECK_THROWS_AS(RingSpec::parse("Z/3^0"), Error);
}

TEST_CASE("canonical forms")
{
    const auto q = RingSpec::rationals();
    CHECK(RingElem(q, mpq_class(6, 4)).value() == mpq_class(3, 2));
    CHECK(RingElem::parse(q, "5/3").to_string() == "5/3");
    CHECK(RingElem::parse(q, " -2 ").value() == -2);
    CHECK_THROWS_AS(RingElem::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(RingElem::parse(q, "abc"), ParseError);

    const auto f3 = RingSpec::prime_field(3);
    CHECK(RingElem(f3, -1L).value() == 2);
    CHECK(RingElem(f3, mpq_class(1, 2)).value() == 2);
    CHECK_THROWS_AS(RingElem(f3, mpq_class(1, 3)), NotAUnit);

    const auto z = RingSpec::integers();
    CHECK_THROWS_AS(RingElem(z, mpq_class(1, 2)), Error);

    const auto z36 = RingSpec::truncated_padic(3, 6);
    CHECK(RingElem(z36, 729L).is_zero());
    CHECK(RingElem(z36, mpq_class(5, 3 + 1)).value() == (5 * 547) % 729); // 4^-1 = 547 mod 729
}

TEST_CASE("context mismatch")
{
    const RingElem a(RingSpec::prime_field(2), 1L), b(RingSpec::prime_field(3), 1L);
    CHECK_THROWS_AS(a + b, ContextMismatch);
    CHECK_THROWS_AS(ring_arith(a, b, ArithOp::Mul), ContextMismatch);
}

TEST_CASE("units and inverses")
{
    const auto z = RingSpec::integers();
    CHECK(RingElem(z, -1L).inverse().value() == -1);
    CHECK_THROWS_AS(RingElem(z, 2L).inverse(), NotAUnit);
    const auto z24 = RingSpec::truncated_padic(2, 4);
    CHECK_FALSE(RingElem(z24, 6L).is_unit());
    CHECK((RingElem(z24, 7L) * RingElem(z24, 7L).inverse()).is_one());
    CHECK_THROWS_AS(RingElem(RingSpec::rationals(), 0L).inverse(), NotAUnit);
}

TEST_CASE("field laws hold for random elements")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (const auto& ring : {RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(5),
                             RingSpec::truncated_padic(3, 4)}) {
        for (int t = 0; t < 200; ++t) {
            const RingElem a(ring, d(rng)), b(ring, d(rng)), c(ring, d(rng));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - a == RingElem::zero(ring));
            CHECK(a.pow(3) == a * a * a);
            if (a.is_unit()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("valuations and digit multinomials")
{
    CHECK(p_valuation(48, 2) == 4);
    CHECK_THROWS_AS(p_valuation(0, 2), Error);
    CHECK(is_p_adic_unit(mpz_class(5), 3));
    CHECK_FALSE(is_p_adic_unit(mpz_class(9), 3));
    CHECK_FALSE(is_p_adic_unit(mpq_class(1, 3), 3));
    CHECK(is_p_adic_unit(mpq_class(5, 3), 2));
    CHECK(binomial(6, 2) == 15);
    CHECK(factorial(5) == 120);
    // n = 5, p = 2: digits 1,0,1 so N = 5!/(1! * 4!) = 5
    CHECK(digit_multinomial(5, 2).value == 5);
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned n = 0; n <= 32; ++n) CHECK(digit_multinomial(n, p).unit);
    // oracle: N_n as a product of binomials C(sum, p^j) over the expanded digit blocks
    for (std::uint64_t p : {2u, 3u}) {
        for (unsigned n = 1; n <= 20; ++n) {
            mpz_class expect = 1;
            unsigned placed = 0, rest = n;
            std::uint64_t pj = 1;
            while (rest) {
                for (unsigned i = 0; i < rest % p; ++i) {
                    placed += static_cast<unsigned>(pj);
                    expect *= binomial(placed, static_cast<unsigned>(pj));
                }
                rest /= static_cast<unsigned>(p);
                pj *= p;
            }
            CHECK(digit_multinomial(n, p).value == expect);
        }
    }
}
