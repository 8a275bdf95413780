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

#include "mixshuffle/linalg.hpp"

using namespace mixshuffle;

namespace {

Matrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    Matrix m(RingSpec::integers(), r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
    return m;
}

// Oracle: gcd of all k x k minors via brute-force determinant over Q.
mpq_class det(std::vector<std::vector<mpq_class>> a)
{
    const std::size_t n = a.size();
    mpq_class d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const mpq_class f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

} // namespace

TEST_CASE("row reduction over Q and F_p")
{
    const Matrix m(RingSpec::rationals(), {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const auto rr = row_reduce(m);
    CHECK(rr.rank == 2);
    REQUIRE(rr.kernel_basis.size() == 1);
    CHECK(m.apply(rr.kernel_basis[0]) == Vec(3, 0));
    CHECK(rank_mod_p(Matrix(RingSpec::integers(), {{2, 0}, {0, 3}}), 2) == 1);
    CHECK_THROWS_AS(row_reduce(Matrix(RingSpec::integers(), {{1}})), Error);
}

TEST_CASE("smith normal form")
{
    const Matrix m(RingSpec::integers(), {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const auto s = smith_normal_form(m);
    CHECK(s.D == std::vector<mpz_class>{2, 6, 12});
    const Matrix d = s.U * m * s.V;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(d.at(i, j) == (i == j ? mpq_class(s.D[i]) : mpq_class(0)));
    CHECK(s.first_torsion() == mpz_class(2));
    CHECK(s.cokernel_free_rank() == 0);

    const auto e = smith_normal_form(Matrix(RingSpec::integers(), {{1, 1}, {1, 1}, {0, 0}}));
    CHECK(e.rank() == 1);
    CHECK(e.cokernel_free_rank() == 2);
    CHECK(e.all_units());
}

TEST_CASE("smith form properties on random matrices")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const Matrix m = random_int_matrix(rng, r, c, -6, 6);
        const auto s = smith_normal_form(m);
        const Matrix d = s.U * m * s.V;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                const mpq_class want = (i == j && i < s.D.size()) ? mpq_class(s.D[i]) : mpq_class(0);
                CHECK(d.at(i, j) == want);
            }
        for (std::size_t i = 1; i < s.D.size(); ++i) CHECK(s.D[i] % s.D[i - 1] == 0);
        for (const auto& x : s.D) CHECK(x > 0);
        CHECK(s.rank() == row_reduce(change_ring(m, RingSpec::rationals())).rank);
        if (r == c) {
            std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) a[i][j] = m.at(i, j);
            mpz_class prod = 1;
            for (const auto& x : s.D) prod *= x;
            const mpq_class dd = det(a);
            CHECK(abs(dd) == (s.rank() == r ? mpq_class(prod) : mpq_class(0)));
        }
    }
}

TEST_CASE("local smith form over Z/p^N")
{
    const auto ring = RingSpec::truncated_padic(3, 4);
    const Matrix m(ring, {{3, 1}, {9, 3}});
    const auto s = local_smith_form(m);
    CHECK(s.unit_rank() == 1);
    CHECK(s.valuations.size() == 1);
    const Matrix d = s.U * m * s.V;
    CHECK(d.at(0, 1) == 0);
    CHECK(d.at(1, 0) == 0);
}

TEST_CASE("solver over every ring")
{
    std::mt19937_64 rng(3);
    for (const auto& ring : {RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(3),
                             RingSpec::truncated_padic(2, 5)}) {
        for (int t = 0; t < 40; ++t) {
            const Matrix m = change_ring(random_int_matrix(rng, 3, 3, -4, 4), ring);
            Vec x(3);
            for (auto& v : x) v = ring.canonical(mpq_class(static_cast<long>(rng() % 7) - 3));
            Vec b = m.apply(x);
            const auto sol = solve_over_ring(m, b);
            REQUIRE(sol.has_value());
            CHECK(m.apply(*sol) == b);
        }
    }
    const Matrix two(RingSpec::integers(), {{2}});
    CHECK_FALSE(solve_over_ring(two, Vec{1}).has_value());
    CHECK_FALSE(LinearSolver(two).reaches_unit_vector(0));
    CHECK(LinearSolver(Matrix(RingSpec::rationals(), {{2}})).reaches_unit_vector(0));
}
