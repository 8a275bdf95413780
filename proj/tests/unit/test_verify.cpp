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

#include "mixshuffle/verify.hpp"

using namespace mixshuffle;

namespace {

const SemigroupPtr& one_gen()
{
    static const SemigroupPtr s = OrderedSemigroup::free_abelian({"x"});
    return s;
}

} // namespace

TEST_CASE("Hilbert series of a polynomial ring")
{
    // one generator in each degree: partition numbers
    CHECK(polynomial_hilbert({0, 1, 1, 1, 1, 1, 1}, 6) == std::vector<std::size_t>{1, 1, 2, 3, 5, 7, 11});
    // Lyndon compositions give 2^{n-1}
    CHECK(polynomial_hilbert({0, 1, 1, 2, 3, 6}, 5) == std::vector<std::size_t>{1, 1, 2, 4, 8, 16});
}

TEST_CASE("relation caps")
{
    CHECK_FALSE(Relation::none().cap().has_value());
    CHECK(Relation::power_zero(3).cap() == 2u);
    CHECK(Relation::power_scalar(2, 5).scalar == 5);
}

TEST_CASE("Lyndon monomials form a basis over Q")
{
    for (const mpq_class lambda : {mpq_class(0), mpq_class(1), mpq_class(5, 3)}) {
        const auto r = verify_radford_hoffman(one_gen(), lambda, 5);
        CHECK(r.pass());
        REQUIRE(r.cells.size() == 6);
        CHECK(r.cells[5].dimension == 16);
    }
    CHECK(verify_radford_hoffman(OrderedSemigroup::free_abelian({"x", "y"}), 1, 3).pass());
}

TEST_CASE("a deficient presentation is caught")
{
    // Lyndon words over F_2 with weight 0: x sh x = 0, so the monomial x^2 collapses.
    const auto alg = ShuffleAlgebra::make(one_gen(), RingSpec::prime_field(2), 0);
    PresentedAlgebra P(alg, ProductKind::Shuffle);
    for (const auto& w : enumerate_lyndon(*one_gen(), Bounds{3, std::nullopt}).words)
        P.add(format_word(*one_gen(), w), TensorPoly::from_word(alg, w));
    const CellRecord c = check_cell(P, 2, 2);
    CHECK_FALSE(c.pass);
    CHECK_FALSE(c.independent);
}

TEST_CASE("truncated polynomial presentations over F_p")
{
    for (std::uint64_t p : {2u, 3u}) {
        CHECK(verify_fp_weight0(one_gen(), p, 5).pass());
        CHECK(verify_fp_nonzero(one_gen(), p, 1, 5).pass());
        CHECK(verify_fp_nonzero(OrderedSemigroup::elementary_p_group(p, 1), p, 1, 0, 3).pass());
        CHECK(verify_fp_nonzero(three_element_idempotent(p), p, 1, 0, 3).pass());
    }
    CHECK_THROWS_AS(verify_fp_nonzero(one_gen(), 2, 2, 3), Error); // weight 2 = 0 in F_2
    // in a monoid, (1(x)x)^{sh 2} = 1(x)x^2 lands back in length 2
    CHECK(verify_fp_nonzero(OrderedSemigroup::unitarize(one_gen()), 2, 1, 3, 2).pass());
}

TEST_CASE("Z/p^N presentation and stability")
{
    const auto r = verify_zp(one_gen(), 2, 6, 1, 5);
    CHECK(r.pass());
    CHECK(verify_zp(one_gen(), 3, 6, 2, 4).pass());
    CHECK_THROWS_AS(verify_zp(one_gen(), 2, 6, 2, 3), Error); // 2 is not a 2-adic unit
}

TEST_CASE("integral cokernels are free with Lyndon ranks")
{
    const std::vector<std::size_t> ranks{1, 1, 2, 3, 6, 9};
    for (const mpq_class lambda : {mpq_class(1), mpq_class(-1)})
        for (unsigned n = 1; n <= 6; ++n) {
            const CokernelBasis c = compute_cokernel_basis(one_gen(), lambda, n);
            CHECK(c.free);
            CHECK(c.rank == ranks[n - 1]);
            CHECK(c.unimodular);
            CHECK(c.rows == (1u << (n - 1)));
        }
    // weight 0 over Z is not polynomial: x sh x = 2 x(x)x leaves 2-torsion
    const CokernelBasis t = compute_cokernel_basis(one_gen(), 0, 2);
    CHECK_FALSE(t.free);
    CHECK(t.offending_divisor == mpz_class(2));
    CHECK(verify_z_polynomial(one_gen(), 1, 4).pass());
    for (const auto& c : nested_alphabet_checks(1, 3, 2)) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
}

TEST_CASE("Lyndon words do not generate over Z")
{
    const auto r = verify_lyndon_over_z(one_gen(), 1, 4);
    CHECK_FALSE(r.pass());
    bool reported = false;
    for (const auto& c : r.cells)
        if (!c.spans) reported = reported || c.unreachable.has_value();
    CHECK(reported);
}

TEST_CASE("Rota-Baxter structure theorems at small bounds")
{
    RBParams params;
    params.degree_bound = 2;
    params.length_bound = 2;
    for (RBTheorem t : {RBTheorem::Rbl, RBTheorem::Rbafp1, RBTheorem::Rbafp2, RBTheorem::Rbafp3, RBTheorem::Rbafp4,
                        RBTheorem::Rbazp, RBTheorem::Rbaz}) {
        const auto r = verify_rb_structure(t, params);
        CHECK_MESSAGE(r.pass(), r.to_table());
    }
}

TEST_CASE("randomized laws are reproducible")
{
    const auto a = verify_properties(9, 5), b = verify_properties(9, 5);
    CHECK(a.pass());
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("parallel and sequential cells agree")
{
    VerifyOptions par;
    par.parallel = true;
    const auto a = verify_radford_hoffman(one_gen(), 1, 5, std::nullopt, par);
    const auto b = verify_radford_hoffman(one_gen(), 1, 5);
    CHECK(a.to_json() == b.to_json());
}
