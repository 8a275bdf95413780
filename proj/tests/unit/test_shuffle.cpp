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

#include "mixshuffle/shuffle.hpp"

using namespace mixshuffle;

namespace {

const std::vector<RingSpec>& rings()
{
    static const std::vector<RingSpec> r{RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(2),
                                         RingSpec::prime_field(3), RingSpec::truncated_padic(3, 6)};
    return r;
}

Word random_word(std::mt19937_64& rng, const OrderedSemigroup& s, unsigned max_degree)
{
    const unsigned target = 1 + static_cast<unsigned>(rng() % max_degree);
    Word w(s.width());
    unsigned deg = 0;
    while (deg < target) {
        const unsigned d = 1 + static_cast<unsigned>(rng() % (target - deg));
        const auto letters = s.elements_of_degree(d);
        const Element& e = letters[rng() % letters.size()];
        w.push_back(e.data());
        deg += d;
    }
    return w;
}

TensorPoly random_poly(std::mt19937_64& rng, const AlgebraPtr& alg, unsigned max_degree)
{
    TensorPoly a(alg);
    const int terms = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < terms; ++i)
        a = a + TensorPoly::from_word(alg, random_word(rng, alg->semigroup(), max_degree),
                                      static_cast<long>(rng() % 5) - 2);
    return a;
}

} // namespace

TEST_CASE("small products")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    const auto q1 = ShuffleAlgebra::make(s, RingSpec::rationals(), 1);
    const TensorPoly xx = shuffle_words(q1, parse_word(*s, "x"), parse_word(*s, "x"));
    CHECK(xx.to_string() == "2·x⊗x + x²");
    const auto q0 = ShuffleAlgebra::make(s, RingSpec::rationals(), 0);
    CHECK(shuffle_words(q0, parse_word(*s, "x"), parse_word(*s, "x")).to_string() == "2·x⊗x");
    const TensorPoly xy = shuffle_words(q1, parse_word(*s, "x"), parse_word(*s, "y"));
    CHECK(xy.coefficient(parse_word(*s, "x,y")) == 1);
    CHECK(xy.coefficient(parse_word(*s, "y,x")) == 1);
    CHECK(xy.coefficient(parse_word(*s, "xy")) == 1);
    // x (sh) (x (x) y): 3 interleavings with two merge options
    const TensorPoly t = shuffle_words(q1, parse_word(*s, "x"), parse_word(*s, "x,y"));
    CHECK(t.coefficient(parse_word(*s, "x,x,y")) == 2);
    CHECK(t.coefficient(parse_word(*s, "x,y,x")) == 1);
    CHECK(t.coefficient(parse_word(*s, "x^2,y")) == 1);
    CHECK(t.coefficient(parse_word(*s, "x,xy")) == 1);
    CHECK(t.terms().size() == 4);
    const Word empty(s->width());
    CHECK(shuffle_words(q1, empty, parse_word(*s, "y")) == TensorPoly::from_word(q1, parse_word(*s, "y")));
}

TEST_CASE("weight zero on a bare ordered set drops merged terms")
{
    const auto set = OrderedSemigroup::ordered_set({"a", "b"});
    const auto alg = ShuffleAlgebra::make(set, RingSpec::integers(), 0);
    CHECK(shuffle_words(alg, parse_word(*set, "a"), parse_word(*set, "b")).terms().size() == 2);
    CHECK_THROWS_AS(ShuffleAlgebra::make(set, RingSpec::integers(), 1), Error);
}

TEST_CASE("mixing algebras is rejected")
{
    const auto s = OrderedSemigroup::free_abelian({"x"});
    const auto a = ShuffleAlgebra::make(s, RingSpec::rationals(), 1);
    const auto b = ShuffleAlgebra::make(s, RingSpec::prime_field(2), 1);
    const Word x = parse_word(*s, "x");
    CHECK_THROWS_AS(TensorPoly::from_word(a, x) + TensorPoly::from_word(b, x), ContextMismatch);
    CHECK_THROWS_AS(mixable_shuffle_product(TensorPoly::from_word(a, x), TensorPoly::from_word(b, x)),
                    ContextMismatch);
}

TEST_CASE("recursive product equals the interleaving oracle")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    const std::vector<Element> letters{s->parse("x"), s->parse("y"), s->parse("x^2")};
    for (const mpq_class lambda : {mpq_class(0), mpq_class(1), mpq_class(-2, 3)}) {
        const auto alg = ShuffleAlgebra::make(s, RingSpec::rationals(), lambda);
        std::vector<Word> words{Word(s->width())};
        for (std::size_t i = 0; i < words.size() && words[i].length() < 4; ++i)
            for (const auto& l : letters) {
                Word w = words[i];
                w.push_back(l.data());
                words.push_back(w);
            }
        for (const auto& a : words)
            for (const auto& b : words)
                if (a.length() + b.length() <= 5) CHECK(shuffle_words(alg, a, b) == shuffle_oracle(alg, a, b));
    }
}

TEST_CASE("long words take the tabulated path and still match the oracle")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    const std::vector<Element> letters{s->parse("x"), s->parse("y"), s->parse("xy")};
    std::mt19937_64 rng(41);
    for (const mpq_class lambda : {mpq_class(0), mpq_class(1), mpq_class(-3, 2)}) {
        const auto alg = ShuffleAlgebra::make(s, RingSpec::rationals(), lambda);
        for (int t = 0; t < 2; ++t) {
            Word a(s->width()), b(s->width());
            for (int i = 0; i < 8; ++i) a.push_back(letters[rng() % 3].data());
            for (int i = 0; i < 7; ++i) b.push_back(letters[rng() % 3].data());
            CHECK(shuffle_words(alg, a, b) == shuffle_oracle(alg, a, b));
        }
    }
    const auto one = OrderedSemigroup::free_abelian({"x"});
    const auto z = ShuffleAlgebra::make(one, RingSpec::integers(), 0);
    const Word x = parse_word(*one, "x");
    const TensorPoly big = shuffle_words(z, tensor_power(x, 16), tensor_power(x, 16));
    REQUIRE(big.terms().size() == 1);
    CHECK(big.terms()[0].coeff == mpq_class(binomial(32, 16)));
}

TEST_CASE("commutativity and associativity in every ring")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    std::mt19937_64 rng(17);
    for (const auto& ring : rings())
        for (long lambda : {0L, 1L, -1L, 2L}) {
            const auto alg = ShuffleAlgebra::make(s, ring, lambda);
            for (int t = 0; t < 25; ++t) {
                const TensorPoly a = random_poly(rng, alg, 3), b = random_poly(rng, alg, 3), c = random_poly(rng, alg, 2);
                CHECK(mixable_shuffle_product(a, b) == mixable_shuffle_product(b, a));
                CHECK(mixable_shuffle_product(mixable_shuffle_product(a, b), c) ==
                      mixable_shuffle_product(a, mixable_shuffle_product(b, c)));
            }
        }
}

TEST_CASE("graded dimensions and homogeneity")
{
    const auto s = OrderedSemigroup::free_abelian({"x"});
    for (unsigned n = 1; n <= 7; ++n) CHECK(graded_basis(*s, n).dimension() == (1u << (n - 1)));
    CHECK(graded_basis(*s, 0).dimension() == 1);
    const auto alg = ShuffleAlgebra::make(s, RingSpec::rationals(), 1);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        const Word a = random_word(rng, *s, 4), b = random_word(rng, *s, 4);
        const TensorPoly prod = shuffle_words(alg, a, b);
        for (const auto& term : prod.terms())
            CHECK(word_degree(*s, term.word) == word_degree(*s, a) + word_degree(*s, b));
    }
}

TEST_CASE("power by multiset recursion equals repeated product")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    for (const auto& ring : {RingSpec::rationals(), RingSpec::prime_field(3)})
        for (long lambda : {0L, 1L, 2L}) {
            const auto alg = ShuffleAlgebra::make(s, ring, lambda);
            for (const char* w : {"x", "x,y", "y,x^2", "x,x"})
                for (unsigned k = 0; k <= 4; ++k) {
                    const Word word = parse_word(*s, w);
                    CHECK(shuffle_power(alg, word, k) == poly_power(TensorPoly::from_word(alg, word), k));
                }
        }
}

TEST_CASE("p-th power congruence")
{
    // Full merging of p copies contributes lambda^{(p-1)n}; for a p-unit lambda Fermat turns this
    // into lambda^{(p-1)(n-1)}.
    const auto s = OrderedSemigroup::free_abelian({"x"});
    for (std::uint64_t p : {2u, 3u, 5u})
        for (long lambda : {1L, 2L}) {
            const auto alg = ShuffleAlgebra::make(s, RingSpec::prime_field(p), lambda);
            for (unsigned n = 1; n <= 5; ++n)
                for (const Word& w : graded_basis(*s, n).basis) {
                    if (w.length() > 3) continue;
                    const Word wp = componentwise_p_power(*s, w, p);
                    const TensorPoly got = shuffle_power(alg, w, static_cast<unsigned>(p));
                    CHECK(got == TensorPoly::from_word(alg, wp, alg->lambda_pow((p - 1) * w.length())));
                    if (lambda % static_cast<long>(p) != 0)
                        CHECK(got == TensorPoly::from_word(alg, wp, alg->lambda_pow((p - 1) * (w.length() - 1))));
                }
        }
    const auto f2 = ShuffleAlgebra::make(s, RingSpec::prime_field(2), 0);
    CHECK(shuffle_power(f2, parse_word(*s, "x"), 2).is_zero());
}

TEST_CASE("rescaling intertwines weight lambda with weight one")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    const auto one = ShuffleAlgebra::make(s, RingSpec::rationals(), 1);
    std::mt19937_64 rng(23);
    for (const mpq_class lambda : {mpq_class(2), mpq_class(5, 3), mpq_class(-1)}) {
        const auto alg = ShuffleAlgebra::make(s, RingSpec::rationals(), lambda);
        for (int t = 0; t < 40; ++t) {
            const Word a = random_word(rng, *s, 3), b = random_word(rng, *s, 3);
            const TensorPoly lhs = mixable_shuffle_product(rescale_by_length(TensorPoly::from_word(alg, a), one, lambda),
                                                           rescale_by_length(TensorPoly::from_word(alg, b), one, lambda));
            CHECK(lhs == rescale_by_length(shuffle_words(alg, a, b), one, lambda));
        }
    }
}

TEST_CASE("leading terms of Lyndon products")
{
    const auto s = OrderedSemigroup::free_abelian({"x"});
    const auto z = ShuffleAlgebra::make(s, RingSpec::integers(), 1);
    const Word x = parse_word(*s, "x"), x2 = parse_word(*s, "x^2");
    // x^2 > x in lex: CFL of x^2 (x) x is (x^2)(x)
    const TensorPoly prod = mixable_shuffle_product(shuffle_power(z, x2, 2), shuffle_power(z, x, 1));
    const auto [w, c] = leading_term(prod);
    CHECK(w == parse_word(*s, "x^2,x^2,x"));
    CHECK(c.value() == 2);
    // u^{(x)2} (sh) u^{(x)1} has leading coefficient 3!/(2!1!)
    const TensorPoly m = mixable_shuffle_product(TensorPoly::from_word(z, tensor_power(x, 2)), TensorPoly::from_word(z, x));
    CHECK(leading_term(m).second.value() == 3);
    CHECK_THROWS_AS(leading_term(TensorPoly(z)), Error);
}

TEST_CASE("JG representatives vanish under the p-th power")
{
    const auto mu = OrderedSemigroup::elementary_p_group(2, 1);
    const auto alg = ShuffleAlgebra::make(mu, RingSpec::prime_field(2), 1);
    const TensorPoly r = eettl_representative(alg, parse_word(*mu, "g"), 2);
    CHECK(r.terms().size() == 2);
    CHECK(leading_term(r).first == parse_word(*mu, "g"));
    CHECK(poly_power(r, 2).is_zero());
    CHECK_THROWS_AS(eettl_representative(alg, parse_word(*mu, "e"), 2), Error);
    const auto mu3 = OrderedSemigroup::elementary_p_group(3, 1);
    const auto alg3 = ShuffleAlgebra::make(mu3, RingSpec::prime_field(3), 2);
    for (const char* w : {"g", "e,g", "g,g²"}) {
        if (!in_TL(*mu3, parse_word(*mu3, w), 3)) continue;
        CHECK(poly_power(eettl_representative(alg3, parse_word(*mu3, w), 3), 3).is_zero());
    }
}

TEST_CASE("JSON round trip")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    const auto alg = ShuffleAlgebra::make(s, RingSpec::truncated_padic(3, 6), 2);
    const TensorPoly p = shuffle_words(alg, parse_word(*s, "x,y"), parse_word(*s, "y"));
    CHECK(TensorPoly::from_json(alg, p.to_json()) == p);
    const auto other = ShuffleAlgebra::make(s, RingSpec::rationals(), 2);
    CHECK_THROWS_AS(TensorPoly::from_json(other, p.to_json()), ContextMismatch);
}
