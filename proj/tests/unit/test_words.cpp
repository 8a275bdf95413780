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

#include "mixshuffle/words.hpp"

using namespace mixshuffle;

namespace {

// Number of Lyndon words of length n over k letters (necklace formula).
std::size_t necklaces(unsigned n, unsigned k)
{
    auto mu = [](unsigned d) {
        int m = 1;
        for (unsigned q = 2; q * q <= d; ++q)
            if (d % q == 0) {
                d /= q;
                if (d % q == 0) return 0;
                m = -m;
            }
        return d > 1 ? -m : m;
    };
    long total = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) {
            long pw = 1;
            for (unsigned i = 0; i < n / d; ++i) pw *= k;
            total += mu(d) * pw;
        }
    return static_cast<std::size_t>(total / n);
}

Word random_word(std::mt19937_64& rng, const OrderedSemigroup& s, const std::vector<Element>& letters, unsigned len)
{
    Word w(s.width());
    for (unsigned i = 0; i < len; ++i) w.push_back(letters[rng() % letters.size()].data());
    return w;
}

} // namespace

TEST_CASE("word parsing and printing")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    const Word w = parse_word(*s, "x⊗y²⊗xy");
    CHECK(w.length() == 3);
    CHECK(word_degree(*s, w) == 5);
    CHECK(format_word(*s, w) == "x⊗y²⊗xy");
    CHECK(format_word(*s, w, {true}) == "x(x)y^2(x)xy");
    CHECK(parse_word(*s, "x(x)y^2(x)xy") == w);
    CHECK(parse_word(*s, "x,y^2,xy") == w);
    CHECK(parse_word(*s, "1").empty());
    CHECK(word_from_json(*s, word_to_json(*s, w)) == w);
    CHECK_THROWS_AS(parse_word(*s, "x,,y"), ParseError);
}

TEST_CASE("orders")
{
    const auto s = OrderedSemigroup::ordered_set({"a", "b"});
    const Word ab = parse_word(*s, "a,b"), b = parse_word(*s, "b"), a = parse_word(*s, "a");
    CHECK(word_compare(*s, ab, b, WordOrder::Lex) < 0);
    CHECK(word_compare(*s, ab, b, WordOrder::ProLength) > 0);
    CHECK(word_compare(*s, a, ab, WordOrder::Lex) < 0); // proper prefix is smaller
    CHECK(is_lyndon(*s, ab));
    CHECK_FALSE(is_lyndon(*s, parse_word(*s, "b,a")));
    CHECK_FALSE(is_lyndon(*s, parse_word(*s, "a,a")));
}

TEST_CASE("Lyndon counts over two letters match the necklace formula")
{
    const auto s = OrderedSemigroup::ordered_set({"a", "b"});
    const WordSet lyn = enumerate_lyndon(*s, Bounds{8, std::nullopt});
    const auto counts = lyn.degree_counts(*s, 8);
    for (unsigned n = 1; n <= 8; ++n) CHECK(counts[n] == necklaces(n, 2));
}

TEST_CASE("Lyndon compositions over one generator")
{
    const auto s = OrderedSemigroup::free_abelian({"x"});
    const auto counts = enumerate_lyndon(*s, Bounds{9, std::nullopt}).degree_counts(*s, 9);
    const std::vector<std::size_t> expect{0, 1, 1, 2, 3, 6, 9, 18, 30, 56};
    CHECK(counts == expect);
}

TEST_CASE("fast enumeration agrees with brute force")
{
    const std::vector<std::pair<SemigroupPtr, Bounds>> cases{
        {OrderedSemigroup::free_abelian({"x", "y"}), Bounds{5, std::nullopt}},
        {OrderedSemigroup::unitarize(OrderedSemigroup::free_abelian({"x"})), Bounds{3, 3}},
        {OrderedSemigroup::elementary_p_group(3, 1), Bounds{0, 4}},
        {three_element_idempotent(2), Bounds{0, 4}},
    };
    for (const auto& [s, b] : cases) CHECK(enumerate_lyndon(*s, b) == enumerate_lyndon_bruteforce(*s, b));
}

TEST_CASE("CFL factorization is the unique non-increasing Lyndon factorization")
{
    const auto s = OrderedSemigroup::free_abelian({"x", "y"});
    const std::vector<Element> letters{s->parse("x"), s->parse("y"), s->parse("x^2"), s->parse("xy")};
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const Word w = random_word(rng, *s, letters, 1 + static_cast<unsigned>(rng() % 7));
        const auto f = cfl_factorize(*s, w);
        Word joined(s->width());
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(is_lyndon(*s, f[i].lyndon));
            if (i) CHECK(word_compare(*s, f[i - 1].lyndon, f[i].lyndon, WordOrder::Lex) > 0);
            joined.append(tensor_power(f[i].lyndon, f[i].multiplicity));
        }
        CHECK(joined == w);
        const auto all = cfl_bruteforce(*s, w);
        REQUIRE(all.size() == 1);
        std::size_t k = 0;
        for (const auto& fac : f)
            for (std::size_t m = 0; m < fac.multiplicity; ++m) CHECK(all[0][k++] == fac.lyndon);
    }
    const auto ab = OrderedSemigroup::ordered_set({"a", "b"});
    const auto f = cfl_factorize(*ab, parse_word(*ab, "b,a,a,b"));
    REQUIRE(f.size() == 2);
    CHECK(format_word(*ab, f[0].lyndon) == "b");
    CHECK(format_word(*ab, f[1].lyndon) == "a⊗a⊗b");
}

TEST_CASE("componentwise powers")
{
    const auto s = OrderedSemigroup::free_abelian({"x"});
    CHECK(componentwise_p_power(*s, parse_word(*s, "x,x^2"), 3) == parse_word(*s, "x^3,x^6"));
    CHECK(tensor_power(parse_word(*s, "x"), 3) == parse_word(*s, "x,x,x"));
}

TEST_CASE("generator sets over a free semigroup")
{
    const auto s = OrderedSemigroup::free_abelian({"x"});
    for (std::uint64_t p : {2u, 3u}) {
        const Bounds b{6, std::nullopt};
        const auto g = generator_sets(s, p, b);
        CHECK(g.tel.degree_counts(*s, 6) == g.lyn.degree_counts(*s, 6));
        CHECK(g.tl1.size() == 0);
        CHECK(g.tel2 == g.tel);
        for (const auto& w : g.el.words) CHECK(g.lyn.contains(*s, w));
        CHECK(tel2_orbit_check(s, p, b).ok);
    }
    const auto g = generator_sets(s, 2, Bounds{4, std::nullopt});
    CHECK(g.el.contains(*s, parse_word(*s, "x")));
    CHECK_FALSE(g.el.contains(*s, parse_word(*s, "x^2"))); // a p-th power image
    CHECK(g.tel.contains(*s, parse_word(*s, "x,x,x,x")));
}

TEST_CASE("generator sets over a JG semigroup")
{
    const auto mu = OrderedSemigroup::elementary_p_group(2, 1);
    const auto g = generator_sets(mu, 2, Bounds{0, 3});
    CHECK(g.tl1.contains(*mu, parse_word(*mu, "e")));
    CHECK(g.tl2.contains(*mu, parse_word(*mu, "g")));
    const auto [one, two] = subscript_split(*mu, g.tl, 2);
    CHECK(one == g.tl1);
    CHECK(two == g.tl2);
}
