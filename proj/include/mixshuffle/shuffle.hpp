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

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mixshuffle/rings.hpp"
#include "mixshuffle/words.hpp"

namespace mixshuffle {

/// Coefficient ring, weight and semigroup shared by all elements of one mixable shuffle algebra.
class ShuffleAlgebra {
public:
    static std::shared_ptr<const ShuffleAlgebra> make(SemigroupPtr s, RingSpec ring, const mpq_class& lambda);

    const OrderedSemigroup& semigroup() const noexcept { return *s_; }
    const SemigroupPtr& semigroup_ptr() const noexcept { return s_; }
    const RingSpec& ring() const noexcept { return ring_; }
    const mpq_class& lambda() const noexcept { return lambda_; }
    RingElem lambda_elem() const { return {ring_, lambda_}; }
    // lambda^k, canonical in the ring
    mpq_class lambda_pow(std::size_t k) const;

    friend bool operator==(const ShuffleAlgebra& a, const ShuffleAlgebra& b)
    {
        return a.ring_ == b.ring_ && a.lambda_ == b.lambda_ && *a.s_ == *b.s_;
    }

private:
    ShuffleAlgebra(SemigroupPtr s, RingSpec ring, mpq_class lambda);

    SemigroupPtr s_;
    RingSpec ring_;
    mpq_class lambda_;
    std::vector<mpq_class> lambda_pows_; // filled once; shared read-only across threads
};
using AlgebraPtr = std::shared_ptr<const ShuffleAlgebra>;

void require_same(const ShuffleAlgebra& a, const ShuffleAlgebra& b);

struct Term {
    Word word;
    mpq_class coeff;
};

using Accumulator = std::unordered_map<Word, mpq_class, WordHash>;

/// Finite linear combination of words, terms sorted descending in pro-length order,
/// no zero coefficients.
class TensorPoly {
public:
    explicit TensorPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    static TensorPoly from_word(AlgebraPtr algebra, const Word& w, const mpq_class& coeff = 1);
    static TensorPoly unit(AlgebraPtr algebra) { return from_word(algebra, Word(algebra->semigroup().width())); }
    static TensorPoly from_accumulator(AlgebraPtr algebra, Accumulator&& acc);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    mpq_class coefficient(const Word& w) const;

    TensorPoly operator+(const TensorPoly& other) const;
    TensorPoly operator-(const TensorPoly& other) const;
    TensorPoly scaled(const mpq_class& c) const;
    // Same word set with coefficients mapped into another algebra over the same semigroup.
    TensorPoly to_algebra(const AlgebraPtr& target) const;

    std::string to_string(const FormatOptions& opts = {}) const;
    nlohmann::json to_json() const;
    static TensorPoly from_json(const AlgebraPtr& algebra, const nlohmann::json& j);

    friend bool operator==(const TensorPoly& a, const TensorPoly& b);
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

private:
    AlgebraPtr algebra_;
    std::vector<Term> terms_;
};

// Mixable shuffle of two words added into acc with weight `scale`.
void shuffle_words_into(const ShuffleAlgebra& alg, const Word& a, const Word& b, const mpq_class& scale,
                        Accumulator& acc);

TensorPoly mixable_shuffle_product(const TensorPoly& a, const TensorPoly& b);
TensorPoly shuffle_words(const AlgebraPtr& algebra, const Word& a, const Word& b);
// Independent enumeration: interleavings with merged (a_i, b_j) adjacencies.
TensorPoly shuffle_oracle(const AlgebraPtr& algebra, const Word& a, const Word& b);

// w^{(sh) k} via a multiset recursion over the positions of the k copies of w.
TensorPoly shuffle_power(const AlgebraPtr& algebra, const Word& w, unsigned k);
// Repeated product; the reference for shuffle_power and the general-element power.
TensorPoly poly_power(const TensorPoly& a, unsigned k);

std::pair<Word, RingElem> leading_term(const TensorPoly& a);

struct GradedComponent {
    unsigned degree = 0;
    unsigned length_bound = 0;
    std::vector<Word> basis; // pro-length ascending
    std::size_t dimension() const { return basis.size(); }
};
GradedComponent graded_basis(const OrderedSemigroup& s, unsigned degree, std::optional<unsigned> length_bound = {});

// w = u^{(x) p^k} for a Lyndon u.
bool in_TL(const OrderedSemigroup& s, const Word& w, std::uint64_t p);
TensorPoly eettl_representative(const AlgebraPtr& algebra, const Word& w, std::uint64_t p);

// Word-level rescaling f(w) = lambda^{length(w)} w.
TensorPoly rescale_by_length(const TensorPoly& a, const AlgebraPtr& target, const mpq_class& factor);

} // namespace mixshuffle
