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

#include "mixshuffle/rota_baxter.hpp"

#include <algorithm>

namespace mixshuffle {

namespace {

void check_encoded(const TensorPoly& p)
{
    for (const auto& t : p.terms())
        if (t.word.empty()) throw Error("Rota-Baxter terms need a head letter");
}

Word with_head(const Slot* head, const Word& tail)
{
    Word w(tail.width());
    w.push_back(head);
    w.append(tail);
    return w;
}

} // namespace

RBElement RBElement::pure(const AlgebraPtr& algebra, const Element& head, const Word& tail, const mpq_class& coeff)
{
    if (head.size() != algebra->semigroup().width()) throw Error("head has the wrong width");
    return RBElement(TensorPoly::from_word(algebra, with_head(head.data(), tail), coeff));
}

RBElement RBElement::from_encoded(TensorPoly poly)
{
    check_encoded(poly);
    return RBElement(std::move(poly));
}

RBElement RBElement::one(const AlgebraPtr& algebra)
{
    const OrderedSemigroup& s = algebra->semigroup();
    if (!s.has_identity()) throw Error("1 needs a monoid; the semigroup has no identity");
    return pure(algebra, s.identity(), Word(s.width()));
}

std::vector<RBTerm> RBElement::terms() const
{
    std::vector<RBTerm> out;
    for (const auto& t : poly_.terms()) out.push_back({t.word.letter_element(0), t.word.slice(1, t.word.length()), t.coeff});
    return out;
}

std::string RBElement::to_string(const FormatOptions& opts) const { return poly_.to_string(opts); }

nlohmann::json RBElement::to_json() const
{
    const OrderedSemigroup& s = algebra()->semigroup();
    nlohmann::json j = poly_.to_json();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : this->terms())
        terms.push_back({{"head", s.format(t.head.data())},
                         {"word", word_to_json(s, t.tail)},
                         {"coeff", mixshuffle::to_string(t.coeff)}});
    j["terms"] = std::move(terms);
    return j;
}

RBElement RBElement::from_json(const AlgebraPtr& algebra, const nlohmann::json& j)
{
    nlohmann::json flat = j;
    try {
        for (auto& t : flat.at("terms")) {
            nlohmann::json word = nlohmann::json::array({t.at("head")});
            for (const auto& l : t.at("word")) word.push_back(l);
            t["word"] = std::move(word);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("Rota-Baxter JSON: ") + e.what());
    }
    return from_encoded(TensorPoly::from_json(algebra, flat));
}

RBElement RBElement::parse(const AlgebraPtr& algebra, std::string_view text)
{
    const OrderedSemigroup& s = algebra->semigroup();
    Accumulator acc;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        std::string_view part = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        mpq_class coeff = 1;
        const std::size_t star = part.find('*');
        if (star != std::string_view::npos) {
            coeff = RingElem::parse(algebra->ring(), std::string(part.substr(0, star))).value();
            part.remove_prefix(star + 1);
        }
        Word w = parse_word(s, part);
        if (w.empty()) throw ParseError("Rota-Baxter term '" + std::string(part) + "' has no head");
        acc[w] += coeff;
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return from_encoded(TensorPoly::from_accumulator(algebra, std::move(acc)));
}

TensorPoly rb_product_encoded(const TensorPoly& a, const TensorPoly& b)
{
    require_same(*a.algebra(), *b.algebra());
    const ShuffleAlgebra& alg = *a.algebra();
    const OrderedSemigroup& s = alg.semigroup();
    Accumulator acc, tails;
    Element head(s.width(), 0);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            tails.clear();
            const Word at = ta.word.slice(1, ta.word.length());
            const Word bt = tb.word.slice(1, tb.word.length());
            shuffle_words_into(alg, at, bt, ta.coeff * tb.coeff, tails);
            s.multiply(ta.word.letter(0), tb.word.letter(0), head.data());
            for (const auto& [w, c] : tails) acc[with_head(head.data(), w)] += c;
        }
    return TensorPoly::from_accumulator(a.algebra(), std::move(acc));
}

RBElement rb_product(const RBElement& a, const RBElement& b)
{
    return RBElement::from_encoded(rb_product_encoded(a.encoded(), b.encoded()));
}

RBElement rb_operator_P(const RBElement& a)
{
    const OrderedSemigroup& s = a.algebra()->semigroup();
    if (!s.has_identity()) throw Error("the operator P needs a monoid; the semigroup has no identity");
    const Element one = s.identity();
    Accumulator acc;
    for (const auto& t : a.encoded().terms()) acc[with_head(one.data(), t.word)] += t.coeff;
    return RBElement::from_encoded(TensorPoly::from_accumulator(a.algebra(), std::move(acc)));
}

RBIdentityCheck check_rb_identity(const RBElement& a, const RBElement& b)
{
    require_same(*a.algebra(), *b.algebra());
    const RBElement pa = rb_operator_P(a), pb = rb_operator_P(b);
    const RBElement lhs = rb_product(pa, pb);
    const RBElement rhs = rb_operator_P(rb_product(a, pb)) + rb_operator_P(rb_product(pa, b)) +
                          rb_operator_P(rb_product(a, b)).scaled(a.algebra()->lambda());
    RBIdentityCheck out;
    if (lhs == rhs) return out;
    out.holds = false;
    const TensorPoly diff = lhs.encoded() - rhs.encoded();
    const Word& w = diff.terms().front().word;
    out.differing = w;
    out.lhs_coeff = lhs.encoded().coefficient(w);
    out.rhs_coeff = rhs.encoded().coefficient(w);
    out.detail = "coefficient of " + format_word(a.algebra()->semigroup(), w) + ": " +
                 mixshuffle::to_string(out.lhs_coeff) + " vs " + mixshuffle::to_string(out.rhs_coeff);
    return out;
}

unsigned rb_degree(const OrderedSemigroup& s, const Word& encoded) { return word_degree(s, encoded); }

std::vector<Word> rb_basis(const OrderedSemigroup& s, unsigned degree, unsigned max_tail)
{
    std::vector<Word> out;
    for (const auto& head : s.elements_up_to(degree)) {
        const unsigned hd = s.degree(head.data());
        if (hd > degree) continue;
        for (const auto& tail : enumerate_words(s, degree - hd, max_tail)) out.push_back(with_head(head.data(), tail));
    }
    std::sort(out.begin(), out.end(),
              [&](const Word& u, const Word& v) { return word_compare(s, u, v, WordOrder::ProLength) < 0; });
    return out;
}

std::vector<RBElement> rbl_generating_set(const AlgebraPtr& algebra, const Bounds& tail_bounds)
{
    const OrderedSemigroup& s = algebra->semigroup();
    if (s.kind() != SemigroupKind::Unitarized || s.left()->kind() != SemigroupKind::FreeAbelian)
        throw Error("the Lyndon generating set is defined over a unitarized free abelian monoid");
    std::vector<RBElement> out;
    const Word empty(s.width());
    for (std::size_t k = 0; k < s.left()->generator_names().size(); ++k)
        if (tail_bounds.degree >= 1) out.push_back(RBElement::pure(algebra, s.generator(k), empty));
    const Element one = s.identity();
    for (const auto& w : enumerate_lyndon(s, tail_bounds).words) out.push_back(RBElement::pure(algebra, one, w));
    return out;
}

bool has_interior_identity(const OrderedSemigroup& s, const Word& encoded)
{
    for (std::size_t i = 1; i < encoded.length(); ++i)
        if (s.is_identity(encoded.letter(i))) return true;
    return false;
}

std::vector<Word> rbaz_interior_identity_span(const OrderedSemigroup& s, unsigned degree_bound, unsigned length_bound)
{
    std::vector<Word> out;
    for (unsigned n = 0; n <= degree_bound; ++n)
        for (auto& w : rb_basis(s, n, length_bound))
            if (has_interior_identity(s, w)) out.push_back(std::move(w));
    return out;
}

RBElement divided_power(const AlgebraPtr& algebra, unsigned n)
{
    const OrderedSemigroup& s = algebra->semigroup();
    if (!s.has_identity()) throw Error("divided powers need a monoid");
    const Element one = s.identity();
    Word tail(s.width());
    for (unsigned i = 0; i < n; ++i) tail.push_back(one.data());
    return RBElement::pure(algebra, one, tail);
}

} // namespace mixshuffle
