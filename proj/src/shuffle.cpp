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

#include "mixshuffle/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mixshuffle {

ShuffleAlgebra::ShuffleAlgebra(SemigroupPtr s, RingSpec ring, mpq_class lambda)
    : s_(std::move(s)), ring_(std::move(ring)), lambda_(std::move(lambda))
{
    lambda_pows_.push_back(mpq_class(1));
    for (int k = 1; k < 64; ++k) lambda_pows_.push_back(ring_.canonical(lambda_pows_.back() * lambda_));
}

std::shared_ptr<const ShuffleAlgebra> ShuffleAlgebra::make(SemigroupPtr s, RingSpec ring, const mpq_class& lambda)
{
    if (!s) throw Error("null semigroup");
    mpq_class l = ring.canonical(lambda);
    if (sgn(l) != 0 && !s->has_product())
        throw Error("nonzero weight needs a semigroup multiplication; an ordered set only supports weight 0");
    return std::shared_ptr<const ShuffleAlgebra>(new ShuffleAlgebra(std::move(s), std::move(ring), std::move(l)));
}

mpq_class ShuffleAlgebra::lambda_pow(std::size_t k) const
{
    if (k < lambda_pows_.size()) return lambda_pows_[k];
    mpq_class r = lambda_pows_.back();
    for (std::size_t i = lambda_pows_.size() - 1; i < k; ++i) r = ring_.canonical(r * lambda_);
    return r;
}

void require_same(const ShuffleAlgebra& a, const ShuffleAlgebra& b)
{
    if (!(a == b)) throw ContextMismatch("operands live in different mixable shuffle algebras");
}

TensorPoly TensorPoly::from_word(AlgebraPtr algebra, const Word& w, const mpq_class& coeff)
{
    Accumulator acc;
    acc.emplace(w, coeff);
    return from_accumulator(std::move(algebra), std::move(acc));
}

TensorPoly TensorPoly::from_accumulator(AlgebraPtr algebra, Accumulator&& acc)
{
    TensorPoly out(std::move(algebra));
    const RingSpec& ring = out.algebra_->ring();
    out.terms_.reserve(acc.size());
    for (auto& [w, c] : acc) {
        ring.reduce(c);
        if (sgn(c) != 0) out.terms_.push_back({w, std::move(c)});
    }
    const OrderedSemigroup& s = out.algebra_->semigroup();
    std::sort(out.terms_.begin(), out.terms_.end(), [&](const Term& a, const Term& b) {
        return word_compare(s, a.word, b.word, WordOrder::ProLength) > 0;
    });
    return out;
}

mpq_class TensorPoly::coefficient(const Word& w) const
{
    for (const auto& t : terms_)
        if (t.word == w) return t.coeff;
    return 0;
}

TensorPoly TensorPoly::operator+(const TensorPoly& other) const
{
    require_same(*algebra_, *other.algebra_);
    Accumulator acc;
    for (const auto& t : terms_) acc[t.word] += t.coeff;
    for (const auto& t : other.terms_) acc[t.word] += t.coeff;
    return from_accumulator(algebra_, std::move(acc));
}

TensorPoly TensorPoly::operator-(const TensorPoly& other) const { return *this + other.scaled(-1); }

TensorPoly TensorPoly::scaled(const mpq_class& c) const
{
    Accumulator acc;
    for (const auto& t : terms_) acc[t.word] += t.coeff * c;
    return from_accumulator(algebra_, std::move(acc));
}

TensorPoly TensorPoly::to_algebra(const AlgebraPtr& target) const
{
    require_same(algebra_->semigroup(), target->semigroup());
    Accumulator acc;
    for (const auto& t : terms_) acc[t.word] += t.coeff;
    return from_accumulator(target, std::move(acc));
}

bool operator==(const TensorPoly& a, const TensorPoly& b)
{
    if (!(*a.algebra_ == *b.algebra_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].word != b.terms_[i].word || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

std::string TensorPoly::to_string(const FormatOptions& opts) const
{
    if (terms_.empty()) return "0";
    const OrderedSemigroup& s = algebra_->semigroup();
    std::string out;
    const char* dot = opts.ascii ? "*" : "·";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        mpq_class c = t.coeff;
        if (i == 0) {
            if (sgn(c) < 0) {
                out += "-";
                c = -c;
            }
        } else if (sgn(c) < 0) {
            out += " - ";
            c = -c;
        } else {
            out += " + ";
        }
        if (c != 1) out += mixshuffle::to_string(c) + dot;
        else if (t.word.empty()) {
            out += "1";
            continue;
        }
        out += format_word(s, t.word, opts);
    }
    return out;
}

nlohmann::json TensorPoly::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : terms_)
        terms.push_back({{"word", word_to_json(algebra_->semigroup(), t.word)}, {"coeff", mixshuffle::to_string(t.coeff)}});
    return {{"ring", algebra_->ring().name()},
            {"lambda", mixshuffle::to_string(algebra_->lambda())},
            {"terms", std::move(terms)}};
}

TensorPoly TensorPoly::from_json(const AlgebraPtr& algebra, const nlohmann::json& j)
{
    try {
        if (j.contains("ring") && j.at("ring").get<std::string>() != algebra->ring().name())
            throw ContextMismatch("JSON polynomial is over " + j.at("ring").get<std::string>());
        if (j.contains("lambda") &&
            RingElem::parse(algebra->ring(), j.at("lambda").get<std::string>()).value() != algebra->lambda())
            throw ContextMismatch("JSON polynomial has a different weight");
        Accumulator acc;
        for (const auto& t : j.at("terms")) {
            Word w = word_from_json(algebra->semigroup(), t.at("word"));
            acc[w] += RingElem::parse(algebra->ring(), t.at("coeff").get<std::string>()).value();
        }
        return from_accumulator(algebra, std::move(acc));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
}

namespace {

// Depth-first unrolling of a(sh)b = a1(a'(sh)b) + b1(a(sh)b') + lambda (a1 b1)(a'(sh)b').
struct ShuffleWalker {
    const ShuffleAlgebra& alg;
    const OrderedSemigroup& s;
    const Word& a;
    const Word& b;
    const mpq_class& scale;
    Accumulator& acc;
    Word buf;
    bool merge;

    void run(std::size_t i, std::size_t j, std::size_t merges)
    {
        const std::size_t m = a.length(), n = b.length();
        if (i == m || j == n) {
            const std::size_t before = buf.length();
            for (std::size_t k = i; k < m; ++k) buf.push_back(a.letter(k));
            for (std::size_t k = j; k < n; ++k) buf.push_back(b.letter(k));
            if (merges == 0) acc[buf] += scale;
            else acc[buf] += scale * alg.lambda_pow(merges);
            while (buf.length() > before) buf.pop_back();
            return;
        }
        buf.push_back(a.letter(i));
        run(i + 1, j, merges);
        buf.pop_back();
        buf.push_back(b.letter(j));
        run(i, j + 1, merges);
        buf.pop_back();
        if (merge) {
            Element prod(s.width(), 0);
            s.multiply(a.letter(i), b.letter(j), prod.data());
            buf.push_back(prod.data());
            run(i + 1, j + 1, merges + 1);
            buf.pop_back();
        }
    }
};

} // namespace

namespace {

// Same recursion tabulated over suffix pairs, R(i,j) = a[i:] sh b[j:], one row of j at a time.
// Identical words produced along different paths are merged early, so repetitive inputs stay small.
void shuffle_by_suffixes(const ShuffleAlgebra& alg, const Word& a, const Word& b, const mpq_class& scale,
                         Accumulator& acc)
{
    const OrderedSemigroup& s = alg.semigroup();
    const std::size_t m = a.length(), n = b.length();
    const bool merge = sgn(alg.lambda()) != 0;
    auto prepend = [&](const Slot* letter, const Accumulator& from, const mpq_class& c, Accumulator& into) {
        for (const auto& [w, coeff] : from) {
            Word x(s.width());
            x.push_back(letter);
            x.append(w);
            into[x] += coeff * c;
        }
    };
    std::vector<Accumulator> next(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) next[j] = Accumulator{{b.slice(j, n), mpq_class(1)}};
    Element prod(s.width(), 0);
    const mpq_class one(1);
    for (std::size_t i = m; i-- > 0;) {
        cur[n] = Accumulator{{a.slice(i, m), mpq_class(1)}};
        for (std::size_t j = n; j-- > 0;) {
            Accumulator r;
            prepend(a.letter(i), next[j], one, r);
            prepend(b.letter(j), cur[j + 1], one, r);
            if (merge) {
                s.multiply(a.letter(i), b.letter(j), prod.data());
                prepend(prod.data(), next[j + 1], alg.lambda(), r);
            }
            cur[j] = std::move(r);
        }
        std::swap(cur, next);
    }
    for (const auto& [w, coeff] : next[0]) acc[w] += coeff * scale;
}

} // namespace

void shuffle_words_into(const ShuffleAlgebra& alg, const Word& a, const Word& b, const mpq_class& scale,
                        Accumulator& acc)
{
    const OrderedSemigroup& s = alg.semigroup();
    if (a.length() + b.length() > 14 && a.length() > 2 && b.length() > 2) {
        shuffle_by_suffixes(alg, a, b, scale, acc);
        return;
    }
    ShuffleWalker walker{alg, s, a, b, scale, acc, Word(s.width()), sgn(alg.lambda()) != 0};
    walker.run(0, 0, 0);
}

TensorPoly mixable_shuffle_product(const TensorPoly& a, const TensorPoly& b)
{
    require_same(*a.algebra(), *b.algebra());
    const ShuffleAlgebra& alg = *a.algebra();
    Accumulator acc;
    mpq_class scale;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            scale = ta.coeff * tb.coeff;
            shuffle_words_into(alg, ta.word, tb.word, scale, acc);
        }
    return TensorPoly::from_accumulator(a.algebra(), std::move(acc));
}

TensorPoly shuffle_words(const AlgebraPtr& algebra, const Word& a, const Word& b)
{
    Accumulator acc;
    shuffle_words_into(*algebra, a, b, mpq_class(1), acc);
    return TensorPoly::from_accumulator(algebra, std::move(acc));
}

TensorPoly shuffle_oracle(const AlgebraPtr& algebra, const Word& a, const Word& b)
{
    const OrderedSemigroup& s = algebra->semigroup();
    const std::size_t m = a.length(), n = b.length();
    Accumulator acc;
    std::vector<bool> from_a;
    // every interleaving, as the sequence of sources
    std::function<void(std::size_t, std::size_t)> interleave = [&](std::size_t i, std::size_t j) {
        if (i == m && j == n) {
            std::vector<std::size_t> spots; // positions t where an a-letter is followed by a b-letter
            for (std::size_t t = 0; t + 1 < from_a.size(); ++t)
                if (from_a[t] && !from_a[t + 1]) spots.push_back(t);
            const std::size_t subsets = sgn(algebra->lambda()) == 0 ? 1 : (std::size_t{1} << spots.size());
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                Word out(s.width());
                std::size_t ia = 0, ib = 0, merges = 0;
                for (std::size_t t = 0; t < from_a.size(); ++t) {
                    bool merged = false;
                    for (std::size_t k = 0; k < spots.size(); ++k)
                        if ((mask >> k & 1u) && spots[k] == t) merged = true;
                    if (merged) {
                        Element prod(s.width(), 0);
                        s.multiply(a.letter(ia), b.letter(ib), prod.data());
                        out.push_back(prod.data());
                        ++ia;
                        ++ib;
                        ++t;
                        ++merges;
                    } else if (from_a[t]) {
                        out.push_back(a.letter(ia++));
                    } else {
                        out.push_back(b.letter(ib++));
                    }
                }
                mpq_class c = 1;
                for (std::size_t k = 0; k < merges; ++k) c *= algebra->lambda();
                acc[out] += c;
            }
            return;
        }
        if (i < m) {
            from_a.push_back(true);
            interleave(i + 1, j);
            from_a.pop_back();
        }
        if (j < n) {
            from_a.push_back(false);
            interleave(i, j + 1);
            from_a.pop_back();
        }
    };
    interleave(0, 0);
    return TensorPoly::from_accumulator(algebra, std::move(acc));
}

TensorPoly poly_power(const TensorPoly& a, unsigned k)
{
    TensorPoly result = TensorPoly::unit(a.algebra());
    for (unsigned i = 0; i < k; ++i) result = mixable_shuffle_product(result, a);
    return result;
}

TensorPoly shuffle_power(const AlgebraPtr& algebra, const Word& w, unsigned k)
{
    const OrderedSemigroup& s = algebra->semigroup();
    const RingSpec& ring = algebra->ring();
    const std::size_t n = w.length();
    if (k == 0) return TensorPoly::unit(algebra);
    if (n == 0) return TensorPoly::unit(algebra);
    const bool merge = sgn(algebra->lambda()) != 0;

    // state[i] = number of copies that have consumed exactly i letters
    using State = std::vector<unsigned>;
    std::map<State, Accumulator> memo;
    std::function<const Accumulator&(const State&)> solve = [&](const State& st) -> const Accumulator& {
        auto it = memo.find(st);
        if (it != memo.end()) return it->second;
        Accumulator out;
        if (st[n] == k) {
            out.emplace(Word(s.width()), mpq_class(1));
            return memo.emplace(st, std::move(out)).first->second;
        }
        // choose t[i] <= st[i] copies at position i (< n) to advance together
        State t(n, 0);
        std::function<void(std::size_t)> pick = [&](std::size_t i) {
            if (i == n) {
                unsigned total = 0;
                for (auto v : t) total += v;
                if (total == 0 || (!merge && total != 1)) return;
                mpq_class coeff = algebra->lambda_pow(total - 1);
                Element letter;
                bool have = false;
                State next = st;
                for (std::size_t q = 0; q < n; ++q) {
                    if (t[q] == 0) continue;
                    coeff *= binomial(st[q], t[q]);
                    next[q] -= t[q];
                    next[q + 1] += t[q];
                    Element part = s.pow(w.letter_element(q), t[q]);
                    letter = have ? s.multiply(letter, part) : part;
                    have = true;
                }
                ring.reduce(coeff);
                if (sgn(coeff) == 0) return;
                const Accumulator& tail = solve(next);
                Word buf(s.width());
                for (const auto& [tw, tc] : tail) {
                    buf = Word(s.width());
                    buf.push_back(letter.data());
                    buf.append(tw);
                    out[buf] += coeff * tc;
                }
                return;
            }
            for (unsigned v = 0; v <= st[i]; ++v) {
                t[i] = v;
                pick(i + 1);
            }
            t[i] = 0;
        };
        pick(0);
        for (auto it2 = out.begin(); it2 != out.end();) {
            ring.reduce(it2->second);
            if (sgn(it2->second) == 0) it2 = out.erase(it2);
            else ++it2;
        }
        return memo.emplace(st, std::move(out)).first->second;
    };
    State start(n + 1, 0);
    start[0] = k;
    Accumulator result = solve(start);
    return TensorPoly::from_accumulator(algebra, std::move(result));
}

std::pair<Word, RingElem> leading_term(const TensorPoly& a)
{
    if (a.is_zero()) throw Error("the zero polynomial has no leading term");
    const Term& t = a.terms().front();
    return {t.word, RingElem(a.algebra()->ring(), t.coeff)};
}

GradedComponent graded_basis(const OrderedSemigroup& s, unsigned degree, std::optional<unsigned> length_bound)
{
    GradedComponent g;
    g.degree = degree;
    g.length_bound = length_bound ? *length_bound : degree;
    g.basis = enumerate_words(s, degree, g.length_bound);
    return g;
}

bool in_TL(const OrderedSemigroup& s, const Word& w, std::uint64_t p)
{
    if (w.empty()) return false;
    auto f = cfl_factorize(s, w);
    if (f.size() != 1) return false;
    std::size_t m = f.front().multiplicity;
    while (m % p == 0) m /= p;
    return m == 1;
}

TensorPoly eettl_representative(const AlgebraPtr& algebra, const Word& w, std::uint64_t p)
{
    const OrderedSemigroup& s = algebra->semigroup();
    Word wp = componentwise_power(s, w, p);
    if (!in_TL(s, w, p) || wp == w)
        throw Error(format_word(s, w) + " is not in TL2 for p = " + std::to_string(p));
    return TensorPoly::from_word(algebra, w) - TensorPoly::from_word(algebra, wp);
}

TensorPoly rescale_by_length(const TensorPoly& a, const AlgebraPtr& target, const mpq_class& factor)
{
    Accumulator acc;
    for (const auto& t : a.terms()) {
        mpq_class c = t.coeff;
        for (std::size_t i = 0; i < t.word.length(); ++i) c *= factor;
        acc[t.word] += c;
    }
    return TensorPoly::from_accumulator(target, std::move(acc));
}

} // namespace mixshuffle
