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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <json.hpp>

#include "mixshuffle/semigroup.hpp"

namespace mixshuffle {

/// Tensor word u_1 (x) ... (x) u_r stored as the concatenated slots of its letters.
/// The empty word is the unit 1.
class Word {
public:
    Word() = default;
    explicit Word(unsigned width) : width_(width) {}
    Word(unsigned width, std::initializer_list<Element> letters);

    unsigned width() const noexcept { return width_; }
    std::size_t length() const noexcept { return width_ ? data_.size() / width_ : 0; }
    bool empty() const noexcept { return data_.empty(); }
    const Slot* letter(std::size_t i) const { return data_.data() + i * width_; }
    Element letter_element(std::size_t i) const { return Element(letter(i), letter(i) + width_); }

    void push_back(const Slot* letter) { data_.insert(data_.end(), letter, letter + width_); }
    void append(const Word& w) { data_.insert(data_.end(), w.data_.begin(), w.data_.end()); }
    void pop_back() { data_.erase(data_.end() - width_, data_.end()); }
    Word slice(std::size_t from, std::size_t to) const;

    const boost::container::small_vector<Slot, 16>& raw() const noexcept { return data_; }

    friend bool operator==(const Word& a, const Word& b) { return a.data_ == b.data_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    unsigned width_ = 0;
    boost::container::small_vector<Slot, 16> data_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

enum class WordOrder { Lex, ProLength };

unsigned word_degree(const OrderedSemigroup& s, const Word& w);
int word_compare(const OrderedSemigroup& s, const Word& u, const Word& v, WordOrder order);
bool is_lyndon(const OrderedSemigroup& s, const Word& w);

Word tensor_power(const Word& w, std::size_t k);
Word componentwise_power(const OrderedSemigroup& s, const Word& w, std::uint64_t e);
inline Word componentwise_p_power(const OrderedSemigroup& s, const Word& w, std::uint64_t p)
{
    return componentwise_power(s, w, p);
}

struct CflFactor {
    Word lyndon;
    std::size_t multiplicity = 1;
};
std::vector<CflFactor> cfl_factorize(const OrderedSemigroup& s, const Word& w);
// Every factorization of w into non-increasing Lyndon words (exhaustive search).
std::vector<std::vector<Word>> cfl_bruteforce(const OrderedSemigroup& s, const Word& w);

/// Degree/length window for enumeration. A semigroup without degree-0 letters never
/// needs the length bound (a word of degree n has length at most n).
struct Bounds {
    unsigned degree = 0;
    std::optional<unsigned> length;

    unsigned max_length() const { return length ? *length : degree; }
};

// Words of degree exactly n and length <= bounds.max_length(), pro-length ascending.
std::vector<Word> enumerate_words(const OrderedSemigroup& s, unsigned degree, unsigned max_length);

/// A finite set of words held sorted ascending in pro-length order without duplicates.
struct WordSet {
    std::vector<Word> words;

    std::size_t size() const { return words.size(); }
    bool contains(const OrderedSemigroup& s, const Word& w) const;
    // counts[d] = number of members of degree d, d = 0..max_degree
    std::vector<std::size_t> degree_counts(const OrderedSemigroup& s, unsigned max_degree) const;
    std::vector<Word> of_degree(const OrderedSemigroup& s, unsigned d) const;
    friend bool operator==(const WordSet& a, const WordSet& b) { return a.words == b.words; }
};

WordSet make_word_set(const OrderedSemigroup& s, std::vector<Word> words);

// All Lyndon words of degree <= bounds.degree (and length <= bounds.max_length()).
WordSet enumerate_lyndon(const OrderedSemigroup& s, const Bounds& bounds);
// Oracle: filter all words through is_lyndon.
WordSet enumerate_lyndon_bruteforce(const OrderedSemigroup& s, const Bounds& bounds);

/// Letterwise p-th root lookup backed by a table of p-th powers.
class PRootTable {
public:
    PRootTable(SemigroupPtr s, std::uint64_t p);
    std::optional<Element> root(const Slot* letter) const;
    bool is_p_image(const Word& w) const;

private:
    SemigroupPtr s_;
    std::uint64_t p_;
    mutable std::map<std::vector<Slot>, std::optional<Element>> cache_;
};

WordSet operator_T(const OrderedSemigroup& s, const WordSet& w, std::uint64_t p, const Bounds& bounds);
WordSet operator_E(const SemigroupPtr& s, const WordSet& w, std::uint64_t p);
std::pair<WordSet, WordSet> subscript_split(const OrderedSemigroup& s, const WordSet& w, std::uint64_t p);

struct GeneratorSets {
    WordSet lyn, el, tl, tel, tl1, tl2, tel1, tel2;
};
GeneratorSets generator_sets(const SemigroupPtr& s, std::uint64_t p, const Bounds& bounds);

struct OrbitReport {
    bool ok = true;
    std::size_t tel2_size = 0;
    std::size_t tl2_size = 0;
    std::size_t orbit_size = 0;
    std::string detail;
};
OrbitReport tel2_orbit_check(const SemigroupPtr& s, std::uint64_t p, const Bounds& bounds);

std::string format_word(const OrderedSemigroup& s, const Word& w, const FormatOptions& opts = {});
// Letters separated by ',', "⊗" or "(x)"; "1", "ε" or "" for the empty word.
Word parse_word(const OrderedSemigroup& s, std::string_view text);

nlohmann::json word_to_json(const OrderedSemigroup& s, const Word& w);
Word word_from_json(const OrderedSemigroup& s, const nlohmann::json& j);
nlohmann::json word_set_to_json(const OrderedSemigroup& s, const WordSet& ws, unsigned max_degree);

} // namespace mixshuffle
