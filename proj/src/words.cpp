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

#include "mixshuffle/words.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <boost/functional/hash.hpp>

namespace mixshuffle {

Word::Word(unsigned width, std::initializer_list<Element> letters) : width_(width)
{
    for (const auto& l : letters) {
        if (l.size() != width) throw ContextMismatch("letter width does not match word");
        push_back(l.data());
    }
}

Word Word::slice(std::size_t from, std::size_t to) const
{
    Word out(width_);
    out.data_.assign(data_.begin() + static_cast<std::ptrdiff_t>(from * width_),
                     data_.begin() + static_cast<std::ptrdiff_t>(to * width_));
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept
{
    return boost::hash_range(w.raw().begin(), w.raw().end());
}

unsigned word_degree(const OrderedSemigroup& s, const Word& w)
{
    unsigned d = 0;
    for (std::size_t i = 0; i < w.length(); ++i) d += s.degree(w.letter(i));
    return d;
}

namespace {

int lex_compare(const OrderedSemigroup& s, const Word& u, const Word& v)
{
    const std::size_t n = std::min(u.length(), v.length());
    for (std::size_t i = 0; i < n; ++i) {
        int c = s.compare(u.letter(i), v.letter(i));
        if (c != 0) return c;
    }
    if (u.length() == v.length()) return 0;
    return u.length() < v.length() ? -1 : 1;
}

void sort_pro_length(const OrderedSemigroup& s, std::vector<Word>& words)
{
    std::sort(words.begin(), words.end(),
              [&](const Word& a, const Word& b) { return word_compare(s, a, b, WordOrder::ProLength) < 0; });
}

} // namespace

int word_compare(const OrderedSemigroup& s, const Word& u, const Word& v, WordOrder order)
{
    if (u.width() != v.width() && !u.empty() && !v.empty())
        throw ContextMismatch("words over different semigroups");
    if (order == WordOrder::ProLength && u.length() != v.length()) return u.length() < v.length() ? -1 : 1;
    return lex_compare(s, u, v);
}

bool is_lyndon(const OrderedSemigroup& s, const Word& w)
{
    if (w.empty()) throw Error("the empty word has no Lyndon status");
    for (std::size_t i = 1; i < w.length(); ++i)
        if (lex_compare(s, w, w.slice(i, w.length())) >= 0) return false;
    return true;
}

Word tensor_power(const Word& w, std::size_t k)
{
    Word out(w.width());
    for (std::size_t i = 0; i < k; ++i) out.append(w);
    return out;
}

Word componentwise_power(const OrderedSemigroup& s, const Word& w, std::uint64_t e)
{
    Word out(w.width());
    for (std::size_t i = 0; i < w.length(); ++i) {
        Element x = s.pow(w.letter_element(i), e);
        out.push_back(x.data());
    }
    return out;
}

std::vector<CflFactor> cfl_factorize(const OrderedSemigroup& s, const Word& w)
{
    if (w.empty()) throw Error("cannot factor the empty word");
    // Peel off the lexicographically smallest suffix; it is the last Lyndon factor.
    std::vector<Word> rev;
    std::size_t end = w.length();
    while (end > 0) {
        std::size_t best = end - 1;
        Word best_word = w.slice(best, end);
        for (std::size_t i = end - 1; i-- > 0;) {
            Word cand = w.slice(i, end);
            if (lex_compare(s, cand, best_word) < 0) {
                best = i;
                best_word = std::move(cand);
            }
        }
        rev.push_back(std::move(best_word));
        end = best;
    }
    std::vector<CflFactor> out;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        if (!out.empty() && out.back().lyndon == *it) ++out.back().multiplicity;
        else out.push_back({*it, 1});
    }
    return out;
}

std::vector<std::vector<Word>> cfl_bruteforce(const OrderedSemigroup& s, const Word& w)
{
    std::vector<std::vector<Word>> found;
    std::vector<Word> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (start == w.length()) {
            found.push_back(cur);
            return;
        }
        for (std::size_t stop = start + 1; stop <= w.length(); ++stop) {
            Word piece = w.slice(start, stop);
            if (!is_lyndon(s, piece)) continue;
            if (!cur.empty() && lex_compare(s, cur.back(), piece) < 0) continue;
            cur.push_back(std::move(piece));
            rec(stop);
            cur.pop_back();
        }
    };
    if (!w.empty()) rec(0);
    return found;
}

std::vector<Word> enumerate_words(const OrderedSemigroup& s, unsigned degree, unsigned max_length)
{
    const auto alphabet = s.elements_up_to(degree);
    std::vector<unsigned> deg(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) deg[i] = s.degree(alphabet[i].data());
    std::vector<Word> out;
    Word cur(s.width());
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned len) {
        if (left == 0) out.push_back(cur);
        if (len == max_length) return;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (deg[i] > left) continue;
            cur.push_back(alphabet[i].data());
            rec(left - deg[i], len + 1);
            cur.pop_back();
        }
    };
    rec(degree, 0);
    sort_pro_length(s, out);
    return out;
}

bool WordSet::contains(const OrderedSemigroup& s, const Word& w) const
{
    return std::binary_search(words.begin(), words.end(), w, [&](const Word& a, const Word& b) {
        return word_compare(s, a, b, WordOrder::ProLength) < 0;
    });
}

std::vector<std::size_t> WordSet::degree_counts(const OrderedSemigroup& s, unsigned max_degree) const
{
    std::vector<std::size_t> c(max_degree + 1, 0);
    for (const auto& w : words) {
        unsigned d = word_degree(s, w);
        if (d <= max_degree) ++c[d];
    }
    return c;
}

std::vector<Word> WordSet::of_degree(const OrderedSemigroup& s, unsigned d) const
{
    std::vector<Word> out;
    for (const auto& w : words)
        if (word_degree(s, w) == d) out.push_back(w);
    return out;
}

WordSet make_word_set(const OrderedSemigroup& s, std::vector<Word> words)
{
    sort_pro_length(s, words);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return WordSet{std::move(words)};
}

WordSet enumerate_lyndon(const OrderedSemigroup& s, const Bounds& bounds)
{
    const unsigned max_len = bounds.max_length();
    const auto alphabet = s.elements_up_to(bounds.degree);
    std::vector<unsigned> deg(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) deg[i] = s.degree(alphabet[i].data());

    // Prenecklace generation: extending a prefix of period `per` by the letter at
    // position len - per keeps the period, a larger letter makes it Lyndon.
    std::vector<std::size_t> idx;
    std::vector<Word> out;
    Word cur(s.width());
    std::function<void(unsigned, std::size_t)> rec = [&](unsigned used, std::size_t per) {
        const std::size_t len = idx.size();
        if (len > 0 && per == len) out.push_back(cur);
        if (len == max_len) return;
        const std::size_t lo = len == 0 ? 0 : idx[len - per];
        for (std::size_t c = lo; c < alphabet.size(); ++c) {
            if (used + deg[c] > bounds.degree) continue;
            idx.push_back(c);
            cur.push_back(alphabet[c].data());
            rec(used + deg[c], (len == 0 || c != lo) ? len + 1 : per);
            cur.pop_back();
            idx.pop_back();
        }
    };
    rec(0, 0);
    return make_word_set(s, std::move(out));
}

WordSet enumerate_lyndon_bruteforce(const OrderedSemigroup& s, const Bounds& bounds)
{
    std::vector<Word> out;
    for (unsigned d = 0; d <= bounds.degree; ++d)
        for (auto& w : enumerate_words(s, d, bounds.max_length()))
            if (!w.empty() && is_lyndon(s, w)) out.push_back(std::move(w));
    return make_word_set(s, std::move(out));
}

PRootTable::PRootTable(SemigroupPtr s, std::uint64_t p) : s_(std::move(s)), p_(p) {}

std::optional<Element> PRootTable::root(const Slot* letter) const
{
    std::vector<Slot> key(letter, letter + s_->width());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const unsigned d = s_->degree(letter);
    std::optional<Element> found;
    if (d % p_ == 0) {
        const Element target(letter, letter + s_->width());
        for (const auto& c : s_->elements_of_degree(static_cast<unsigned>(d / p_)))
            if (s_->pow(c, p_) == target) {
                found = c;
                break;
            }
    }
    cache_.emplace(std::move(key), found);
    return found;
}

bool PRootTable::is_p_image(const Word& w) const
{
    for (std::size_t i = 0; i < w.length(); ++i)
        if (!root(w.letter(i))) return false;
    return true;
}

WordSet operator_T(const OrderedSemigroup& s, const WordSet& w, std::uint64_t p, const Bounds& bounds)
{
    std::vector<Word> out;
    const unsigned max_len = bounds.max_length();
    for (const auto& u : w.words) {
        if (u.empty()) continue;
        const unsigned d = word_degree(s, u);
        for (std::uint64_t k = 1; k * u.length() <= max_len && k * d <= bounds.degree; k *= p)
            out.push_back(tensor_power(u, k));
    }
    return make_word_set(s, std::move(out));
}

WordSet operator_E(const SemigroupPtr& s, const WordSet& w, std::uint64_t p)
{
    PRootTable roots(s, p);
    std::vector<Word> out;
    for (const auto& u : w.words)
        if (componentwise_power(*s, u, p) == u || !roots.is_p_image(u)) out.push_back(u);
    return make_word_set(*s, std::move(out));
}

std::pair<WordSet, WordSet> subscript_split(const OrderedSemigroup& s, const WordSet& w, std::uint64_t p)
{
    std::vector<Word> w1, w2;
    for (const auto& u : w.words) (componentwise_power(s, u, p) == u ? w1 : w2).push_back(u);
    return {WordSet{std::move(w1)}, WordSet{std::move(w2)}};
}

GeneratorSets generator_sets(const SemigroupPtr& s, std::uint64_t p, const Bounds& bounds)
{
    GeneratorSets g;
    g.lyn = enumerate_lyndon(*s, bounds);
    g.el = operator_E(s, g.lyn, p);
    g.tl = operator_T(*s, g.lyn, p, bounds);
    g.tel = operator_T(*s, g.el, p, bounds);
    std::tie(g.tl1, g.tl2) = subscript_split(*s, g.tl, p);
    std::tie(g.tel1, g.tel2) = subscript_split(*s, g.tel, p);
    return g;
}

OrbitReport tel2_orbit_check(const SemigroupPtr& s, std::uint64_t p, const Bounds& bounds)
{
    OrbitReport rep;
    const GeneratorSets g = generator_sets(s, p, bounds);
    rep.tel2_size = g.tel2.size();
    rep.tl2_size = g.tl2.size();
    std::vector<std::pair<Word, std::pair<std::size_t, unsigned>>> seen;
    std::vector<Word> orbit;
    for (std::size_t k = 0; k < g.tel2.words.size(); ++k) {
        Word u = g.tel2.words[k];
        for (unsigned i = 0; word_degree(*s, u) <= bounds.degree; ++i) {
            auto hit = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == u; });
            if (hit != seen.end()) {
                rep.ok = false;
                rep.detail = format_word(*s, u) + " arises as both (" + format_word(*s, g.tel2.words[hit->second.first]) +
                             ", " + std::to_string(hit->second.second) + ") and (" +
                             format_word(*s, g.tel2.words[k]) + ", " + std::to_string(i) + ")";
                return rep;
            }
            seen.push_back({u, {k, i}});
            orbit.push_back(u);
            Word next = componentwise_power(*s, u, p);
            if (next == u) break;
            u = std::move(next);
        }
    }
    WordSet orbit_set = make_word_set(*s, orbit);
    rep.orbit_size = orbit_set.size();
    if (!(orbit_set == g.tl2)) {
        rep.ok = false;
        for (const auto& w : g.tl2.words)
            if (!orbit_set.contains(*s, w)) {
                rep.detail = "TL2 word " + format_word(*s, w) + " is not an orbit element";
                return rep;
            }
        for (const auto& w : orbit_set.words)
            if (!g.tl2.contains(*s, w)) {
                rep.detail = "orbit element " + format_word(*s, w) + " is not in TL2";
                return rep;
            }
    }
    return rep;
}

namespace {

bool has_letter_named_one(const OrderedSemigroup& s)
{
    if (s.kind() == SemigroupKind::Unitarized) return true;
    if (s.kind() == SemigroupKind::FinitePIdempotent)
        for (const auto& n : s.generator_names())
            if (n == "1") return true;
    if (s.kind() == SemigroupKind::Product) return has_letter_named_one(*s.left()) || has_letter_named_one(*s.right());
    return false;
}

std::vector<std::string_view> split_letters(std::string_view text)
{
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0, i = 0;
    auto flush = [&](std::size_t stop, std::size_t skip) {
        parts.push_back(text.substr(start, stop - start));
        start = stop + skip;
    };
    while (i < text.size()) {
        if (text.substr(i, 3) == "(x)") {
            flush(i, 3);
            i += 3;
            continue;
        }
        if (text.substr(i, 3) == "⊗") {
            flush(i, 3);
            i += 3;
            continue;
        }
        if (text[i] == '(') ++depth;
        else if (text[i] == ')') --depth;
        else if (text[i] == ',' && depth == 0) {
            flush(i, 1);
            ++i;
            continue;
        }
        ++i;
    }
    parts.push_back(text.substr(start));
    return parts;
}

} // namespace

std::string format_word(const OrderedSemigroup& s, const Word& w, const FormatOptions& opts)
{
    if (w.empty()) {
        if (!has_letter_named_one(s)) return "1";
        return opts.ascii ? "eps" : "ε";
    }
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) out += opts.ascii ? "(x)" : "⊗";
        out += s.format(w.letter(i), opts);
    }
    return out;
}

Word parse_word(const OrderedSemigroup& s, std::string_view text)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    Word w(s.width());
    if (text.empty() || text == "ε" || text == "eps" || (text == "1" && !has_letter_named_one(s))) return w;
    for (auto part : split_letters(text)) {
        Element e = s.parse(part);
        w.push_back(e.data());
    }
    return w;
}

nlohmann::json word_to_json(const OrderedSemigroup& s, const Word& w)
{
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < w.length(); ++i) j.push_back(s.format(w.letter(i)));
    return j;
}

Word word_from_json(const OrderedSemigroup& s, const nlohmann::json& j)
{
    if (!j.is_array()) throw ParseError("word JSON must be an array of letters");
    Word w(s.width());
    for (const auto& l : j) {
        Element e = s.parse(l.get<std::string>());
        w.push_back(e.data());
    }
    return w;
}

nlohmann::json word_set_to_json(const OrderedSemigroup& s, const WordSet& ws, unsigned max_degree)
{
    nlohmann::json groups = nlohmann::json::array();
    for (unsigned d = 0; d <= max_degree; ++d) {
        nlohmann::json words = nlohmann::json::array();
        for (const auto& w : ws.of_degree(s, d)) words.push_back(word_to_json(s, w));
        if (!words.empty() || d > 0) groups.push_back({{"degree", d}, {"words", std::move(words)}});
    }
    return groups;
}

} // namespace mixshuffle
