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

#include "mixshuffle/semigroup.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>

namespace mixshuffle {

std::string class_tag_name(ClassTag tag)
{
    switch (tag) {
    case ClassTag::FG: return "FG";
    case ClassTag::PG: return "PG";
    case ClassTag::JG: return "JG";
    case ClassTag::IG: return "IG";
    case ClassTag::EG: return "EG";
    }
    return "?";
}

namespace {

constexpr const char* kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string exponent_suffix(long e, const FormatOptions& opts)
{
    if (e == 1) return "";
    if (opts.ascii) return "^" + std::to_string(e);
    std::string digits = std::to_string(e), out;
    for (char c : digits) out += kSuperscripts[c - '0'];
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Reads an exponent ("^12" or superscript digits) at s[pos]; returns 1 if none.
long read_exponent(std::string_view s, std::size_t& pos)
{
    if (pos < s.size() && s[pos] == '^') {
        std::size_t start = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) return -1;
        return std::stol(std::string(s.substr(start, pos - start)));
    }
    long value = 0;
    bool any = false;
    for (;;) {
        bool matched = false;
        for (int d = 0; d < 10; ++d) {
            std::string_view sup = kSuperscripts[d];
            if (s.substr(pos, sup.size()) == sup) {
                value = value * 10 + d;
                pos += sup.size();
                matched = any = true;
                break;
            }
        }
        if (!matched) break;
    }
    return any ? value : 1;
}

// Greedy monomial parser over a list of names: "x^2y", "xy²", "g1g2^3".
std::optional<std::vector<long>> parse_monomial(std::string_view s, const std::vector<std::string>& names)
{
    std::vector<long> exps(names.size(), 0);
    std::size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        if (s[pos] == '*' || s[pos] == ' ') {
            ++pos;
            continue;
        }
        std::size_t best = names.size(), best_len = 0;
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k].size() > best_len && s.substr(pos, names[k].size()) == names[k]) {
                best = k;
                best_len = names[k].size();
            }
        if (best == names.size()) return std::nullopt;
        pos += best_len;
        long e = read_exponent(s, pos);
        if (e < 0) return std::nullopt;
        exps[best] += e;
        any = true;
    }
    if (!any) return std::nullopt;
    return exps;
}

std::string format_monomial(const Slot* a, const std::vector<std::string>& names, const FormatOptions& opts)
{
    std::string out;
    for (std::size_t k = 0; k < names.size(); ++k)
        if (a[k] > 0) out += names[k] + exponent_suffix(a[k], opts);
    return out;
}

// Split on top-level commas (outside parentheses).
std::vector<std::string_view> split_top(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == sep && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

} // namespace

void OrderedSemigroup::finish()
{
    nlohmann::json j = to_json();
    descriptor_ = j.dump();
}

SemigroupPtr OrderedSemigroup::free_abelian(std::vector<std::string> generators)
{
    if (generators.empty()) throw Error("free abelian semigroup needs at least one generator");
    if (generators.size() > 16) throw Error("too many generators");
    auto s = std::shared_ptr<OrderedSemigroup>(new OrderedSemigroup());
    s->kind_ = SemigroupKind::FreeAbelian;
    s->width_ = static_cast<unsigned>(generators.size());
    s->names_ = std::move(generators);
    for (const auto& n : s->names_)
        if (n.empty() || n == "1" || n == "e") throw Error("reserved or empty generator name '" + n + "'");
    s->finish();
    return s;
}

SemigroupPtr OrderedSemigroup::ordered_set(std::vector<std::string> letters)
{
    if (letters.empty()) throw Error("ordered set needs at least one letter");
    auto s = std::shared_ptr<OrderedSemigroup>(new OrderedSemigroup());
    s->kind_ = SemigroupKind::OrderedSet;
    s->width_ = 1;
    s->has_product_ = false;
    s->finite_ = true;
    s->names_ = std::move(letters);
    s->finish();
    return s;
}

SemigroupPtr OrderedSemigroup::finite(std::vector<std::vector<int>> table, std::vector<int> order,
                                      std::vector<std::string> names)
{
    const std::size_t n = table.size();
    if (n == 0) throw Error("finite semigroup table is empty");
    for (const auto& row : table) {
        if (row.size() != n) throw Error("multiplication table must be square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error("table entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j] != table[j][i]) throw Error("multiplication table is not commutative");
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw Error("multiplication table is not associative");
        }
    std::vector<int> rank(n, -1);
    if (order.size() != n) throw Error("order must list every element exactly once");
    for (std::size_t r = 0; r < n; ++r) {
        if (order[r] < 0 || static_cast<std::size_t>(order[r]) >= n || rank[order[r]] != -1)
            throw Error("order must be a permutation of the elements");
        rank[order[r]] = static_cast<int>(r);
    }
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    if (names.size() != n) throw Error("names must match the table size");

    auto s = std::shared_ptr<OrderedSemigroup>(new OrderedSemigroup());
    s->kind_ = SemigroupKind::FinitePIdempotent;
    s->width_ = 1;
    s->finite_ = true;
    s->table_ = std::move(table);
    s->order_ = std::move(order);
    s->rank_ = std::move(rank);
    s->names_ = std::move(names);
    for (std::size_t e = 0; e < n && s->identity_index_ < 0; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = s->table_[e][i] == static_cast<int>(i);
        if (ok) s->identity_index_ = static_cast<int>(e);
    }
    s->has_identity_ = s->identity_index_ >= 0;
    s->finish();
    return s;
}

SemigroupPtr OrderedSemigroup::elementary_p_group(std::uint64_t p, unsigned copies)
{
    if (!is_prime(p)) throw Error("mu_p needs a prime p");
    if (copies == 0 || copies > 8) throw Error("mu_p copies must be in 1..8");
    if (p > 10000) throw Error("p too large for mu_p");
    auto s = std::shared_ptr<OrderedSemigroup>(new OrderedSemigroup());
    s->kind_ = SemigroupKind::ElementaryPGroup;
    s->width_ = copies;
    s->p_ = p;
    s->finite_ = true;
    s->has_identity_ = true;
    if (copies == 1) s->names_ = {"g"};
    else
        for (unsigned k = 1; k <= copies; ++k) s->names_.push_back("g" + std::to_string(k));
    s->finish();
    return s;
}

SemigroupPtr OrderedSemigroup::unitarize(SemigroupPtr inner)
{
    if (!inner) throw Error("null semigroup");
    auto s = std::shared_ptr<OrderedSemigroup>(new OrderedSemigroup());
    s->kind_ = SemigroupKind::Unitarized;
    s->width_ = inner->width() + 1;
    s->has_identity_ = true;
    s->has_product_ = inner->has_product();
    s->finite_ = inner->is_finite();
    s->left_ = std::move(inner);
    s->finish();
    return s;
}

SemigroupPtr OrderedSemigroup::product(SemigroupPtr left, SemigroupPtr right)
{
    if (!left || !right) throw Error("null semigroup");
    auto s = std::shared_ptr<OrderedSemigroup>(new OrderedSemigroup());
    s->kind_ = SemigroupKind::Product;
    s->width_ = left->width() + right->width();
    s->has_identity_ = left->has_identity() && right->has_identity();
    s->has_product_ = left->has_product() && right->has_product();
    s->finite_ = left->is_finite() && right->is_finite();
    s->left_ = std::move(left);
    s->right_ = std::move(right);
    s->finish();
    return s;
}

SemigroupPtr OrderedSemigroup::unitarized_cyclic(std::uint64_t p)
{
    if (!is_prime(p)) throw Error("unitarized cyclic group needs a prime p");
    const int n = static_cast<int>(p - 1);
    // index i in 0..n-1 stands for xi^{i+1}; xi^{p-1} (index n-1) is the group identity
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<int> order(n);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        order[i] = i;
        names[i] = i == 0 ? "ξ" : "ξ" + exponent_suffix(i + 1, {});
        for (int j = 0; j < n; ++j) table[i][j] = ((i + 1) + (j + 1) - 1) % n;
    }
    return unitarize(finite(std::move(table), std::move(order), std::move(names)));
}

SemigroupPtr OrderedSemigroup::power(const SemigroupPtr& s, unsigned copies)
{
    if (copies == 0) throw Error("power needs at least one copy");
    SemigroupPtr out = s;
    for (unsigned k = 1; k < copies; ++k) out = product(out, s);
    return out;
}

SemigroupPtr OrderedSemigroup::from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("kind")) throw ParseError("semigroup JSON needs a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "free_abelian") return free_abelian(j.at("generators").get<std::vector<std::string>>());
        if (kind == "ordered_set") return ordered_set(j.at("elements").get<std::vector<std::string>>());
        if (kind == "mu_p") return elementary_p_group(j.at("p").get<std::uint64_t>(), j.value("copies", 1u));
        if (kind == "p_idempotent") {
            auto table = j.at("table").get<std::vector<std::vector<int>>>();
            std::vector<int> order;
            if (j.contains("order")) order = j.at("order").get<std::vector<int>>();
            else
                for (std::size_t i = 0; i < table.size(); ++i) order.push_back(static_cast<int>(i));
            std::vector<std::string> names;
            if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
            return finite(std::move(table), std::move(order), std::move(names));
        }
        if (kind == "unitarize") return unitarize(from_json(j.at("inner")));
        if (kind == "product") return product(from_json(j.at("left")), from_json(j.at("right")));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("semigroup JSON: ") + e.what());
    }
    throw ParseError("unknown semigroup kind '" + kind + "'");
}

nlohmann::json OrderedSemigroup::to_json() const
{
    switch (kind_) {
    case SemigroupKind::FreeAbelian: return {{"kind", "free_abelian"}, {"generators", names_}};
    case SemigroupKind::OrderedSet: return {{"kind", "ordered_set"}, {"elements", names_}};
    case SemigroupKind::ElementaryPGroup: return {{"kind", "mu_p"}, {"p", p_}, {"copies", width_}};
    case SemigroupKind::FinitePIdempotent:
        return {{"kind", "p_idempotent"}, {"table", table_}, {"order", order_}, {"names", names_}};
    case SemigroupKind::Unitarized: return {{"kind", "unitarize"}, {"inner", left_->to_json()}};
    case SemigroupKind::Product:
        return {{"kind", "product"}, {"left", left_->to_json()}, {"right", right_->to_json()}};
    }
    return {};
}

void OrderedSemigroup::multiply(const Slot* a, const Slot* b, Slot* out) const
{
    switch (kind_) {
    case SemigroupKind::FreeAbelian:
        for (unsigned k = 0; k < width_; ++k) out[k] = static_cast<Slot>(a[k] + b[k]);
        return;
    case SemigroupKind::OrderedSet: throw Error("an ordered set has no multiplication");
    case SemigroupKind::FinitePIdempotent: out[0] = static_cast<Slot>(table_[a[0]][b[0]]); return;
    case SemigroupKind::ElementaryPGroup:
        for (unsigned k = 0; k < width_; ++k) out[k] = static_cast<Slot>((a[k] + b[k]) % static_cast<int>(p_));
        return;
    case SemigroupKind::Unitarized:
        if (a[0] == 0) {
            std::copy(b, b + width_, out);
        } else if (b[0] == 0) {
            std::copy(a, a + width_, out);
        } else {
            out[0] = 1;
            left_->multiply(a + 1, b + 1, out + 1);
        }
        return;
    case SemigroupKind::Product: {
        const unsigned w = left_->width();
        left_->multiply(a, b, out);
        right_->multiply(a + w, b + w, out + w);
        return;
    }
    }
}

int OrderedSemigroup::compare(const Slot* a, const Slot* b) const
{
    switch (kind_) {
    case SemigroupKind::FreeAbelian: {
        const unsigned da = degree(a), db = degree(b);
        if (da != db) return da < db ? -1 : 1;
        // more of a smaller generator sorts first: a^2 < ab < b^2
        for (unsigned k = 0; k < width_; ++k)
            if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
        return 0;
    }
    case SemigroupKind::OrderedSet: return a[0] == b[0] ? 0 : (a[0] < b[0] ? -1 : 1);
    case SemigroupKind::FinitePIdempotent:
        return rank_[a[0]] == rank_[b[0]] ? 0 : (rank_[a[0]] < rank_[b[0]] ? -1 : 1);
    case SemigroupKind::ElementaryPGroup:
        for (unsigned k = 0; k < width_; ++k)
            if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
        return 0;
    case SemigroupKind::Unitarized:
        if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
        return a[0] == 0 ? 0 : left_->compare(a + 1, b + 1);
    case SemigroupKind::Product: {
        int c = left_->compare(a, b);
        return c != 0 ? c : right_->compare(a + left_->width(), b + left_->width());
    }
    }
    return 0;
}

unsigned OrderedSemigroup::degree(const Slot* a) const
{
    switch (kind_) {
    case SemigroupKind::FreeAbelian: {
        unsigned d = 0;
        for (unsigned k = 0; k < width_; ++k) d += static_cast<unsigned>(a[k]);
        return d;
    }
    case SemigroupKind::OrderedSet: return 1;
    case SemigroupKind::FinitePIdempotent:
    case SemigroupKind::ElementaryPGroup: return 0;
    case SemigroupKind::Unitarized: return a[0] == 0 ? 0 : left_->degree(a + 1);
    case SemigroupKind::Product: return left_->degree(a) + right_->degree(a + left_->width());
    }
    return 0;
}

bool OrderedSemigroup::is_identity(const Slot* a) const
{
    switch (kind_) {
    case SemigroupKind::FreeAbelian:
    case SemigroupKind::OrderedSet: return false;
    case SemigroupKind::FinitePIdempotent: return a[0] == identity_index_;
    case SemigroupKind::ElementaryPGroup:
        for (unsigned k = 0; k < width_; ++k)
            if (a[k] != 0) return false;
        return true;
    case SemigroupKind::Unitarized: return a[0] == 0;
    case SemigroupKind::Product: return left_->is_identity(a) && right_->is_identity(a + left_->width());
    }
    return false;
}

Element OrderedSemigroup::identity() const
{
    if (!has_identity_) throw Error("semigroup has no identity element");
    Element out(width_, 0);
    switch (kind_) {
    case SemigroupKind::FinitePIdempotent: out[0] = static_cast<Slot>(identity_index_); break;
    case SemigroupKind::Product: {
        Element l = left_->identity(), r = right_->identity();
        std::copy(l.begin(), l.end(), out.begin());
        std::copy(r.begin(), r.end(), out.begin() + left_->width());
        break;
    }
    default: break;
    }
    return out;
}

Element OrderedSemigroup::multiply(const Element& a, const Element& b) const
{
    if (a.size() != width_ || b.size() != width_) throw ContextMismatch("element does not belong to semigroup");
    Element out(width_, 0);
    multiply(a.data(), b.data(), out.data());
    return out;
}

Element OrderedSemigroup::pow(const Element& a, std::uint64_t e) const
{
    if (e == 0) return identity();
    Element result;
    Element base = a;
    bool have = false;
    while (e) {
        if (e & 1u) {
            result = have ? multiply(result, base) : base;
            have = true;
        }
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

std::vector<Element> OrderedSemigroup::elements_up_to(unsigned max_degree) const
{
    std::vector<Element> out;
    switch (kind_) {
    case SemigroupKind::FreeAbelian: {
        Element cur(width_, 0);
        std::function<void(unsigned, unsigned)> rec = [&](unsigned k, unsigned left) {
            if (k == width_) {
                if (left < max_degree + 1 && std::any_of(cur.begin(), cur.end(), [](Slot s) { return s > 0; }))
                    out.push_back(cur);
                return;
            }
            for (unsigned e = 0; e <= left; ++e) {
                cur[k] = static_cast<Slot>(e);
                rec(k + 1, left - e);
            }
            cur[k] = 0;
        };
        rec(0, max_degree);
        break;
    }
    case SemigroupKind::OrderedSet:
        if (max_degree >= 1)
            for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(Element{static_cast<Slot>(i)});
        break;
    case SemigroupKind::FinitePIdempotent:
        for (std::size_t i = 0; i < table_.size(); ++i) out.push_back(Element{static_cast<Slot>(i)});
        break;
    case SemigroupKind::ElementaryPGroup: {
        std::uint64_t total = 1;
        for (unsigned k = 0; k < width_; ++k) total *= p_;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Element cur(width_, 0);
            std::uint64_t rest = idx;
            for (unsigned k = width_; k-- > 0; rest /= p_) cur[k] = static_cast<Slot>(rest % p_);
            out.push_back(std::move(cur));
        }
        break;
    }
    case SemigroupKind::Unitarized: {
        out.push_back(Element(width_, 0));
        for (const auto& e : left_->elements_up_to(max_degree)) {
            Element x(width_, 0);
            x[0] = 1;
            std::copy(e.begin(), e.end(), x.begin() + 1);
            out.push_back(std::move(x));
        }
        break;
    }
    case SemigroupKind::Product: {
        auto ls = left_->elements_up_to(max_degree);
        auto rs = right_->elements_up_to(max_degree);
        for (const auto& l : ls) {
            const unsigned dl = left_->degree(l.data());
            for (const auto& r : rs) {
                if (dl + right_->degree(r.data()) > max_degree) continue;
                Element x(l.begin(), l.end());
                x.insert(x.end(), r.begin(), r.end());
                out.push_back(std::move(x));
            }
        }
        break;
    }
    }
    std::sort(out.begin(), out.end(),
              [this](const Element& a, const Element& b) { return compare(a.data(), b.data()) < 0; });
    return out;
}

std::vector<Element> OrderedSemigroup::elements_of_degree(unsigned d) const
{
    std::vector<Element> out;
    for (auto& e : elements_up_to(d))
        if (degree(e.data()) == d) out.push_back(std::move(e));
    return out;
}

Element OrderedSemigroup::generator(std::size_t k) const
{
    switch (kind_) {
    case SemigroupKind::FreeAbelian: {
        if (k >= width_) throw Error("generator index out of range");
        Element e(width_, 0);
        e[k] = 1;
        return e;
    }
    case SemigroupKind::OrderedSet:
        if (k >= names_.size()) throw Error("generator index out of range");
        return Element{static_cast<Slot>(k)};
    case SemigroupKind::Unitarized: {
        Element inner = left_->generator(k);
        Element e(width_, 0);
        e[0] = 1;
        std::copy(inner.begin(), inner.end(), e.begin() + 1);
        return e;
    }
    default: throw Error("semigroup kind has no named generators");
    }
}

std::string OrderedSemigroup::format(const Slot* a, const FormatOptions& opts) const
{
    switch (kind_) {
    case SemigroupKind::FreeAbelian: return format_monomial(a, names_, opts);
    case SemigroupKind::OrderedSet: return names_.at(static_cast<std::size_t>(a[0]));
    case SemigroupKind::FinitePIdempotent: {
        const std::string& n = names_.at(static_cast<std::size_t>(a[0]));
        if (!opts.ascii) return n;
        std::string out;
        std::size_t pos = 0;
        for (; pos < n.size();) {
            bool sup = false;
            for (int d = 0; d < 10; ++d) {
                std::string_view s = kSuperscripts[d];
                if (std::string_view(n).substr(pos, s.size()) == s) {
                    if (out.empty() || out.back() < '0' || out.back() > '9') out += '^';
                    out += static_cast<char>('0' + d);
                    pos += s.size();
                    sup = true;
                    break;
                }
            }
            if (!sup) out += n[pos++];
        }
        return out;
    }
    case SemigroupKind::ElementaryPGroup: {
        if (is_identity(a)) return "e";
        return format_monomial(a, names_, opts);
    }
    case SemigroupKind::Unitarized: return a[0] == 0 ? "1" : left_->format(a + 1, opts);
    case SemigroupKind::Product:
        return "(" + left_->format(a, opts) + "," + right_->format(a + left_->width(), opts) + ")";
    }
    return "?";
}

std::optional<Element> OrderedSemigroup::try_parse(std::string_view text) const
{
    text = trim(text);
    if (text.empty()) return std::nullopt;
    switch (kind_) {
    case SemigroupKind::FreeAbelian: {
        auto exps = parse_monomial(text, names_);
        if (!exps) return std::nullopt;
        Element e(width_, 0);
        for (unsigned k = 0; k < width_; ++k) {
            if ((*exps)[k] > 2000) return std::nullopt;
            e[k] = static_cast<Slot>((*exps)[k]);
        }
        return e;
    }
    case SemigroupKind::OrderedSet:
    case SemigroupKind::FinitePIdempotent:
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == text) return Element{static_cast<Slot>(i)};
        if (kind_ == SemigroupKind::FinitePIdempotent) {
            // ASCII spelling of superscripted names
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (format(std::array<Slot, 1>{static_cast<Slot>(i)}.data(), {true}) == text)
                    return Element{static_cast<Slot>(i)};
        }
        return std::nullopt;
    case SemigroupKind::ElementaryPGroup: {
        if (text == "e") return Element(width_, 0);
        auto exps = parse_monomial(text, names_);
        if (!exps) return std::nullopt;
        Element e(width_, 0);
        for (unsigned k = 0; k < width_; ++k) e[k] = static_cast<Slot>((*exps)[k] % static_cast<long>(p_));
        return e;
    }
    case SemigroupKind::Unitarized: {
        if (text == "1") return Element(width_, 0);
        auto inner = left_->try_parse(text);
        if (!inner) return std::nullopt;
        Element e(width_, 0);
        e[0] = 1;
        std::copy(inner->begin(), inner->end(), e.begin() + 1);
        return e;
    }
    case SemigroupKind::Product: {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')') return std::nullopt;
        auto parts = split_top(text.substr(1, text.size() - 2), ',');
        if (parts.size() != 2) return std::nullopt;
        auto l = left_->try_parse(parts[0]);
        auto r = right_->try_parse(parts[1]);
        if (!l || !r) return std::nullopt;
        Element e(l->begin(), l->end());
        e.insert(e.end(), r->begin(), r->end());
        return e;
    }
    }
    return std::nullopt;
}

Element OrderedSemigroup::parse(std::string_view text) const
{
    auto e = try_parse(text);
    if (!e) throw ParseError("cannot read '" + std::string(text) + "' as an element");
    return *e;
}

void require_same(const OrderedSemigroup& a, const OrderedSemigroup& b)
{
    if (!(a == b)) throw ContextMismatch("elements belong to different semigroups");
}

SemigroupElement sg_multiply(const SemigroupElement& a, const SemigroupElement& b)
{
    require_same(*a.parent, *b.parent);
    return {a.parent, a.parent->multiply(a.data, b.data)};
}

int sg_compare(const SemigroupElement& a, const SemigroupElement& b)
{
    require_same(*a.parent, *b.parent);
    return a.parent->compare(a.data.data(), b.data.data());
}

SemigroupElement sg_p_power(const SemigroupElement& a, std::uint64_t p)
{
    return {a.parent, a.parent->pow(a.data, p)};
}

nlohmann::json Classification::to_json() const
{
    nlohmann::json tags_json = nlohmann::json::array();
    for (auto t : tags) tags_json.push_back(class_tag_name(t));
    return {{"classes", tags_json},
            {"degree_bound", degree_bound},
            {"exhaustive", exhaustive},
            {"elements_checked", elements_checked},
            {"notes", notes}};
}

Classification classify(const SemigroupPtr& s, std::uint64_t p, unsigned degree_bound)
{
    if (!is_prime(p)) throw Error("classify needs a prime");
    Classification out;
    out.degree_bound = degree_bound;
    out.exhaustive = s->is_finite();
    if (!s->has_product()) {
        out.notes.push_back("no multiplication: an ordered set belongs to none of the classes");
        return out;
    }
    const auto elems = s->elements_up_to(degree_bound);
    out.elements_checked = elems.size();
    std::vector<Element> pw(elems.size()), pw2(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        pw[i] = s->pow(elems[i], p);
        pw2[i] = s->pow(pw[i], p);
    }
    auto cmp = [&](const Element& a, const Element& b) { return s->compare(a.data(), b.data()); };

    bool pg = true;
    for (std::size_t i = 0; i < elems.size() && pg; ++i) {
        if (cmp(pw[i], elems[i]) < 0) {
            pg = false;
            out.notes.push_back("a^p < a for a = " + s->format(elems[i].data()));
        }
        // elems is sorted ascending, so monotonicity reduces to neighbours
        if (i + 1 < elems.size() && cmp(pw[i], pw[i + 1]) >= 0) {
            pg = false;
            out.notes.push_back("p-th power not strictly increasing at " + s->format(elems[i + 1].data()));
        }
    }
    if (pg) out.tags.insert(ClassTag::PG);

    bool jg = true;
    std::optional<std::size_t> max_s1, min_s2;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (pw2[i] != pw[i]) jg = false;
        if (pw[i] == elems[i]) max_s1 = i;
        else if (!min_s2) min_s2 = i;
    }
    if (jg && max_s1 && min_s2 && *max_s1 > *min_s2) {
        jg = false;
        out.notes.push_back("S1 is not below S2");
    }
    if (jg) out.tags.insert(ClassTag::JG);

    if (s->is_finite()) {
        bool ig = true;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (pw[i] != elems[i]) ig = false;
        if (ig) out.tags.insert(ClassTag::IG);
        if (s->has_identity()) {
            const Element e = s->identity();
            bool eg = cmp(e, elems.front()) == 0;
            for (std::size_t i = 0; i < elems.size() && eg; ++i) eg = pw[i] == e;
            if (eg) out.tags.insert(ClassTag::EG);
        }
    }
    if (s->kind() == SemigroupKind::FreeAbelian) out.tags.insert(ClassTag::FG);
    return out;
}

S1S2 split_s1_s2(const SemigroupPtr& s, std::uint64_t p, unsigned degree_bound)
{
    S1S2 out;
    for (auto& g : s->elements_up_to(degree_bound)) {
        if (s->pow(g, p) == g) out.s1.push_back(std::move(g));
        else out.s2.push_back(std::move(g));
    }
    return out;
}

std::vector<Element> p_divisible_elements(const SemigroupPtr& s, std::uint64_t p, unsigned degree_bound,
                                          unsigned iterations)
{
    if (iterations == 0) {
        std::uint64_t pr = p;
        iterations = 1;
        while (pr <= degree_bound) {
            pr *= p;
            ++iterations;
        }
    }
    const auto elems = s->elements_up_to(degree_bound);
    auto in_range = [&](const Element& x) {
        return std::any_of(elems.begin(), elems.end(), [&](const Element& y) { return y == x; });
    };
    std::vector<Element> current = elems;
    std::vector<Element> layer = elems;
    for (unsigned r = 1; r <= iterations; ++r) {
        std::vector<Element> next;
        for (const auto& u : layer) {
            Element v = s->pow(u, p);
            if (s->degree(v.data()) > degree_bound && !s->is_finite()) continue;
            if (std::find(next.begin(), next.end(), v) == next.end()) next.push_back(std::move(v));
        }
        layer = next;
        std::vector<Element> kept;
        for (const auto& x : current)
            if (std::find(layer.begin(), layer.end(), x) != layer.end() && in_range(x)) kept.push_back(x);
        current = std::move(kept);
    }
    return current;
}

SemigroupPtr three_element_idempotent(std::uint64_t p)
{
    if (!is_prime(p)) throw Error("three_element_idempotent needs a prime");
    if (p == 2) {
        // chain semilattice a < b < c, product = min
        std::vector<std::vector<int>> t(3, std::vector<int>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t[i][j] = std::min(i, j);
        return OrderedSemigroup::finite(t, {0, 1, 2}, {"a", "b", "c"});
    }
    // {0, 1, -1} under multiplication; indices 0 -> 0, 1 -> 1, 2 -> -1
    const int val[3] = {0, 1, -1};
    std::vector<std::vector<int>> t(3, std::vector<int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int v = val[i] * val[j];
            t[i][j] = v == 0 ? 0 : (v == 1 ? 1 : 2);
        }
    return OrderedSemigroup::finite(t, {0, 1, 2}, {"z", "u", "m"});
}

} // namespace mixshuffle
