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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <json.hpp>

#include "mixshuffle/rings.hpp"

namespace mixshuffle {

using Slot = std::int16_t;
// Flat slot encoding of one semigroup element; the layout is fixed by the semigroup.
using Element = boost::container::small_vector<Slot, 4>;

enum class SemigroupKind { FreeAbelian, OrderedSet, FinitePIdempotent, ElementaryPGroup, Unitarized, Product };

enum class ClassTag { FG, PG, JG, IG, EG };
std::string class_tag_name(ClassTag tag);

class OrderedSemigroup;
using SemigroupPtr = std::shared_ptr<const OrderedSemigroup>;

struct FormatOptions {
    bool ascii = false;
};

/// Ordered abelian semigroup (or monoid) presented by kind. Elements are Slot
/// vectors of length width(). Infinite kinds are only ever enumerated up to a degree.
class OrderedSemigroup {
public:
    // Degree-then-lex order on monomials; generators listed smallest first.
    static SemigroupPtr free_abelian(std::vector<std::string> generators);
    // Bare ordered alphabet (every letter degree 1) without a multiplication.
    static SemigroupPtr ordered_set(std::vector<std::string> letters);
    // table[i][j] = index of i*j; order lists element indices smallest first.
    static SemigroupPtr finite(std::vector<std::vector<int>> table, std::vector<int> order,
                               std::vector<std::string> names = {});
    // mu_p^k with e smallest and the remaining elements ordered lexicographically by exponent digits.
    static SemigroupPtr elementary_p_group(std::uint64_t p, unsigned copies);
    static SemigroupPtr unitarize(SemigroupPtr inner);
    static SemigroupPtr product(SemigroupPtr left, SemigroupPtr right);

    // {e} u mu_{p-1} with e < xi < xi^2 < ... < xi^{p-1}.
    static SemigroupPtr unitarized_cyclic(std::uint64_t p);
    static SemigroupPtr power(const SemigroupPtr& s, unsigned copies);

    static SemigroupPtr from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    SemigroupKind kind() const noexcept { return kind_; }
    unsigned width() const noexcept { return width_; }
    bool has_identity() const noexcept { return has_identity_; }
    bool has_product() const noexcept { return has_product_; }
    bool is_finite() const noexcept { return finite_; }
    // Finite semigroups grade every element in degree 0; a bare ordered set keeps degree 1 letters.
    bool degree_zero_letters() const noexcept { return finite_ && kind_ != SemigroupKind::OrderedSet; }
    const std::string& descriptor() const noexcept { return descriptor_; }
    // FreeAbelian generator names or OrderedSet letters.
    const std::vector<std::string>& generator_names() const noexcept { return names_; }
    const SemigroupPtr& left() const noexcept { return left_; }
    const SemigroupPtr& right() const noexcept { return right_; }
    std::uint64_t group_prime() const noexcept { return p_; }

    void multiply(const Slot* a, const Slot* b, Slot* out) const;
    int compare(const Slot* a, const Slot* b) const;
    unsigned degree(const Slot* a) const;
    bool is_identity(const Slot* a) const;
    Element identity() const;
    Element multiply(const Element& a, const Element& b) const;
    Element pow(const Element& a, std::uint64_t e) const;

    // Every element of degree <= max_degree, sorted ascending.
    std::vector<Element> elements_up_to(unsigned max_degree) const;
    std::vector<Element> elements_of_degree(unsigned degree) const;
    // The k-th generator as a letter (FreeAbelian / OrderedSet, or through unitarization).
    Element generator(std::size_t k) const;

    std::string format(const Slot* a, const FormatOptions& opts = {}) const;
    Element parse(std::string_view text) const;

    friend bool operator==(const OrderedSemigroup& a, const OrderedSemigroup& b)
    {
        return a.descriptor_ == b.descriptor_;
    }

private:
    OrderedSemigroup() = default;
    void finish();
    std::optional<Element> try_parse(std::string_view text) const;

    SemigroupKind kind_ = SemigroupKind::FreeAbelian;
    unsigned width_ = 0;
    bool has_identity_ = false;
    bool has_product_ = true;
    bool finite_ = false;
    std::string descriptor_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    std::vector<int> order_;
    std::vector<int> rank_;
    int identity_index_ = -1;
    std::uint64_t p_ = 0;
    SemigroupPtr left_;
    SemigroupPtr right_;
};

void require_same(const OrderedSemigroup& a, const OrderedSemigroup& b);

/// An element bundled with its parent semigroup.
struct SemigroupElement {
    SemigroupPtr parent;
    Element data;

    std::string to_string(const FormatOptions& opts = {}) const { return parent->format(data.data(), opts); }
    friend bool operator==(const SemigroupElement& a, const SemigroupElement& b)
    {
        return *a.parent == *b.parent && a.data == b.data;
    }
};

SemigroupElement sg_multiply(const SemigroupElement& a, const SemigroupElement& b);
int sg_compare(const SemigroupElement& a, const SemigroupElement& b);
SemigroupElement sg_p_power(const SemigroupElement& a, std::uint64_t p);

struct Classification {
    std::set<ClassTag> tags;
    unsigned degree_bound = 0;
    bool exhaustive = false; // true when S is finite and every element was checked
    std::size_t elements_checked = 0;
    std::vector<std::string> notes;

    bool has(ClassTag t) const { return tags.count(t) != 0; }
    nlohmann::json to_json() const;
};

Classification classify(const SemigroupPtr& s, std::uint64_t p, unsigned degree_bound);

struct S1S2 {
    std::vector<Element> s1;
    std::vector<Element> s2;
};
S1S2 split_s1_s2(const SemigroupPtr& s, std::uint64_t p, unsigned degree_bound);

// Intersection over r = 1..iterations of the p^r-th powers landing inside the bound.
// iterations = 0 picks the smallest r with p^r > degree_bound.
std::vector<Element> p_divisible_elements(const SemigroupPtr& s, std::uint64_t p, unsigned degree_bound,
                                          unsigned iterations = 0);

// Three-element p-idempotent semigroups: p = 2 gives the chain semilattice {a < b < c}
// under min, odd p gives {0, 1, -1} under multiplication ordered 0 < 1 < -1.
SemigroupPtr three_element_idempotent(std::uint64_t p);

} // namespace mixshuffle
