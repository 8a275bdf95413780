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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixshuffle/shuffle.hpp"

namespace mixshuffle {

struct RBTerm {
    Element head;
    Word tail;
    mpq_class coeff;
};

/// Element of the free commutative Rota-Baxter algebra kS (x) Sh+(S). A pure tensor
/// a0 (x) a1 (x) ... (x) an is stored as the word a0 a1 ... an, so the first letter is the head.
class RBElement {
public:
    explicit RBElement(AlgebraPtr algebra) : poly_(std::move(algebra)) {}

    static RBElement pure(const AlgebraPtr& algebra, const Element& head, const Word& tail,
                          const mpq_class& coeff = 1);
    // Wraps a polynomial whose words all have length >= 1.
    static RBElement from_encoded(TensorPoly poly);
    // 1_A, which needs a monoid.
    static RBElement one(const AlgebraPtr& algebra);

    const AlgebraPtr& algebra() const noexcept { return poly_.algebra(); }
    const TensorPoly& encoded() const noexcept { return poly_; }
    std::vector<RBTerm> terms() const;
    bool is_zero() const noexcept { return poly_.is_zero(); }

    RBElement operator+(const RBElement& o) const { return from_encoded(poly_ + o.poly_); }
    RBElement operator-(const RBElement& o) const { return from_encoded(poly_ - o.poly_); }
    RBElement scaled(const mpq_class& c) const { return from_encoded(poly_.scaled(c)); }

    std::string to_string(const FormatOptions& opts = {}) const;
    nlohmann::json to_json() const;
    static RBElement from_json(const AlgebraPtr& algebra, const nlohmann::json& j);
    // "x", "1(x)x(x)x^2" style pure tensors joined by '+', or a single pure tensor.
    static RBElement parse(const AlgebraPtr& algebra, std::string_view text);

    friend bool operator==(const RBElement& a, const RBElement& b) { return a.poly_ == b.poly_; }
    friend bool operator!=(const RBElement& a, const RBElement& b) { return !(a == b); }

private:
    explicit RBElement(TensorPoly p) : poly_(std::move(p)) {}
    TensorPoly poly_;
};

// (a0 (x) a) . (b0 (x) b) = a0 b0 (x) (a (sh) b)
RBElement rb_product(const RBElement& a, const RBElement& b);
// Same product on encoded polynomials; used by the verification engine.
TensorPoly rb_product_encoded(const TensorPoly& a, const TensorPoly& b);
// P(a0 (x) a) = 1 (x) a0 (x) a
RBElement rb_operator_P(const RBElement& a);

struct RBIdentityCheck {
    bool holds = true;
    std::optional<Word> differing; // encoded word where the two sides disagree
    mpq_class lhs_coeff = 0;
    mpq_class rhs_coeff = 0;
    std::string detail;
};
// P(a)P(b) == P(a P(b)) + P(P(a) b) + lambda P(a b)
RBIdentityCheck check_rb_identity(const RBElement& a, const RBElement& b);

// Total degree of an encoded pure tensor and its tail length.
unsigned rb_degree(const OrderedSemigroup& s, const Word& encoded);
inline std::size_t rb_tail_length(const Word& encoded) { return encoded.empty() ? 0 : encoded.length() - 1; }

// Every encoded pure tensor of total degree n with tail length <= max_tail, pro-length ascending.
std::vector<Word> rb_basis(const OrderedSemigroup& s, unsigned degree, unsigned max_tail);

// x (x) 1-style generators x in X plus 1 (x) w for Lyndon w over the unitarized free monoid.
// `algebra` must be over unitarize(free_abelian(X)).
std::vector<RBElement> rbl_generating_set(const AlgebraPtr& algebra, const Bounds& tail_bounds);

// Pure tensors w0 (x) ... (x) wr, r >= 1, of degree <= degree_bound and tail length <= length_bound
// with some tail letter equal to the identity.
std::vector<Word> rbaz_interior_identity_span(const OrderedSemigroup& s, unsigned degree_bound,
                                              unsigned length_bound);
bool has_interior_identity(const OrderedSemigroup& s, const Word& encoded);

// x_n = 1 (x) 1^{(x) n}; in weight 0 these multiply like divided powers.
RBElement divided_power(const AlgebraPtr& algebra, unsigned n);

} // namespace mixshuffle
