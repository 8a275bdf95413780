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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixshuffle/linalg.hpp"
#include "mixshuffle/rota_baxter.hpp"
#include "mixshuffle/shuffle.hpp"

namespace mixshuffle {

enum class RelationKind { None, PowerZero, PowerScalar, PowerOne };

/// g^e = 0, g^e = c*g or g^e = 1.
struct Relation {
    RelationKind kind = RelationKind::None;
    unsigned exponent = 0;
    mpq_class scalar = 0;

    static Relation none() { return {}; }
    static Relation power_zero(unsigned e) { return {RelationKind::PowerZero, e, 0}; }
    static Relation power_scalar(unsigned e, mpq_class c) { return {RelationKind::PowerScalar, e, std::move(c)}; }
    static Relation power_one(unsigned e) { return {RelationKind::PowerOne, e, 1}; }
    // Largest admissible exponent in a monomial basis, or nullopt when unbounded.
    std::optional<unsigned> cap() const
    {
        if (kind == RelationKind::None) return std::nullopt;
        return exponent - 1;
    }
};

enum class ProductKind { Shuffle, RotaBaxter };

struct Generator {
    std::string name;
    TensorPoly image;
    unsigned degree = 0;
    unsigned weight = 0; // tensor length of the leading word (tail length for Rota-Baxter)
    Relation relation;
};

/// Abstract generators bound to images in a mixable shuffle or Rota-Baxter algebra.
struct PresentedAlgebra {
    AlgebraPtr algebra;
    ProductKind product = ProductKind::Shuffle;
    std::vector<Generator> generators;

    PresentedAlgebra(AlgebraPtr a, ProductKind k) : algebra(std::move(a)), product(k) {}
    void add(std::string name, TensorPoly image, Relation relation = Relation::none());
    TensorPoly multiply(const TensorPoly& a, const TensorPoly& b) const;
    TensorPoly unit() const;
    TensorPoly power(std::size_t generator, unsigned e) const;
};

struct Monomial {
    std::vector<unsigned> exponents;
    TensorPoly image;
};

// Relation-admissible monomials of degree n whose weights sum to at most max_weight.
std::vector<Monomial> monomial_images(const PresentedAlgebra& P, unsigned degree, unsigned max_weight);
// Basis words of the cell (degree n, length or tail length <= max_weight).
std::vector<Word> cell_basis(const PresentedAlgebra& P, unsigned degree, unsigned max_weight);

struct CellRecord {
    unsigned degree = 0;
    unsigned length_bound = 0;
    std::size_t dimension = 0;
    std::size_t monomials = 0;
    std::size_t rank = 0;
    bool counts_match = true;
    bool independent = true;
    bool spans = true;
    bool pass = true;
    std::string detail;
    std::optional<Word> unreachable;

    nlohmann::json to_json(const OrderedSemigroup& s) const;
};

struct CellOptions {
    bool require_count = true;
    bool require_independent = true;
    bool require_span = true;
    // Restricts the basis, e.g. to words outside a complement summand.
    std::function<bool(const Word&)> basis_filter;
};

// Independence over Q and F_p is rank = #monomials; over Z/p^N the p-adic unit rank; over Z the
// Smith form must have only unit divisors (the span is a direct summand).
CellRecord check_cell(const PresentedAlgebra& P, unsigned degree, unsigned max_weight, const CellOptions& opts = {});
CellRecord check_independence(const PresentedAlgebra& P, unsigned degree, unsigned max_weight);
CellRecord check_spanning(const PresentedAlgebra& P, unsigned degree, unsigned max_weight);

struct CheckRecord {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerificationReport {
    std::string theorem;
    std::string ring;
    std::string lambda;
    std::string semigroup;
    unsigned degree_bound = 0;
    std::optional<unsigned> length_bound;
    std::vector<CellRecord> cells;
    std::vector<CheckRecord> checks;
    std::optional<std::string> counterexample;
    SemigroupPtr semigroup_ptr;

    bool pass() const;
    void add_check(std::string name, bool ok, std::string detail = {});
    nlohmann::json to_json() const;
    std::string to_table() const;
};

struct VerifyOptions {
    bool parallel = false;
};

// Fills report.cells with one check_cell per (degree, length) pair, optionally fanned out.
void run_cells(VerificationReport& report, const PresentedAlgebra& P,
               const std::vector<std::pair<unsigned, unsigned>>& cells, const CellOptions& cell_opts,
               const VerifyOptions& opts);

// Coefficient of t^n in prod_d (1 - t^d)^(-c_d): degree-n monomials in a free commutative algebra
// with c_d generators of degree d.
std::vector<std::size_t> polynomial_hilbert(const std::vector<std::size_t>& generator_counts, unsigned max_degree);

// Over Q: Lyn(S) monomials form a basis of each graded piece.
VerificationReport verify_radford_hoffman(const SemigroupPtr& s, const mpq_class& lambda, unsigned degree_bound,
                                          std::optional<unsigned> length_bound = {}, const VerifyOptions& opts = {});

// Over F_p, weight 0: TL with w^p = 0.
VerificationReport verify_fp_weight0(const SemigroupPtr& s, std::uint64_t p, unsigned degree_bound,
                                     std::optional<unsigned> length_bound = {}, const VerifyOptions& opts = {});

// Over F_p, weight nonzero; picks the PG or JG presentation from classify().
VerificationReport verify_fp_nonzero(const SemigroupPtr& s, std::uint64_t p, const mpq_class& lambda,
                                     unsigned degree_bound, std::optional<unsigned> length_bound = {},
                                     const VerifyOptions& opts = {});

// Over Z/p^N with a p-unit weight; stability reruns the cells at N + 2.
VerificationReport verify_zp(const SemigroupPtr& s, std::uint64_t p, unsigned precision, const mpq_class& lambda,
                             unsigned degree_bound, bool stability = true, const VerifyOptions& opts = {});

struct CokernelBasis {
    unsigned degree = 0;
    std::size_t rows = 0;            // dim of the degree-n piece
    std::size_t image_columns = 0;   // products of lower-degree basis words
    std::vector<mpz_class> divisors; // nonzero Smith invariants of mu_n
    bool free = true;
    std::optional<mpz_class> offending_divisor;
    std::size_t rank = 0;            // free rank of the cokernel
    std::vector<TensorPoly> lifted;  // Y^(n)
    bool lifted_words = true;        // Y^(n) consists of basis words (no fallback)
    bool unimodular = true;          // [im mu_n | Y^(n)] spans Z^rows
};

// Over Z with lambda = +-1 (any integer weight is accepted, freeness is reported).
CokernelBasis compute_cokernel_basis(const SemigroupPtr& s, const mpq_class& lambda, unsigned degree);

VerificationReport verify_z_polynomial(const SemigroupPtr& s, const mpq_class& lambda, unsigned degree_bound,
                                       const VerifyOptions& opts = {});

// X_1 subset X_2 subset ... X_k: the cokernel at each degree embeds as a direct summand.
std::vector<CheckRecord> nested_alphabet_checks(const mpq_class& lambda, unsigned alphabet_size,
                                                unsigned degree_bound);

// Deliberately wrong: Lyndon words as Z-generators. Expected to fail spanning.
VerificationReport verify_lyndon_over_z(const SemigroupPtr& s, const mpq_class& lambda, unsigned degree_bound);

enum class RBTheorem { Rbl, Rbafp1, Rbafp2, Rbafp3, Rbafp4, Rbazp, Rbaz };

struct RBParams {
    std::vector<std::string> alphabet{"x"};
    std::uint64_t p = 2;
    unsigned precision = 6;
    mpq_class lambda = 1;
    unsigned degree_bound = 3;
    unsigned length_bound = 3;
};

VerificationReport verify_rb_structure(RBTheorem theorem, const RBParams& params, const VerifyOptions& opts = {});

// Randomized product laws and Rota-Baxter identity; deterministic for a seed.
VerificationReport verify_properties(std::uint64_t seed, unsigned trials);

} // namespace mixshuffle
