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

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "mixshuffle/rings.hpp"

namespace mixshuffle {

using Vec = std::vector<mpq_class>;

/// Dense row-major matrix with entries canonical in its ring.
class Matrix {
public:
    Matrix(RingSpec ring, std::size_t rows, std::size_t cols);
    Matrix(RingSpec ring, const std::vector<std::vector<long>>& rows);

    static Matrix identity(const RingSpec& ring, std::size_t n);

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const mpq_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, mpq_class v);
    RingElem elem(std::size_t i, std::size_t j) const { return {ring_, at(i, j)}; }

    Matrix operator*(const Matrix& other) const;
    Vec apply(const Vec& x) const;
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    nlohmann::json to_json() const;

private:
    RingSpec ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpq_class> a_;
};

struct RowReduction {
    std::size_t rank = 0;
    std::vector<Vec> kernel_basis;
    std::vector<std::size_t> pivot_columns;
};

// Field-only (Q or F_p). Leftmost pivot column, topmost usable row.
RowReduction row_reduce(const Matrix& m);

struct SmithForm {
    std::vector<mpz_class> D; // nonzero invariant factors, d_i | d_{i+1}
    Matrix U;                 // rows x rows, unimodular
    Matrix V;                 // cols x cols, unimodular
    std::size_t rank() const { return D.size(); }
    // Z^rows / im(m) = (+) Z/d_i (+) Z^(rows - rank)
    std::size_t cokernel_free_rank() const;
    bool all_units() const;
    std::optional<mpz_class> first_torsion() const;
};

// Integer matrices only. Classical reduction with smallest-|entry| pivoting.
SmithForm smith_normal_form(const Matrix& m);

/// Z/p^N analogue: U*m*V = diag(p^{v_i}) with the nonzero diagonal entries listed in valuations.
struct LocalSmithForm {
    std::vector<unsigned> valuations;
    Matrix U;
    Matrix V;
    std::size_t unit_rank() const;
};
LocalSmithForm local_smith_form(const Matrix& m);

// Any x with m*x = b, or nullopt. Works over every ring kind.
std::optional<Vec> solve_over_ring(const Matrix& m, const Vec& b);

/// Factorization reused for many right-hand sides against one matrix.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& m);
    std::optional<Vec> solve(const Vec& b) const;
    // Solvability of m*x = e_row without building x.
    bool reaches_unit_vector(std::size_t row) const;
    std::size_t rank() const { return rank_; }

private:
    bool compatible(const Vec& c) const;
    Vec transform(const Vec& b) const;

    RingSpec ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::size_t rank_ = 0;
    // Q, F_p: E*m = R in reduced echelon form. Z and Z/p^N: U*m*V diagonal.
    Matrix left_;
    std::optional<Matrix> right_;
    std::vector<std::size_t> pivots_;
    std::vector<mpz_class> divisors_;
};

// Rank of an integer-valued matrix reduced into F_p.
std::size_t rank_mod_p(const Matrix& m, std::uint64_t p);

Matrix change_ring(const Matrix& m, const RingSpec& ring);

} // namespace mixshuffle
