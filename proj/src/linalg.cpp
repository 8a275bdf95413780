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

#include "mixshuffle/linalg.hpp"

#include <utility>

namespace mixshuffle {

Matrix::Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, mpq_class(0))
{
}

Matrix::Matrix(RingSpec ring, const std::vector<std::vector<long>>& rows)
    : Matrix(std::move(ring), rows.size(), rows.empty() ? 0 : rows.front().size())
{
    for (std::size_t i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols_) throw Error("ragged matrix literal");
        for (std::size_t j = 0; j < cols_; ++j) set(i, j, mpq_class(rows[i][j]));
    }
}

Matrix Matrix::identity(const RingSpec& ring, std::size_t n)
{
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, mpq_class v)
{
    v.canonicalize();
    ring_.reduce(v);
    a_[i * cols_ + j] = std::move(v);
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (!(ring_ == other.ring_)) throw ContextMismatch("matrix product across rings");
    if (cols_ != other.rows_) throw Error("matrix product shape mismatch");
    Matrix out(ring_, rows_, other.cols_);
    mpq_class acc;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < cols_; ++k)
                if (sgn(at(i, k)) != 0) acc += at(i, k) * other.at(k, j);
            out.set(i, j, acc);
        }
    return out;
}

Vec Matrix::apply(const Vec& x) const
{
    if (x.size() != cols_) throw Error("matrix-vector shape mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpq_class acc = 0;
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(at(i, k)) != 0) acc += at(i, k) * x[k];
        ring_.reduce(acc);
        out[i] = std::move(acc);
    }
    return out;
}

nlohmann::json Matrix::to_json() const
{
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < cols_; ++j) row.push_back(to_string(at(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"ring", ring_.name()}, {"rows", rows_}, {"cols", cols_}, {"entries", std::move(entries)}};
}

Matrix change_ring(const Matrix& m, const RingSpec& ring)
{
    Matrix out(ring, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
    return out;
}

namespace {

using Grid = std::vector<std::vector<mpq_class>>;
using ZGrid = std::vector<std::vector<mpz_class>>;

Grid to_grid(const Matrix& m)
{
    Grid g(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j);
    return g;
}

ZGrid to_zgrid(const Matrix& m)
{
    ZGrid g(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).get_den() != 1) throw Error("integer matrix expected");
            g[i][j] = m.at(i, j).get_num();
        }
    return g;
}

ZGrid z_identity(std::size_t n)
{
    ZGrid g(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
    return g;
}

Matrix from_zgrid(const RingSpec& ring, const ZGrid& g, std::size_t rows, std::size_t cols)
{
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, mpq_class(g[i][j]));
    return m;
}

// Reduced row echelon form of g in place, applying the same row operations to e.
std::vector<std::size_t> rref(Grid& g, Grid& e, const RingSpec& ring)
{
    const std::size_t rows = g.size();
    const std::size_t cols = rows ? g[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(g[i][c]) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(g[piv], g[r]);
        std::swap(e[piv], e[r]);
        const mpq_class inv = ring.inverse(g[r][c]);
        for (auto& v : g[r]) {
            v *= inv;
            ring.reduce(v);
        }
        for (auto& v : e[r]) {
            v *= inv;
            ring.reduce(v);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(g[i][c]) == 0) continue;
            const mpq_class f = g[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(g[r][j]) != 0) {
                    g[i][j] -= f * g[r][j];
                    ring.reduce(g[i][j]);
                }
            for (std::size_t j = 0; j < e[i].size(); ++j)
                if (sgn(e[r][j]) != 0) {
                    e[i][j] -= f * e[r][j];
                    ring.reduce(e[i][j]);
                }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void require_field(const RingSpec& ring)
{
    if (!ring.is_field()) throw Error("row reduction needs a field, got " + ring.name());
}

void row_sub(ZGrid& g, std::size_t dst, std::size_t src, const mpz_class& f)
{
    for (std::size_t j = 0; j < g[dst].size(); ++j)
        if (sgn(g[src][j]) != 0) g[dst][j] -= f * g[src][j];
}

void col_sub(ZGrid& g, std::size_t dst, std::size_t src, const mpz_class& f)
{
    for (auto& row : g)
        if (sgn(row[src]) != 0) row[dst] -= f * row[src];
}

void col_swap(ZGrid& g, std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (auto& row : g) std::swap(row[a], row[b]);
}

} // namespace

RowReduction row_reduce(const Matrix& m)
{
    require_field(m.ring());
    Grid g = to_grid(m);
    Grid e(m.rows());
    RowReduction out;
    out.pivot_columns = rref(g, e, m.ring());
    out.rank = out.pivot_columns.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : out.pivot_columns) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), mpq_class(0));
        v[f] = 1;
        for (std::size_t i = 0; i < out.rank; ++i) {
            v[out.pivot_columns[i]] = -g[i][f];
            m.ring().reduce(v[out.pivot_columns[i]]);
        }
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

std::size_t SmithForm::cokernel_free_rank() const { return U.rows() - D.size(); }

bool SmithForm::all_units() const
{
    for (const auto& d : D)
        if (d != 1) return false;
    return true;
}

std::optional<mpz_class> SmithForm::first_torsion() const
{
    for (const auto& d : D)
        if (d != 1) return d;
    return std::nullopt;
}

SmithForm smith_normal_form(const Matrix& m)
{
    if (m.ring().kind() != RingKind::Integers) throw Error("Smith normal form needs an integer matrix");
    const std::size_t rows = m.rows(), cols = m.cols();
    ZGrid a = to_zgrid(m);
    ZGrid u = z_identity(rows);
    ZGrid v = z_identity(cols);
    std::vector<mpz_class> diag;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // smallest |entry| in the trailing block
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (sgn(a[i][j]) != 0 && (bi == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0)) {
                    bi = i;
                    bj = j;
                }
        if (bi == rows) break;
        std::swap(a[t], a[bi]);
        std::swap(u[t], u[bi]);
        col_swap(a, t, bj);
        col_swap(v, t, bj);

        for (;;) {
            bool clean = true;
            mpz_class q;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(a[i][t]) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_sub(a, i, t, q);
                row_sub(u, i, t, q);
                if (sgn(a[i][t]) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(a[t][j]) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_sub(a, j, t, q);
                col_sub(v, j, t, q);
                if (sgn(a[t][j]) != 0) clean = false;
            }
            if (!clean) {
                // a remainder is now smaller than the pivot; bring the smallest one in
                std::size_t si = t, sj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (sgn(a[i][t]) != 0 && mpz_cmpabs(a[i][t].get_mpz_t(), a[si][sj].get_mpz_t()) < 0) {
                        si = i;
                        sj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (sgn(a[t][j]) != 0 && mpz_cmpabs(a[t][j].get_mpz_t(), a[si][sj].get_mpz_t()) < 0) {
                        si = t;
                        sj = j;
                    }
                std::swap(a[t], a[si]);
                std::swap(u[t], u[si]);
                col_swap(a, t, sj);
                col_swap(v, t, sj);
                continue;
            }
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_sub(a, t, bad, -1);
            row_sub(u, t, bad, -1);
        }
        if (sgn(a[t][t]) < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : u[t]) x = -x;
        }
        diag.push_back(a[t][t]);
    }

    const RingSpec z = RingSpec::integers();
    return SmithForm{std::move(diag), from_zgrid(z, u, rows, rows), from_zgrid(z, v, cols, cols)};
}

std::size_t LocalSmithForm::unit_rank() const
{
    std::size_t n = 0;
    for (auto v : valuations)
        if (v == 0) ++n;
    return n;
}

LocalSmithForm local_smith_form(const Matrix& m)
{
    const RingSpec& ring = m.ring();
    if (ring.kind() != RingKind::TruncatedPAdic && ring.kind() != RingKind::PrimeField)
        throw Error("local Smith form needs Z/p^N or F_p");
    const std::size_t rows = m.rows(), cols = m.cols();
    const mpz_class& mod = ring.modulus();
    const std::uint64_t p = ring.p();
    ZGrid a = to_zgrid(m);
    ZGrid u = z_identity(rows);
    ZGrid v = z_identity(cols);
    std::vector<unsigned> vals;
    auto norm = [&](mpz_class& x) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t()); };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t bi = rows, bj = cols;
        unsigned best = 0;
        for (std::size_t j = t; j < cols && !(bi != rows && best == 0); ++j)
            for (std::size_t i = t; i < rows; ++i) {
                if (sgn(a[i][j]) == 0) continue;
                unsigned val = p_valuation(a[i][j], p);
                if (bi == rows || val < best) {
                    bi = i;
                    bj = j;
                    best = val;
                }
            }
        if (bi == rows) break;
        std::swap(a[t], a[bi]);
        std::swap(u[t], u[bi]);
        col_swap(a, t, bj);
        col_swap(v, t, bj);

        mpz_class pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), p, best);
        mpz_class unit = a[t][t] / pv;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
        for (auto& x : a[t]) {
            x *= inv;
            norm(x);
        }
        for (auto& x : u[t]) {
            x *= inv;
            norm(x);
        }
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (sgn(a[i][t]) == 0) continue;
            mpz_class f = a[i][t] / pv;
            row_sub(a, i, t, f);
            row_sub(u, i, t, f);
            for (auto& x : a[i]) norm(x);
            for (auto& x : u[i]) norm(x);
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (sgn(a[t][j]) == 0) continue;
            mpz_class f = a[t][j] / pv;
            col_sub(a, j, t, f);
            col_sub(v, j, t, f);
            for (auto& row : a) norm(row[j]);
            for (auto& row : v) norm(row[j]);
        }
        vals.push_back(best);
    }
    return LocalSmithForm{std::move(vals), from_zgrid(ring, u, rows, rows), from_zgrid(ring, v, cols, cols)};
}

LinearSolver::LinearSolver(const Matrix& m)
    : ring_(m.ring()), rows_(m.rows()), cols_(m.cols()), left_(m.ring(), 0, 0)
{
    switch (ring_.kind()) {
    case RingKind::Rationals:
    case RingKind::PrimeField: {
        Grid g = to_grid(m);
        Grid e = to_grid(Matrix::identity(ring_, rows_));
        pivots_ = rref(g, e, ring_);
        rank_ = pivots_.size();
        left_ = Matrix(ring_, rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j) left_.set(i, j, e[i][j]);
        break;
    }
    case RingKind::Integers: {
        SmithForm s = smith_normal_form(m);
        rank_ = s.rank();
        divisors_ = s.D;
        left_ = std::move(s.U);
        right_ = std::move(s.V);
        break;
    }
    case RingKind::TruncatedPAdic: {
        LocalSmithForm s = local_smith_form(m);
        rank_ = s.valuations.size();
        for (auto v : s.valuations) {
            mpz_class pv;
            mpz_ui_pow_ui(pv.get_mpz_t(), ring_.p(), v);
            divisors_.push_back(pv);
        }
        left_ = std::move(s.U);
        right_ = std::move(s.V);
        break;
    }
    }
}

Vec LinearSolver::transform(const Vec& b) const
{
    if (b.size() != rows_) throw Error("right-hand side has wrong length");
    return left_.apply(b);
}

bool LinearSolver::compatible(const Vec& c) const
{
    for (std::size_t i = rank_; i < rows_; ++i)
        if (sgn(c[i]) != 0) return false;
    if (!divisors_.empty())
        for (std::size_t i = 0; i < rank_; ++i)
            if (!mpz_divisible_p(c[i].get_num_mpz_t(), divisors_[i].get_mpz_t())) return false;
    return true;
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const
{
    Vec c = transform(b);
    if (!compatible(c)) return std::nullopt;
    Vec x(cols_, mpq_class(0));
    if (!right_) {
        for (std::size_t i = 0; i < rank_; ++i) x[pivots_[i]] = c[i];
        return x;
    }
    Vec y(cols_, mpq_class(0));
    for (std::size_t i = 0; i < rank_; ++i) y[i] = mpq_class(mpz_class(c[i].get_num() / divisors_[i]));
    return right_->apply(y);
}

bool LinearSolver::reaches_unit_vector(std::size_t row) const
{
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = left_.at(i, row);
    return compatible(c);
}

std::optional<Vec> solve_over_ring(const Matrix& m, const Vec& b)
{
    if (b.size() != m.rows()) throw Error("solve: right-hand side length " + std::to_string(b.size()) +
                                          " does not match " + std::to_string(m.rows()) + " rows");
    return LinearSolver(m).solve(b);
}

std::size_t rank_mod_p(const Matrix& m, std::uint64_t p)
{
    return row_reduce(change_ring(m, RingSpec::prime_field(p))).rank;
}

} // namespace mixshuffle
