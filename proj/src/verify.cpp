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

#include "mixshuffle/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

namespace mixshuffle {

// ---------------------------------------------------------------- presented algebras

void PresentedAlgebra::add(std::string name, TensorPoly image, Relation relation)
{
    require_same(*algebra, *image.algebra());
    if (image.is_zero()) throw Error("generator " + name + " has zero image");
    const OrderedSemigroup& s = algebra->semigroup();
    const Word& lead = image.terms().front().word;
    const unsigned deg = word_degree(s, lead);
    for (const auto& t : image.terms())
        if (word_degree(s, t.word) != deg) throw Error("generator " + name + " is not homogeneous");
    if (product == ProductKind::RotaBaxter && lead.empty()) throw Error("Rota-Baxter generators need a head");
    if (relation.kind != RelationKind::None && relation.exponent < 2)
        throw Error("relation exponents must be at least 2");
    const unsigned weight = static_cast<unsigned>(product == ProductKind::RotaBaxter ? lead.length() - 1 : lead.length());
    generators.push_back({std::move(name), std::move(image), deg, weight, std::move(relation)});
}

TensorPoly PresentedAlgebra::multiply(const TensorPoly& a, const TensorPoly& b) const
{
    return product == ProductKind::Shuffle ? mixable_shuffle_product(a, b) : rb_product_encoded(a, b);
}

TensorPoly PresentedAlgebra::unit() const
{
    if (product == ProductKind::Shuffle) return TensorPoly::unit(algebra);
    return RBElement::one(algebra).encoded();
}

TensorPoly PresentedAlgebra::power(std::size_t g, unsigned e) const
{
    const TensorPoly& img = generators.at(g).image;
    if (e == 0) return unit();
    if (e == 1) return img;
    if (img.terms().size() == 1) {
        const Term& t = img.terms().front();
        mpq_class c = 1;
        for (unsigned i = 0; i < e; ++i) c *= t.coeff;
        if (product == ProductKind::Shuffle) return shuffle_power(algebra, t.word, e).scaled(c);
        const OrderedSemigroup& s = algebra->semigroup();
        const Element head = s.pow(t.word.letter_element(0), e);
        const TensorPoly tail = shuffle_power(algebra, t.word.slice(1, t.word.length()), e);
        Accumulator acc;
        for (const auto& tt : tail.terms()) {
            Word w(s.width());
            w.push_back(head.data());
            w.append(tt.word);
            acc[w] += tt.coeff * c;
        }
        return TensorPoly::from_accumulator(algebra, std::move(acc));
    }
    TensorPoly r = img;
    for (unsigned i = 1; i < e; ++i) r = multiply(r, img);
    return r;
}

namespace {

unsigned digit_sum(unsigned e, std::uint64_t p)
{
    unsigned d = 0;
    for (; e; e /= static_cast<unsigned>(p)) d += e % static_cast<unsigned>(p);
    return d;
}

// Over F_p with lambda != 0 the p-th power of a word collapses to a scalar multiple of its
// componentwise power, so the leading word of g^e has length weight(g) times the base-p digit sum of e.
std::uint64_t collapsing_prime(const PresentedAlgebra& P)
{
    const ShuffleAlgebra& a = *P.algebra;
    return a.ring().kind() == RingKind::PrimeField && sgn(a.lambda()) != 0 ? a.ring().p() : 0;
}

void enumerate_exponents(const PresentedAlgebra& P, std::size_t i, unsigned degree_left, unsigned weight_left,
                         std::uint64_t p, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out)
{
    if (i == P.generators.size()) {
        if (degree_left == 0) out.push_back(cur);
        return;
    }
    const Generator& g = P.generators[i];
    std::optional<unsigned> cap = g.relation.cap();
    if (g.degree == 0 && !cap && (g.weight == 0 || p))
        throw Error("generator " + g.name + " has degree 0 and no relation; monomials are unbounded");
    for (unsigned e = 0;; ++e) {
        if (cap && e > *cap) break;
        if (static_cast<unsigned long>(e) * g.degree > degree_left) break;
        const unsigned long w = static_cast<unsigned long>(p ? digit_sum(e, p) : e) * g.weight;
        if (w > weight_left) {
            if (!p) break;
            continue;
        }
        cur[i] = e;
        enumerate_exponents(P, i + 1, degree_left - e * g.degree, weight_left - static_cast<unsigned>(w), p, cur, out);
    }
    cur[i] = 0;
}

} // namespace

std::vector<Monomial> monomial_images(const PresentedAlgebra& P, unsigned degree, unsigned max_weight)
{
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> cur(P.generators.size(), 0);
    enumerate_exponents(P, 0, degree, max_weight, collapsing_prime(P), cur, exps);
    std::map<std::pair<std::size_t, unsigned>, TensorPoly> powers;
    auto pw = [&](std::size_t g, unsigned e) -> const TensorPoly& {
        auto key = std::make_pair(g, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, P.power(g, e)).first;
        return it->second;
    };
    std::vector<Monomial> out;
    out.reserve(exps.size());
    for (auto& ex : exps) {
        std::optional<TensorPoly> img;
        for (std::size_t g = 0; g < ex.size(); ++g) {
            if (ex[g] == 0) continue;
            img = img ? P.multiply(*img, pw(g, ex[g])) : pw(g, ex[g]);
        }
        out.push_back({std::move(ex), img ? std::move(*img) : P.unit()});
    }
    return out;
}

std::vector<Word> cell_basis(const PresentedAlgebra& P, unsigned degree, unsigned max_weight)
{
    const OrderedSemigroup& s = P.algebra->semigroup();
    if (P.product == ProductKind::Shuffle) return enumerate_words(s, degree, max_weight);
    return rb_basis(s, degree, max_weight);
}

namespace {

std::string describe_monomial(const PresentedAlgebra& P, const std::vector<unsigned>& ex)
{
    std::string out;
    for (std::size_t g = 0; g < ex.size(); ++g) {
        if (ex[g] == 0) continue;
        if (!out.empty()) out += "·";
        out += "[" + P.generators[g].name + "]";
        if (ex[g] > 1) out += "^" + std::to_string(ex[g]);
    }
    return out.empty() ? "1" : out;
}

} // namespace

CellRecord check_cell(const PresentedAlgebra& P, unsigned degree, unsigned max_weight, const CellOptions& opts)
{
    const OrderedSemigroup& s = P.algebra->semigroup();
    const RingSpec& ring = P.algebra->ring();
    CellRecord rec;
    rec.degree = degree;
    rec.length_bound = max_weight;

    std::vector<Word> basis = cell_basis(P, degree, max_weight);
    if (opts.basis_filter) basis.erase(std::remove_if(basis.begin(), basis.end(), [&](const Word& w) { return !opts.basis_filter(w); }),
                                       basis.end());
    std::unordered_map<Word, std::size_t, WordHash> row_of;
    for (std::size_t i = 0; i < basis.size(); ++i) row_of.emplace(basis[i], i);
    const std::vector<Monomial> monos = monomial_images(P, degree, max_weight);
    rec.dimension = basis.size();
    rec.monomials = monos.size();
    rec.counts_match = rec.dimension == rec.monomials;

    Matrix m(ring, basis.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j)
        for (const auto& t : monos[j].image.terms()) {
            auto it = row_of.find(t.word);
            if (it == row_of.end()) {
                rec.independent = rec.spans = rec.pass = false;
                rec.detail = "monomial " + describe_monomial(P, monos[j].exponents) + " has the term " +
                             format_word(s, t.word) + " outside the cell";
                return rec;
            }
            m.set(it->second, j, t.coeff);
        }

    if (monos.empty()) {
        rec.rank = 0;
        rec.independent = true;
    } else if (basis.empty()) {
        rec.rank = 0;
        rec.independent = false;
        rec.detail = "monomials in an empty cell";
    } else if (ring.kind() == RingKind::Integers) {
        const SmithForm f = smith_normal_form(m);
        rec.rank = f.rank();
        rec.independent = f.rank() == monos.size() && f.all_units();
        if (!rec.independent) {
            if (f.rank() < monos.size()) rec.detail = "rank " + std::to_string(f.rank()) + " < " + std::to_string(monos.size());
            else rec.detail = "elementary divisor " + f.first_torsion()->get_str() + " (not a direct summand)";
        }
    } else if (ring.kind() == RingKind::TruncatedPAdic) {
        const LocalSmithForm f = local_smith_form(m);
        rec.rank = f.unit_rank();
        rec.independent = rec.rank == monos.size();
        if (!rec.independent)
            rec.detail = "p-adic unit rank " + std::to_string(rec.rank) + " < " + std::to_string(monos.size());
    } else {
        const RowReduction r = row_reduce(m);
        rec.rank = r.rank;
        rec.independent = r.rank == monos.size();
        if (!rec.independent && !r.kernel_basis.empty()) {
            std::string combo;
            const Vec& k = r.kernel_basis.front();
            for (std::size_t j = 0; j < k.size(); ++j) {
                if (sgn(k[j]) == 0) continue;
                if (!combo.empty()) combo += " + ";
                combo += to_string(k[j]) + "·" + describe_monomial(P, monos[j].exponents);
            }
            rec.detail = "vanishing combination " + combo;
        }
    }

    if (opts.require_span) {
        if (rec.counts_match && rec.independent) {
            rec.spans = true;
        } else if (monos.empty()) {
            rec.spans = basis.empty();
            if (!rec.spans) rec.unreachable = basis.front();
        } else {
            const LinearSolver solver(m);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (!solver.reaches_unit_vector(i)) {
                    rec.spans = false;
                    rec.unreachable = basis[i];
                    break;
                }
        }
        if (rec.unreachable) {
            if (!rec.detail.empty()) rec.detail += "; ";
            rec.detail += "unreachable word " + format_word(s, *rec.unreachable);
        }
    }
    if (opts.require_count && !rec.counts_match) {
        if (!rec.detail.empty()) rec.detail += "; ";
        rec.detail += "dimension " + std::to_string(rec.dimension) + " vs " + std::to_string(rec.monomials) + " monomials";
    }
    rec.pass = (!opts.require_count || rec.counts_match) && (!opts.require_independent || rec.independent) &&
               (!opts.require_span || rec.spans);
    return rec;
}

CellRecord check_independence(const PresentedAlgebra& P, unsigned degree, unsigned max_weight)
{
    CellOptions o;
    o.require_count = false;
    o.require_span = false;
    return check_cell(P, degree, max_weight, o);
}

CellRecord check_spanning(const PresentedAlgebra& P, unsigned degree, unsigned max_weight)
{
    CellOptions o;
    o.require_count = false;
    o.require_independent = false;
    return check_cell(P, degree, max_weight, o);
}

nlohmann::json CellRecord::to_json(const OrderedSemigroup& s) const
{
    nlohmann::json j = {{"degree", degree},     {"length_bound", length_bound}, {"dimension", dimension},
                        {"monomials", monomials}, {"rank", rank},             {"counts_match", counts_match},
                        {"independent", independent}, {"spans", spans},       {"pass", pass}};
    if (!detail.empty()) j["detail"] = detail;
    if (unreachable) j["unreachable"] = word_to_json(s, *unreachable);
    return j;
}

// ---------------------------------------------------------------- reports

bool VerificationReport::pass() const
{
    for (const auto& c : cells)
        if (!c.pass) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void VerificationReport::add_check(std::string name, bool ok, std::string detail)
{
    if (!ok && !counterexample) counterexample = name + (detail.empty() ? "" : ": " + detail);
    checks.push_back({std::move(name), ok, std::move(detail)});
}

nlohmann::json VerificationReport::to_json() const
{
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& c : cells) cj.push_back(semigroup_ptr ? c.to_json(*semigroup_ptr) : nlohmann::json{{"degree", c.degree}});
    nlohmann::json kj = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json k = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) k["detail"] = c.detail;
        kj.push_back(std::move(k));
    }
    nlohmann::json j = {{"theorem", theorem}, {"ring", ring},   {"lambda", lambda}, {"semigroup", semigroup},
                        {"degree_bound", degree_bound}, {"cells", std::move(cj)}, {"checks", std::move(kj)},
                        {"pass", pass()}};
    if (length_bound) j["length_bound"] = *length_bound;
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
}

std::string VerificationReport::to_table() const
{
    std::ostringstream os;
    os << "theorem   " << theorem << "\n"
       << "ring      " << ring << "\n"
       << "lambda    " << lambda << "\n"
       << "semigroup " << semigroup << "\n"
       << "bounds    degree <= " << degree_bound;
    if (length_bound) os << ", length <= " << *length_bound;
    os << "\n\n";
    if (!cells.empty()) {
        os << "  deg  len    dim  monos   rank  verdict\n";
        for (const auto& c : cells) {
            char line[96];
            std::snprintf(line, sizeof line, "  %3u  %3u  %5zu  %5zu  %5zu  %s", c.degree, c.length_bound, c.dimension,
                          c.monomials, c.rank, c.pass ? "PASS" : "FAIL");
            os << line;
            if (!c.detail.empty()) os << "  " << c.detail;
            os << "\n";
        }
    }
    for (const auto& c : checks) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << "\noverall " << (pass() ? "PASS" : "FAIL") << "\n";
    if (counterexample) os << "counterexample: " << *counterexample << "\n";
    return os.str();
}

void run_cells(VerificationReport& report, const PresentedAlgebra& P,
               const std::vector<std::pair<unsigned, unsigned>>& cells, const CellOptions& cell_opts,
               const VerifyOptions& opts)
{
    std::vector<CellRecord> recs(cells.size());
    if (opts.parallel) {
        std::vector<std::future<CellRecord>> fut;
        for (const auto& [n, l] : cells)
            fut.push_back(std::async(std::launch::async, [&P, &cell_opts, n = n, l = l] { return check_cell(P, n, l, cell_opts); }));
        for (std::size_t i = 0; i < cells.size(); ++i) recs[i] = fut[i].get();
    } else {
        for (std::size_t i = 0; i < cells.size(); ++i) recs[i] = check_cell(P, cells[i].first, cells[i].second, cell_opts);
    }
    for (auto& r : recs) {
        if (!r.pass && !report.counterexample)
            report.counterexample = "degree " + std::to_string(r.degree) + ", length <= " + std::to_string(r.length_bound) +
                                    ": " + r.detail;
        report.cells.push_back(std::move(r));
    }
}

std::vector<std::size_t> polynomial_hilbert(const std::vector<std::size_t>& counts, unsigned max_degree)
{
    std::vector<std::size_t> dp(max_degree + 1, 0);
    dp[0] = 1;
    for (std::size_t d = 1; d < counts.size() && d <= max_degree; ++d)
        for (std::size_t c = 0; c < counts[d]; ++c)
            for (std::size_t n = d; n <= max_degree; ++n) dp[n] += dp[n - d];
    return dp;
}

// ---------------------------------------------------------------- helpers

namespace {

bool has_degree_zero(const OrderedSemigroup& s) { return s.has_identity() || s.degree_zero_letters(); }

VerificationReport make_report(std::string theorem, const AlgebraPtr& alg, unsigned degree_bound,
                               std::optional<unsigned> length_bound)
{
    VerificationReport r;
    r.theorem = std::move(theorem);
    r.ring = alg->ring().name();
    r.lambda = to_string(alg->lambda());
    r.semigroup = alg->semigroup().descriptor();
    r.semigroup_ptr = alg->semigroup_ptr();
    r.degree_bound = degree_bound;
    r.length_bound = length_bound;
    return r;
}

// Graded cells: (n, n) for positive degrees, (n, L) with identity letters, (0, l) for l <= L when finite.
std::vector<std::pair<unsigned, unsigned>> standard_cells(const OrderedSemigroup& s, unsigned degree_bound,
                                                          unsigned length_bound)
{
    std::vector<std::pair<unsigned, unsigned>> cells;
    if (s.degree_zero_letters()) {
        for (unsigned l = 0; l <= length_bound; ++l) cells.emplace_back(0u, l);
    } else if (has_degree_zero(s)) {
        for (unsigned n = 0; n <= degree_bound; ++n) cells.emplace_back(n, length_bound);
    } else {
        for (unsigned n = 0; n <= degree_bound; ++n) cells.emplace_back(n, n);
    }
    return cells;
}

mpq_class relation_scalar(const mpq_class& lambda, const RingSpec& ring, std::uint64_t p, std::size_t length)
{
    mpq_class c = 1;
    const std::size_t e = (p - 1) * (length == 0 ? 0 : length - 1);
    for (std::size_t i = 0; i < e; ++i) c *= lambda;
    return ring.canonical(c);
}

std::string word_name(const OrderedSemigroup& s, const Word& w) { return format_word(s, w); }

// g^e against the relation; skipped (and reported as such) when g^e leaves the bounds.
void check_relations(VerificationReport& report, const PresentedAlgebra& P, unsigned degree_bound,
                     unsigned weight_bound)
{
    std::size_t checked = 0, skipped = 0;
    for (std::size_t g = 0; g < P.generators.size(); ++g) {
        const Generator& gen = P.generators[g];
        const Relation& rel = gen.relation;
        if (rel.kind == RelationKind::None) continue;
        if (gen.degree * rel.exponent > degree_bound || gen.weight * rel.exponent > weight_bound) {
            ++skipped;
            continue;
        }
        const TensorPoly lhs = P.power(g, rel.exponent);
        TensorPoly rhs(P.algebra);
        switch (rel.kind) {
        case RelationKind::PowerZero: break;
        case RelationKind::PowerScalar: rhs = gen.image.scaled(rel.scalar); break;
        case RelationKind::PowerOne: rhs = P.unit(); break;
        case RelationKind::None: break;
        }
        ++checked;
        if (lhs != rhs) {
            report.add_check("relation for " + gen.name, false,
                             "power " + std::to_string(rel.exponent) + " is " + lhs.to_string());
            return;
        }
    }
    report.add_check("relations", true,
                     std::to_string(checked) + " checked, " + std::to_string(skipped) + " beyond the bounds");
}

std::string join_counts(const std::vector<std::size_t>& v, std::size_t from = 1)
{
    std::string out;
    for (std::size_t i = from; i < v.size(); ++i) out += (i > from ? "," : "") + std::to_string(v[i]);
    return out;
}

std::vector<std::size_t> counts_by_degree(const OrderedSemigroup& s, const WordSet& ws, unsigned max_degree)
{
    return ws.degree_counts(s, max_degree);
}

// U = V as sets of images, per cell.
bool same_images(const PresentedAlgebra& A, const PresentedAlgebra& B, unsigned degree, unsigned weight,
                 std::string& detail)
{
    auto keys = [&](const PresentedAlgebra& P) {
        std::vector<std::string> k;
        for (const auto& m : monomial_images(P, degree, weight)) k.push_back(m.image.to_json().dump());
        std::sort(k.begin(), k.end());
        return k;
    };
    const auto a = keys(A), b = keys(B);
    if (a == b) return true;
    detail = "degree " + std::to_string(degree) + ", length <= " + std::to_string(weight) + ": " +
             std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " images differ";
    return false;
}

} // namespace

// ---------------------------------------------------------------- Q

VerificationReport verify_radford_hoffman(const SemigroupPtr& s, const mpq_class& lambda, unsigned degree_bound,
                                          std::optional<unsigned> length_bound, const VerifyOptions& opts)
{
    const AlgebraPtr alg = ShuffleAlgebra::make(s, RingSpec::rationals(), lambda);
    const unsigned L = length_bound ? *length_bound : degree_bound;
    Bounds b{degree_bound, has_degree_zero(*s) ? std::optional<unsigned>(L) : std::nullopt};
    VerificationReport report = make_report(sgn(lambda) == 0 ? "radford" : "msq", alg, degree_bound,
                                            has_degree_zero(*s) ? std::optional<unsigned>(L) : std::nullopt);
    const WordSet lyn = enumerate_lyndon(*s, b);
    PresentedAlgebra P(alg, ProductKind::Shuffle);
    for (const auto& w : lyn.words) P.add(word_name(*s, w), TensorPoly::from_word(alg, w));
    run_cells(report, P, standard_cells(*s, degree_bound, L), {}, opts);
    if (!has_degree_zero(*s)) {
        const auto hil = polynomial_hilbert(counts_by_degree(*s, lyn, degree_bound), degree_bound);
        bool ok = true;
        std::vector<std::size_t> dims;
        for (const auto& c : report.cells) {
            dims.push_back(c.dimension);
            ok = ok && c.dimension == hil[c.degree];
        }
        report.add_check("Hilbert series of Q[Lyn] equals dim", ok, "dims " + join_counts(dims, 0) + ", series " + join_counts(hil, 0));
    }
    return report;
}

// ---------------------------------------------------------------- F_p

VerificationReport verify_fp_weight0(const SemigroupPtr& s, std::uint64_t p, unsigned degree_bound,
                                     std::optional<unsigned> length_bound, const VerifyOptions& opts)
{
    const AlgebraPtr alg = ShuffleAlgebra::make(s, RingSpec::prime_field(p), 0);
    const unsigned L = length_bound ? *length_bound : degree_bound;
    const bool zero = has_degree_zero(*s);
    VerificationReport report = make_report("psh", alg, degree_bound, zero ? std::optional<unsigned>(L) : std::nullopt);
    const Bounds b{degree_bound, zero ? std::optional<unsigned>(L) : std::nullopt};
    const WordSet tl = operator_T(*s, enumerate_lyndon(*s, b), p, b);
    PresentedAlgebra P(alg, ProductKind::Shuffle);
    for (const auto& w : tl.words) P.add(word_name(*s, w), TensorPoly::from_word(alg, w), Relation::power_zero(p));
    run_cells(report, P, standard_cells(*s, degree_bound, L), {}, opts);
    check_relations(report, P, s->degree_zero_letters() ? 0 : degree_bound, zero ? L : degree_bound);
    return report;
}

VerificationReport verify_fp_nonzero(const SemigroupPtr& s, std::uint64_t p, const mpq_class& lambda,
                                     unsigned degree_bound, std::optional<unsigned> length_bound,
                                     const VerifyOptions& opts)
{
    const RingSpec ring = RingSpec::prime_field(p);
    const AlgebraPtr alg = ShuffleAlgebra::make(s, ring, lambda);
    if (sgn(alg->lambda()) == 0) throw Error("this presentation needs a nonzero weight in F_p");
    const unsigned L = length_bound ? *length_bound : degree_bound;
    const bool zero = has_degree_zero(*s);
    const std::optional<unsigned> lb = zero ? std::optional<unsigned>(L) : std::nullopt;
    VerificationReport report = make_report("pmsh", alg, degree_bound, lb);
    const Bounds b{degree_bound, lb};
    const unsigned deg_bound_rel = s->degree_zero_letters() ? 0 : degree_bound;
    const unsigned weight_bound = zero ? L : degree_bound;

    const Classification cls = classify(s, p, s->degree_zero_letters() ? 0 : degree_bound);
    const GeneratorSets gs = generator_sets(s, p, b);
    PresentedAlgebra P(alg, ProductKind::Shuffle);
    std::string branch;
    if (cls.has(ClassTag::PG)) {
        branch = s->kind() == SemigroupKind::FreeAbelian ? "FG" : "PG";
        for (const auto& w : gs.tel.words) {
            const bool fixed = gs.tel1.contains(*s, w);
            P.add(word_name(*s, w), TensorPoly::from_word(alg, w),
                  fixed ? Relation::power_scalar(p, relation_scalar(alg->lambda(), ring, p, w.length())) : Relation::none());
        }
        const OrbitReport orb = tel2_orbit_check(s, p, b);
        report.add_check("TL2 is the disjoint union of p-power orbits of TEL2", orb.ok, orb.detail);
        // U = V: truncated TL-monomials coincide with TEL-monomials
        PresentedAlgebra U(alg, ProductKind::Shuffle);
        for (const auto& w : gs.tl.words) U.add(word_name(*s, w), TensorPoly::from_word(alg, w), Relation::power_zero(p));
        bool uv = true;
        std::string detail;
        for (const auto& [n, l] : standard_cells(*s, degree_bound, L)) {
            if (!same_images(U, P, n, l, detail)) {
                uv = false;
                break;
            }
        }
        report.add_check("U = V (truncated TL-monomials equal TEL-monomials)", uv, detail);
        if (s->kind() == SemigroupKind::Unitarized && s->left()->kind() == SemigroupKind::FreeAbelian) {
            std::vector<Word> expect;
            const Element one = s->identity();
            for (std::uint64_t k = 1; k <= L; k *= p) {
                Word w(s->width());
                for (std::uint64_t i = 0; i < k; ++i) w.push_back(one.data());
                expect.push_back(w);
            }
            const bool ok = gs.tel1 == make_word_set(*s, expect);
            report.add_check("TEL1 = {1^(x)p^i}", ok, std::to_string(gs.tel1.size()) + " words");
        }
    } else if (cls.has(ClassTag::JG)) {
        branch = "JG";
        for (const auto& w : gs.tl1.words)
            P.add(word_name(*s, w), TensorPoly::from_word(alg, w),
                  Relation::power_scalar(p, relation_scalar(alg->lambda(), ring, p, w.length())));
        for (const auto& w : gs.tl2.words)
            P.add(word_name(*s, w) + " - " + word_name(*s, componentwise_power(*s, w, p)),
                  eettl_representative(alg, w, p), Relation::power_zero(p));
    } else {
        throw Error("the semigroup is neither in PG nor in JG for p = " + std::to_string(p));
    }
    report.theorem = "pmsh (" + branch + ")";
    run_cells(report, P, standard_cells(*s, degree_bound, L), {}, opts);
    check_relations(report, P, deg_bound_rel, weight_bound);
    return report;
}

// ---------------------------------------------------------------- Z/p^N

namespace {

// Columns: u (sh) v for basis words u, v of degrees i <= n - i; rows: degree-n basis words.
Matrix decomposables_matrix(const AlgebraPtr& alg, unsigned n, std::vector<Word>& rows)
{
    const OrderedSemigroup& s = alg->semigroup();
    rows = enumerate_words(s, n, n);
    std::unordered_map<Word, std::size_t, WordHash> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
    std::vector<TensorPoly> cols;
    for (unsigned i = 1; 2 * i <= n; ++i) {
        const auto bi = enumerate_words(s, i, i);
        const auto bj = enumerate_words(s, n - i, n - i);
        for (std::size_t a = 0; a < bi.size(); ++a)
            for (std::size_t c = (2 * i == n ? a : 0); c < bj.size(); ++c) cols.push_back(shuffle_words(alg, bi[a], bj[c]));
    }
    Matrix m(alg->ring(), rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& t : cols[j].terms()) m.set(row_of.at(t.word), j, t.coeff);
    return m;
}

Matrix hconcat(const Matrix& a, const Matrix& b)
{
    Matrix out(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
    }
    return out;
}

std::size_t rank_over_q(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return row_reduce(change_ring(m, RingSpec::rationals())).rank;
}

bool spans_lattice(const Matrix& m)
{
    if (m.rows() == 0) return true;
    if (m.cols() == 0) return false;
    const SmithForm f = smith_normal_form(m);
    return f.rank() == m.rows() && f.all_units();
}

} // namespace

VerificationReport verify_zp(const SemigroupPtr& s, std::uint64_t p, unsigned precision, const mpq_class& lambda,
                             unsigned degree_bound, bool stability, const VerifyOptions& opts)
{
    if (s->kind() != SemigroupKind::FreeAbelian) throw Error("the Z/p^N presentation needs a free abelian semigroup");
    if (!is_p_adic_unit(lambda, p)) throw Error("the weight must be a p-adic unit");
    const RingSpec ring = RingSpec::truncated_padic(p, precision);
    const AlgebraPtr alg = ShuffleAlgebra::make(s, ring, lambda);
    VerificationReport report = make_report("isomor", alg, degree_bound, std::nullopt);
    const Bounds b{degree_bound, std::nullopt};
    const GeneratorSets gs = generator_sets(s, p, b);
    PresentedAlgebra P(alg, ProductKind::Shuffle);
    for (const auto& w : gs.tel.words) P.add(word_name(*s, w), TensorPoly::from_word(alg, w));
    const auto cells = standard_cells(*s, degree_bound, degree_bound);
    run_cells(report, P, cells, {}, opts);

    const auto tel = gs.tel.degree_counts(*s, degree_bound);
    const auto lyn = gs.lyn.degree_counts(*s, degree_bound);
    report.add_check("|TEL(n)| = |Lyn(n)|", tel == lyn, "TEL " + join_counts(tel) + ", Lyn " + join_counts(lyn));

    // indecomposables over Z_(p): Smith form of mu_n computed over Z with an integer weight
    const mpq_class lz = lambda.get_den() == 1 ? lambda : ring.canonical(lambda);
    const AlgebraPtr zalg = ShuffleAlgebra::make(s, RingSpec::integers(), lz);
    bool quot_ok = true;
    std::vector<std::size_t> quot;
    std::string qdetail;
    for (unsigned n = 1; n <= degree_bound; ++n) {
        std::vector<Word> rows;
        const Matrix m = decomposables_matrix(zalg, n, rows);
        std::size_t units = 0;
        if (m.cols() > 0)
            for (const auto& d : smith_normal_form(m).D) {
                if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
                    quot_ok = false;
                    qdetail = "p-torsion " + d.get_str() + " in degree " + std::to_string(n);
                } else {
                    ++units;
                }
            }
        quot.push_back(rows.size() - units);
        if (quot.back() != tel[n]) quot_ok = false;
    }
    quot.insert(quot.begin(), 0);
    report.add_check("rank of indecomposables = |TEL(n)|", quot_ok,
                     "ranks " + join_counts(quot) + (qdetail.empty() ? "" : "; " + qdetail));

    if (stability) {
        const VerificationReport again = verify_zp(s, p, precision + 2, lambda, degree_bound, false, opts);
        bool same = again.cells.size() == report.cells.size();
        for (std::size_t i = 0; same && i < report.cells.size(); ++i) same = again.cells[i].pass == report.cells[i].pass;
        report.add_check("verdicts stable at precision " + std::to_string(precision + 2), same);
    }
    return report;
}

// ---------------------------------------------------------------- Z

CokernelBasis compute_cokernel_basis(const SemigroupPtr& s, const mpq_class& lambda, unsigned degree)
{
    if (has_degree_zero(*s)) throw Error("cokernel lifting needs a semigroup without degree-0 elements");
    const AlgebraPtr alg = ShuffleAlgebra::make(s, RingSpec::integers(), lambda);
    CokernelBasis out;
    out.degree = degree;
    std::vector<Word> rows;
    const Matrix m = decomposables_matrix(alg, degree, rows);
    out.rows = rows.size();
    out.image_columns = m.cols();
    std::optional<SmithForm> f;
    if (m.cols() > 0) {
        f = smith_normal_form(m);
        out.divisors = f->D;
        for (const auto& d : f->D)
            if (d != 1) {
                out.free = false;
                if (!out.offending_divisor) out.offending_divisor = d;
            }
    }
    out.rank = rows.size() - out.divisors.size();

    // greedy completion by basis words, largest in pro-length order first
    std::vector<std::size_t> chosen;
    Matrix cur = m;
    std::size_t r = rank_over_q(cur);
    for (std::size_t k = rows.size(); k-- > 0 && r < rows.size();) {
        Matrix e(RingSpec::integers(), rows.size(), 1);
        e.set(k, 0, 1);
        Matrix next = hconcat(cur, e);
        const std::size_t r2 = rank_over_q(next);
        if (r2 > r) {
            chosen.push_back(k);
            cur = std::move(next);
            r = r2;
        }
    }
    if (spans_lattice(cur)) {
        for (std::size_t k : chosen) out.lifted.push_back(TensorPoly::from_word(alg, rows[k]));
    } else {
        // free part of the cokernel: last columns of U^{-1}
        out.lifted_words = false;
        const Matrix& U = f->U;
        for (std::size_t j = out.divisors.size(); j < rows.size(); ++j) {
            Vec e(rows.size(), 0);
            e[j] = 1;
            const auto col = solve_over_ring(U, e);
            if (!col) throw Error("Smith transform is not unimodular");
            Accumulator acc;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (sgn((*col)[i]) != 0) acc[rows[i]] += (*col)[i];
            out.lifted.push_back(TensorPoly::from_accumulator(alg, std::move(acc)));
        }
    }
    Matrix y(RingSpec::integers(), rows.size(), out.lifted.size());
    std::unordered_map<Word, std::size_t, WordHash> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
    for (std::size_t j = 0; j < out.lifted.size(); ++j)
        for (const auto& t : out.lifted[j].terms()) y.set(row_of.at(t.word), j, t.coeff);
    out.unimodular = out.free && spans_lattice(hconcat(m, y)) && out.lifted.size() == out.rank;
    return out;
}

VerificationReport verify_z_polynomial(const SemigroupPtr& s, const mpq_class& lambda, unsigned degree_bound,
                                       const VerifyOptions& opts)
{
    const AlgebraPtr alg = ShuffleAlgebra::make(s, RingSpec::integers(), lambda);
    VerificationReport report = make_report("intfr", alg, degree_bound, std::nullopt);
    const auto lyn = enumerate_lyndon(*s, Bounds{degree_bound, std::nullopt}).degree_counts(*s, degree_bound);
    PresentedAlgebra P(alg, ProductKind::Shuffle);
    std::vector<std::size_t> ranks{0};
    bool free = true, unimodular = true, match = true;
    std::string detail;
    for (unsigned n = 1; n <= degree_bound; ++n) {
        const CokernelBasis cb = compute_cokernel_basis(s, lambda, n);
        ranks.push_back(cb.rank);
        if (!cb.free) {
            free = false;
            detail = "degree " + std::to_string(n) + " divisor " + cb.offending_divisor->get_str();
        }
        unimodular = unimodular && cb.unimodular;
        match = match && cb.rank == lyn[n];
        for (std::size_t k = 0; k < cb.lifted.size(); ++k)
            P.add("y" + std::to_string(n) + "_" + std::to_string(k + 1), cb.lifted[k]);
    }
    report.add_check("cokernels free", free, detail);
    report.add_check("cokernel ranks = |Lyn(n)|", match, "ranks " + join_counts(ranks) + ", Lyn " + join_counts(lyn));
    report.add_check("lifts complete the decomposables to a Z-basis", unimodular);
    run_cells(report, P, standard_cells(*s, degree_bound, degree_bound), {}, opts);
    return report;
}

namespace {

Word embed_padded(const Word& w, unsigned new_width)
{
    Word out(new_width);
    Element e(new_width, 0);
    for (std::size_t i = 0; i < w.length(); ++i) {
        std::fill(e.begin(), e.end(), 0);
        std::copy(w.letter(i), w.letter(i) + w.width(), e.begin());
        out.push_back(e.data());
    }
    return out;
}

// F(X) letters into M(X) = {1} u F(X): flag slot 1 followed by the exponents
Word embed_unitarized(const Word& w)
{
    Word out(w.width() + 1);
    Element e(w.width() + 1, 0);
    for (std::size_t i = 0; i < w.length(); ++i) {
        e[0] = 1;
        std::copy(w.letter(i), w.letter(i) + w.width(), e.begin() + 1);
        out.push_back(e.data());
    }
    return out;
}

std::vector<std::string> indexed_names(unsigned k)
{
    std::vector<std::string> names;
    for (unsigned i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

} // namespace

std::vector<CheckRecord> nested_alphabet_checks(const mpq_class& lambda, unsigned alphabet_size, unsigned degree_bound)
{
    std::vector<CheckRecord> out;
    for (unsigned k = 1; k < alphabet_size; ++k) {
        const SemigroupPtr small = OrderedSemigroup::free_abelian(indexed_names(k));
        const SemigroupPtr big = OrderedSemigroup::free_abelian(indexed_names(k + 1));
        const AlgebraPtr balg = ShuffleAlgebra::make(big, RingSpec::integers(), lambda);
        for (unsigned n = 1; n <= degree_bound; ++n) {
            CheckRecord rec;
            rec.name = "G(" + std::to_string(n) + ") of X" + std::to_string(k) + " is a direct summand in X" +
                       std::to_string(k + 1);
            const CokernelBasis cs = compute_cokernel_basis(small, lambda, n);
            std::vector<Word> rows;
            const Matrix m = decomposables_matrix(balg, n, rows);
            std::unordered_map<Word, std::size_t, WordHash> row_of;
            for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
            // cokernel coordinates of the big alphabet: trailing rows of U
            std::size_t r = 0;
            std::optional<Matrix> U;
            if (m.cols() > 0) {
                SmithForm f = smith_normal_form(m);
                if (!f.all_units()) {
                    rec.pass = false;
                    rec.detail = "cokernel of X" + std::to_string(k + 1) + " is not free";
                    out.push_back(rec);
                    continue;
                }
                r = f.rank();
                U = std::move(f.U);
            }
            const std::size_t free_rank = rows.size() - r;
            Matrix induced(RingSpec::integers(), free_rank, cs.lifted.size());
            for (std::size_t j = 0; j < cs.lifted.size(); ++j) {
                Vec v(rows.size(), 0);
                for (const auto& t : cs.lifted[j].terms()) v[row_of.at(embed_padded(t.word, big->width()))] = t.coeff;
                for (std::size_t i = 0; i < free_rank; ++i) {
                    mpq_class c = 0;
                    if (U)
                        for (std::size_t q = 0; q < rows.size(); ++q) c += U->at(r + i, q) * v[q];
                    else
                        c = v[i];
                    induced.set(i, j, c);
                }
            }
            bool ok = cs.lifted.empty();
            if (!ok) {
                const SmithForm g = smith_normal_form(induced);
                ok = g.rank() == cs.lifted.size() && g.all_units();
            }
            rec.pass = ok;
            rec.detail = "ranks " + std::to_string(cs.lifted.size()) + " -> " + std::to_string(free_rank);
            out.push_back(rec);
        }
    }
    return out;
}

VerificationReport verify_lyndon_over_z(const SemigroupPtr& s, const mpq_class& lambda, unsigned degree_bound)
{
    const AlgebraPtr alg = ShuffleAlgebra::make(s, RingSpec::integers(), lambda);
    VerificationReport report = make_report("lyndon-over-Z", alg, degree_bound, std::nullopt);
    PresentedAlgebra P(alg, ProductKind::Shuffle);
    for (const auto& w : enumerate_lyndon(*s, Bounds{degree_bound, std::nullopt}).words)
        P.add(word_name(*s, w), TensorPoly::from_word(alg, w));
    CellOptions o;
    o.require_count = false;
    o.require_independent = false;
    run_cells(report, P, standard_cells(*s, degree_bound, degree_bound), o, {});
    return report;
}

// ---------------------------------------------------------------- Rota-Baxter

namespace {

TensorPoly head_only(const AlgebraPtr& alg, const Element& head)
{
    return RBElement::pure(alg, head, Word(alg->semigroup().width())).encoded();
}

TensorPoly one_tensor(const AlgebraPtr& alg, const TensorPoly& tail)
{
    const OrderedSemigroup& s = alg->semigroup();
    const Element one = s.identity();
    Accumulator acc;
    for (const auto& t : tail.terms()) {
        Word w(s.width());
        w.push_back(one.data());
        w.append(t.word);
        acc[w] += t.coeff;
    }
    return TensorPoly::from_accumulator(alg, std::move(acc));
}

const char* rb_name(RBTheorem t)
{
    switch (t) {
    case RBTheorem::Rbl: return "rbl";
    case RBTheorem::Rbafp1: return "rbafp1";
    case RBTheorem::Rbafp2: return "rbafp2";
    case RBTheorem::Rbafp3: return "rbafp3";
    case RBTheorem::Rbafp4: return "rbafp4";
    case RBTheorem::Rbazp: return "rbazp";
    case RBTheorem::Rbaz: return "rbaz";
    }
    return "rb";
}

} // namespace

VerificationReport verify_rb_structure(RBTheorem theorem, const RBParams& params, const VerifyOptions& opts)
{
    const unsigned D = params.degree_bound, L = params.length_bound;
    const std::uint64_t p = params.p;
    const unsigned k = static_cast<unsigned>(params.alphabet.size());
    const SemigroupPtr free = OrderedSemigroup::free_abelian(params.alphabet);
    const SemigroupPtr monoid = OrderedSemigroup::unitarize(free);

    auto add_heads = [&](PresentedAlgebra& P, const AlgebraPtr& alg) {
        for (unsigned i = 0; i < k; ++i) P.add(params.alphabet[i], head_only(alg, monoid->generator(i)));
    };
    auto tail_gen = [&](PresentedAlgebra& P, const AlgebraPtr& alg, const Word& w, Relation rel) {
        P.add("1⊗" + word_name(alg->semigroup(), w), one_tensor(alg, TensorPoly::from_word(alg, w)), std::move(rel));
    };
    auto rb_cells = [&](const SemigroupPtr& s) {
        std::vector<std::pair<unsigned, unsigned>> cells;
        if (s->degree_zero_letters())
            for (unsigned l = 0; l <= L; ++l) cells.emplace_back(0u, l);
        else
            for (unsigned n = 0; n <= D; ++n) cells.emplace_back(n, L);
        return cells;
    };

    switch (theorem) {
    case RBTheorem::Rbl: {
        const AlgebraPtr alg = ShuffleAlgebra::make(monoid, RingSpec::rationals(), params.lambda);
        VerificationReport report = make_report(rb_name(theorem), alg, D, L);
        PresentedAlgebra P(alg, ProductKind::RotaBaxter);
        for (const auto& g : rbl_generating_set(alg, Bounds{D, L}))
            P.add(g.to_string(), g.encoded());
        run_cells(report, P, rb_cells(monoid), {}, opts);
        return report;
    }
    case RBTheorem::Rbafp1: {
        const AlgebraPtr alg = ShuffleAlgebra::make(monoid, RingSpec::prime_field(p), 0);
        VerificationReport report = make_report(rb_name(theorem), alg, D, L);
        PresentedAlgebra P(alg, ProductKind::RotaBaxter);
        add_heads(P, alg);
        const Bounds b{D, L};
        for (const auto& w : operator_T(*monoid, enumerate_lyndon(*monoid, b), p, b).words)
            tail_gen(P, alg, w, Relation::power_zero(p));
        run_cells(report, P, rb_cells(monoid), {}, opts);
        check_relations(report, P, D, L);
        return report;
    }
    case RBTheorem::Rbafp2: {
        const RingSpec ring = RingSpec::prime_field(p);
        const AlgebraPtr alg = ShuffleAlgebra::make(monoid, ring, params.lambda);
        if (sgn(alg->lambda()) == 0) throw Error("this case needs a nonzero weight in F_p");
        VerificationReport report = make_report(rb_name(theorem), alg, D, L);
        PresentedAlgebra P(alg, ProductKind::RotaBaxter);
        add_heads(P, alg);
        const GeneratorSets gs = generator_sets(monoid, p, Bounds{D, L});
        std::vector<Word> W;
        const Element one = monoid->identity();
        for (std::uint64_t len = 1; len <= L; len *= p) {
            Word w(monoid->width());
            for (std::uint64_t i = 0; i < len; ++i) w.push_back(one.data());
            W.push_back(w);
        }
        report.add_check("TEL1 = {1^(x)p^i}", gs.tel1 == make_word_set(*monoid, W),
                         std::to_string(gs.tel1.size()) + " words");
        for (const auto& w : gs.tel2.words) tail_gen(P, alg, w, Relation::none());
        for (const auto& w : W)
            tail_gen(P, alg, w, Relation::power_scalar(p, relation_scalar(alg->lambda(), ring, p, w.length())));
        run_cells(report, P, rb_cells(monoid), {}, opts);
        check_relations(report, P, D, L);
        return report;
    }
    case RBTheorem::Rbafp3: {
        const RingSpec ring = RingSpec::prime_field(p);
        const SemigroupPtr G = OrderedSemigroup::unitarized_cyclic(p);
        const SemigroupPtr S = OrderedSemigroup::power(G, k);
        const AlgebraPtr alg = ShuffleAlgebra::make(S, ring, params.lambda);
        if (sgn(alg->lambda()) == 0) throw Error("this case needs a nonzero weight in F_p");
        VerificationReport report = make_report(rb_name(theorem), alg, 0, L);
        report.add_check("S is in PG", classify(S, p, 0).has(ClassTag::PG));
        PresentedAlgebra P(alg, ProductKind::RotaBaxter);
        const auto gel = G->elements_up_to(0); // e < xi < ...
        for (unsigned i = 0; i < k; ++i) {
            Element h;
            for (unsigned c = 0; c < k; ++c) {
                const Element& part = c == i ? gel.at(1) : gel.at(0);
                h.insert(h.end(), part.begin(), part.end());
            }
            P.add(params.alphabet[i], head_only(alg, h), Relation::power_scalar(p, 1));
        }
        const GeneratorSets gs = generator_sets(S, p, Bounds{0, L});
        report.add_check("TEL = TEL1", gs.tel == gs.tel1, std::to_string(gs.tel.size()) + " words");
        for (const auto& w : gs.tel.words)
            tail_gen(P, alg, w, Relation::power_scalar(p, relation_scalar(alg->lambda(), ring, p, w.length())));
        run_cells(report, P, rb_cells(S), {}, opts);
        check_relations(report, P, 0, L);
        return report;
    }
    case RBTheorem::Rbafp4: {
        const RingSpec ring = RingSpec::prime_field(p);
        const SemigroupPtr S = OrderedSemigroup::elementary_p_group(p, k);
        const AlgebraPtr alg = ShuffleAlgebra::make(S, ring, params.lambda);
        if (sgn(alg->lambda()) == 0) throw Error("this case needs a nonzero weight in F_p");
        VerificationReport report = make_report(rb_name(theorem), alg, 0, L);
        report.add_check("S is in JG", classify(S, p, 0).has(ClassTag::JG));
        PresentedAlgebra P(alg, ProductKind::RotaBaxter);
        for (unsigned i = 0; i < k; ++i) {
            Element h(k, 0);
            h[i] = 1;
            P.add(params.alphabet[i], head_only(alg, h), Relation::power_one(p));
        }
        const GeneratorSets gs = generator_sets(S, p, Bounds{0, L});
        for (const auto& w : gs.tl1.words)
            tail_gen(P, alg, w, Relation::power_scalar(p, relation_scalar(alg->lambda(), ring, p, w.length())));
        for (const auto& w : gs.tl2.words)
            P.add("1⊗(" + word_name(*S, w) + " - " + word_name(*S, componentwise_power(*S, w, p)) + ")",
                  one_tensor(alg, eettl_representative(alg, w, p)), Relation::power_zero(p));
        run_cells(report, P, rb_cells(S), {}, opts);
        check_relations(report, P, 0, L);
        return report;
    }
    case RBTheorem::Rbazp: {
        if (!is_p_adic_unit(params.lambda, p)) throw Error("the weight must be a p-adic unit");
        const AlgebraPtr alg = ShuffleAlgebra::make(monoid, RingSpec::truncated_padic(p, params.precision), params.lambda);
        VerificationReport report = make_report(rb_name(theorem), alg, D, L);
        PresentedAlgebra P(alg, ProductKind::RotaBaxter);
        add_heads(P, alg);
        const GeneratorSets gs = generator_sets(free, p, Bounds{D, std::nullopt});
        for (const auto& w : gs.tel.words) tail_gen(P, alg, embed_unitarized(w), Relation::none());
        CellOptions o;
        o.require_count = false;
        o.require_span = false;
        run_cells(report, P, rb_cells(monoid), o, opts);
        return report;
    }
    case RBTheorem::Rbaz: {
        const AlgebraPtr alg = ShuffleAlgebra::make(monoid, RingSpec::integers(), params.lambda);
        VerificationReport report = make_report(rb_name(theorem), alg, D, L);
        PresentedAlgebra P(alg, ProductKind::RotaBaxter);
        add_heads(P, alg);
        const auto lyn = enumerate_lyndon(*free, Bounds{D, std::nullopt}).degree_counts(*free, D);
        bool bij = true;
        for (unsigned n = 1; n <= D; ++n) {
            const CokernelBasis cb = compute_cokernel_basis(free, params.lambda, n);
            bij = bij && cb.free && cb.unimodular && cb.lifted.size() == lyn[n];
            for (const auto& y : cb.lifted) {
                Accumulator acc;
                for (const auto& t : y.terms()) acc[embed_unitarized(t.word)] += t.coeff;
                const TensorPoly ym = TensorPoly::from_accumulator(alg, std::move(acc));
                P.add("1⊗y", one_tensor(alg, ym));
            }
        }
        report.add_check("|Y(n)| = |Lyn(F(X))(n)|", bij);
        // Omega-monomials never touch N, so the non-N words carry the polynomial part.
        const OrderedSemigroup& m = *monoid;
        CellOptions o;
        o.basis_filter = [&m](const Word& w) { return !has_interior_identity(m, w); };
        std::vector<std::pair<unsigned, unsigned>> cells;
        for (unsigned n = 0; n <= D; ++n) cells.emplace_back(n, std::max(n, L));
        run_cells(report, P, cells, o, opts);
        std::size_t total = 0, in_n = 0, outside = 0;
        for (unsigned n = 0; n <= D; ++n)
            for (const auto& w : rb_basis(m, n, L)) {
                ++total;
                if (has_interior_identity(m, w)) ++in_n;
                else ++outside;
            }
        const std::size_t listed = rbaz_interior_identity_span(m, D, L).size();
        report.add_check("basis splits into Z[Omega] words and N", listed == in_n && in_n + outside == total,
                         std::to_string(outside) + " + " + std::to_string(in_n) + " = " + std::to_string(total));
        return report;
    }
    }
    throw Error("unknown Rota-Baxter theorem");
}

// ---------------------------------------------------------------- randomized laws

namespace {

struct RandomWords {
    std::mt19937_64& rng;
    const OrderedSemigroup& s;

    Word word(unsigned degree)
    {
        Word w(s.width());
        unsigned left = degree;
        while (left > 0) {
            const unsigned d = std::uniform_int_distribution<unsigned>(1, left)(rng);
            const auto letters = s.elements_of_degree(d);
            const auto& l = letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
            w.push_back(l.data());
            left -= d;
        }
        return w;
    }

    TensorPoly poly(const AlgebraPtr& alg, unsigned max_degree)
    {
        Accumulator acc;
        const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int t = 0; t < terms; ++t) {
            const unsigned d = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
            acc[word(d)] += std::uniform_int_distribution<int>(-3, 3)(rng);
        }
        return TensorPoly::from_accumulator(alg, std::move(acc));
    }
};

} // namespace

VerificationReport verify_properties(std::uint64_t seed, unsigned trials)
{
    std::mt19937_64 rng(seed);
    const SemigroupPtr s = OrderedSemigroup::free_abelian({"x", "y"});
    const SemigroupPtr m = OrderedSemigroup::unitarize(OrderedSemigroup::free_abelian({"x"}));
    const std::vector<RingSpec> rings{RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(2),
                                      RingSpec::prime_field(3), RingSpec::truncated_padic(3, 6)};
    const std::vector<long> lambdas{0, 1, -1, 2};
    VerificationReport report;
    report.theorem = "props";
    report.ring = "Q, Z, F_2, F_3, Z/3^6";
    report.lambda = "0, 1, -1, 2";
    report.semigroup = s->descriptor();
    report.semigroup_ptr = s;
    report.degree_bound = 5;
    for (const auto& ring : rings)
        for (long l : lambdas) {
            const AlgebraPtr alg = ShuffleAlgebra::make(s, ring, l);
            RandomWords gen{rng, *s};
            const std::string tag = ring.name() + ", lambda=" + std::to_string(l);
            std::string bad;
            for (unsigned t = 0; t < trials && bad.empty(); ++t) {
                const TensorPoly a = gen.poly(alg, 3), b = gen.poly(alg, 2);
                if (mixable_shuffle_product(a, b) != mixable_shuffle_product(b, a)) bad = a.to_string() + " , " + b.to_string();
            }
            report.add_check("commutativity " + tag, bad.empty(), bad);
            bad.clear();
            for (unsigned t = 0; t < trials && bad.empty(); ++t) {
                const TensorPoly a = gen.poly(alg, 2), b = gen.poly(alg, 2), c = gen.poly(alg, 1);
                if (mixable_shuffle_product(mixable_shuffle_product(a, b), c) !=
                    mixable_shuffle_product(a, mixable_shuffle_product(b, c)))
                    bad = a.to_string() + " , " + b.to_string() + " , " + c.to_string();
            }
            report.add_check("associativity " + tag, bad.empty(), bad);
            bad.clear();
            const AlgebraPtr rb = ShuffleAlgebra::make(m, ring, l);
            for (unsigned t = 0; t < trials && bad.empty(); ++t) {
                auto element = [&] {
                    Accumulator acc;
                    const int terms = std::uniform_int_distribution<int>(1, 2)(rng);
                    for (int q = 0; q < terms; ++q) {
                        Word w(m->width());
                        const int len = std::uniform_int_distribution<int>(1, 3)(rng);
                        unsigned left = std::uniform_int_distribution<unsigned>(0, 3)(rng);
                        for (int i = 0; i < len; ++i) {
                            const unsigned d = i + 1 == len ? left : std::uniform_int_distribution<unsigned>(0, left)(rng);
                            const auto letters = m->elements_of_degree(d);
                            w.push_back(letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)].data());
                            left -= d;
                        }
                        acc[w] += std::uniform_int_distribution<int>(-2, 2)(rng);
                    }
                    TensorPoly p = TensorPoly::from_accumulator(rb, std::move(acc));
                    return p.is_zero() ? RBElement::one(rb) : RBElement::from_encoded(p);
                };
                const RBElement a = element(), b = element();
                const RBIdentityCheck c = check_rb_identity(a, b);
                if (!c.holds) bad = a.to_string() + " , " + b.to_string() + ": " + c.detail;
            }
            report.add_check("Rota-Baxter identity " + tag, bad.empty(), bad);
        }
    return report;
}

} // namespace mixshuffle
