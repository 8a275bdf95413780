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

#include "mixshuffle/rings.hpp"

#include <cctype>
#include <charconv>

namespace mixshuffle {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingSpec::RingSpec(RingKind kind, std::uint64_t p, unsigned precision)
    : kind_(kind), p_(p), precision_(precision)
{
    if (kind == RingKind::PrimeField || kind == RingKind::TruncatedPAdic) {
        if (!is_prime(p)) throw Error("ring characteristic " + std::to_string(p) + " is not prime");
        if (precision < 1) throw Error("p-adic precision must be at least 1");
        mpz_ui_pow_ui(modulus_.get_mpz_t(), p, precision);
    }
}

RingSpec RingSpec::rationals() { return {RingKind::Rationals, 0, 0}; }
RingSpec RingSpec::integers() { return {RingKind::Integers, 0, 0}; }
RingSpec RingSpec::prime_field(std::uint64_t p) { return {RingKind::PrimeField, p, 1}; }
RingSpec RingSpec::truncated_padic(std::uint64_t p, unsigned precision)
{
    return {RingKind::TruncatedPAdic, p, precision};
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

} // namespace

RingSpec RingSpec::parse(std::string_view text)
{
    if (text == "Q") return rationals();
    if (text == "Z") return integers();
    if (text.size() > 1 && text[0] == 'F') {
        auto rest = text.substr(1);
        if (!rest.empty() && rest[0] == '_') rest.remove_prefix(1);
        return prime_field(parse_u64(rest, "prime"));
    }
    if (text.size() > 2 && text[0] == 'Z' && (text[1] == '/' || text[1] == '_')) {
        auto rest = text.substr(2);
        auto caret = rest.find('^');
        if (caret == std::string_view::npos)
            return truncated_padic(parse_u64(rest, "prime"));
        return truncated_padic(parse_u64(rest.substr(0, caret), "prime"),
                               static_cast<unsigned>(parse_u64(rest.substr(caret + 1), "precision")));
    }
    throw ParseError("unknown ring '" + std::string(text) + "'");
}

std::string RingSpec::name() const
{
    switch (kind_) {
    case RingKind::Rationals: return "Q";
    case RingKind::Integers: return "Z";
    case RingKind::PrimeField: return "F_" + std::to_string(p_);
    case RingKind::TruncatedPAdic: return "Z/" + std::to_string(p_) + "^" + std::to_string(precision_);
    }
    return "?";
}

void RingSpec::reduce(mpq_class& v) const
{
    switch (kind_) {
    case RingKind::Rationals: return;
    case RingKind::Integers:
        if (v.get_den() != 1) throw Error("non-integral value " + to_string(v) + " in Z");
        return;
    case RingKind::PrimeField:
    case RingKind::TruncatedPAdic:
        if (v.get_den() != 1) {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), v.get_den_mpz_t(), modulus_.get_mpz_t()) == 0)
                throw NotAUnit("denominator of " + to_string(v) + " is not invertible in " + name());
            mpz_class num = v.get_num() * inv;
            mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
            v = mpq_class(num);
            return;
        }
        if (sgn(v.get_num()) < 0 || v.get_num() >= modulus_)
            mpz_fdiv_r(v.get_num_mpz_t(), v.get_num_mpz_t(), modulus_.get_mpz_t());
        return;
    }
}

bool RingSpec::is_unit(const mpq_class& v) const
{
    switch (kind_) {
    case RingKind::Rationals: return sgn(v) != 0;
    case RingKind::Integers: return v == 1 || v == -1;
    case RingKind::PrimeField:
    case RingKind::TruncatedPAdic: {
        mpz_class r = v.get_num() % mpz_class(static_cast<unsigned long>(p_));
        return sgn(r) != 0;
    }
    }
    return false;
}

mpq_class RingSpec::inverse(const mpq_class& v) const
{
    if (!is_unit(v)) throw NotAUnit(to_string(v) + " is not a unit in " + name());
    switch (kind_) {
    case RingKind::Rationals: return 1 / v;
    case RingKind::Integers: return v;
    default: {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), v.get_num_mpz_t(), modulus_.get_mpz_t());
        return mpq_class(inv);
    }
    }
}

RingElem::RingElem(RingSpec ring, mpq_class value) : ring_(std::move(ring)), value_(std::move(value))
{
    value_.canonicalize();
    ring_.reduce(value_);
}

RingElem RingElem::parse(const RingSpec& ring, std::string_view text)
{
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("bad scalar literal '" + std::string(text) + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return {ring, v};
}

namespace {

void require_same(const RingElem& a, const RingElem& b)
{
    if (!(a.ring() == b.ring()))
        throw ContextMismatch("incompatible coefficients: " + a.ring().name() + " vs " + b.ring().name());
}

} // namespace

RingElem operator+(const RingElem& a, const RingElem& b)
{
    require_same(a, b);
    return {a.ring_, a.value_ + b.value_};
}

RingElem operator-(const RingElem& a, const RingElem& b)
{
    require_same(a, b);
    return {a.ring_, a.value_ - b.value_};
}

RingElem operator*(const RingElem& a, const RingElem& b)
{
    require_same(a, b);
    return {a.ring_, a.value_ * b.value_};
}

RingElem operator-(const RingElem& a) { return {a.ring_, -a.value_}; }

RingElem RingElem::inverse() const { return {ring_, ring_.inverse(value_)}; }

RingElem RingElem::pow(unsigned e) const
{
    RingElem r = one(ring_);
    RingElem b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string RingElem::to_string() const { return mixshuffle::to_string(value_); }

RingElem ring_arith(const RingElem& a, const RingElem& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    }
    throw Error("unknown arithmetic op");
}

RingElem ring_inverse(const RingElem& a) { return a.inverse(); }

std::string to_string(const mpq_class& v) { return v.get_str(10); }
std::string to_string(const mpz_class& v) { return v.get_str(10); }

unsigned p_valuation(const mpz_class& n, std::uint64_t p)
{
    if (sgn(n) == 0) throw Error("valuation of zero is infinite");
    mpz_class m = n;
    unsigned v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

bool is_p_adic_unit(const mpz_class& n, std::uint64_t p)
{
    return sgn(n) != 0 && !mpz_divisible_ui_p(n.get_mpz_t(), p);
}

bool is_p_adic_unit(const mpq_class& q, std::uint64_t p)
{
    return is_p_adic_unit(q.get_num(), p) && is_p_adic_unit(q.get_den(), p);
}

mpz_class factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

DigitMultinomial digit_multinomial(unsigned n, std::uint64_t p)
{
    if (!is_prime(p)) throw Error("digit_multinomial needs a prime");
    mpz_class denom = 1;
    std::uint64_t pj = 1;
    for (unsigned rest = n; rest > 0; rest = static_cast<unsigned>(rest / p), pj *= p) {
        unsigned digit = static_cast<unsigned>(rest % p);
        mpz_class f = factorial(static_cast<unsigned>(pj));
        for (unsigned i = 0; i < digit; ++i) denom *= f;
    }
    DigitMultinomial out;
    out.value = factorial(n) / denom;
    out.valuation = p_valuation(out.value, p);
    out.unit = out.valuation == 0;
    return out;
}

} // namespace mixshuffle
