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
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mixshuffle {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different coefficient rings (or semigroups, or algebras).
class ContextMismatch : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

enum class RingKind { Rationals, Integers, PrimeField, TruncatedPAdic };

bool is_prime(std::uint64_t n);

/// Coefficient ring selector: Q, Z, F_p or Z/p^N (the finite-precision stand-in for Z_p).
///
/// Scalars are carried as mpq_class in canonical form: reduced fractions for Q,
/// integers (denominator 1) for Z, and residues in [0, modulus) for the modular kinds.
class RingSpec {
public:
    static constexpr unsigned kDefaultPrecision = 8;

    static RingSpec rationals();
    static RingSpec integers();
    static RingSpec prime_field(std::uint64_t p);
    static RingSpec truncated_padic(std::uint64_t p, unsigned precision = kDefaultPrecision);

    // Accepts "Q", "Z", "F_3" / "F3", "Z/3^6" / "Z_3^6".
    static RingSpec parse(std::string_view text);

    RingKind kind() const noexcept { return kind_; }
    std::uint64_t p() const noexcept { return p_; }
    unsigned precision() const noexcept { return precision_; }
    bool is_field() const noexcept
    {
        return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField;
    }
    bool is_modular() const noexcept
    {
        return kind_ == RingKind::PrimeField || kind_ == RingKind::TruncatedPAdic;
    }
    // p for F_p, p^N for Z/p^N, 0 otherwise.
    const mpz_class& modulus() const noexcept { return modulus_; }

    std::string name() const;

    // Brings an arbitrary rational into canonical form for this ring. Throws if a
    // non-integral value is pushed into Z, or a denominator divisible by p into a modular ring.
    void reduce(mpq_class& v) const;
    mpq_class canonical(const mpq_class& v) const
    {
        mpq_class r = v;
        reduce(r);
        return r;
    }
    bool is_unit(const mpq_class& v) const;
    mpq_class inverse(const mpq_class& v) const;

    friend bool operator==(const RingSpec& a, const RingSpec& b)
    {
        return a.kind_ == b.kind_ && a.p_ == b.p_ && a.precision_ == b.precision_;
    }

private:
    RingSpec(RingKind kind, std::uint64_t p, unsigned precision);

    RingKind kind_;
    std::uint64_t p_ = 0;
    unsigned precision_ = 0;
    mpz_class modulus_ = 0;
};

class RingElem {
public:
    RingElem(RingSpec ring, mpq_class value);
    RingElem(RingSpec ring, long value) : RingElem(std::move(ring), mpq_class(value)) {}

    // "3", "-1", "5/3"; reduced into the ring.
    static RingElem parse(const RingSpec& ring, std::string_view text);
    static RingElem zero(const RingSpec& ring) { return {ring, 0L}; }
    static RingElem one(const RingSpec& ring) { return {ring, 1L}; }

    const RingSpec& ring() const noexcept { return ring_; }
    const mpq_class& value() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_unit() const { return ring_.is_unit(value_); }
    RingElem inverse() const;
    RingElem pow(unsigned e) const;

    std::string to_string() const;

    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a);
    friend bool operator==(const RingElem& a, const RingElem& b)
    {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

private:
    RingSpec ring_;
    mpq_class value_;
};

enum class ArithOp { Add, Sub, Mul };
RingElem ring_arith(const RingElem& a, const RingElem& b, ArithOp op);
RingElem ring_inverse(const RingElem& a);

std::string to_string(const mpq_class& v);
std::string to_string(const mpz_class& v);

// Exponent of p in n (n != 0).
unsigned p_valuation(const mpz_class& n, std::uint64_t p);
bool is_p_adic_unit(const mpz_class& n, std::uint64_t p);
bool is_p_adic_unit(const mpq_class& q, std::uint64_t p);

/// N_n = n! / prod_j (p^j!)^{a_j} for the base-p digits a_j of n: the leading
/// coefficient of the digit-wise product of tensor powers of a Lyndon word.
struct DigitMultinomial {
    mpz_class value;
    unsigned valuation = 0;
    bool unit = false;
};
DigitMultinomial digit_multinomial(unsigned n, std::uint64_t p);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

} // namespace mixshuffle
