/*
   Copyright 2026 The qtele Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include "errors.hpp"

namespace qtele {

// Arbitrary-precision integers and rationals.  mpq_class values are kept
// canonical (reduced, positive denominator) by GMP itself.
using Int = mpz_class;
using Rational = mpq_class;

// Per-coefficient-type operations.  Specialized for every type that can sit
// underneath a Poly<>: exact integers (gcd domain), rationals and the field
// tower above them.  Domain specializations provide gcd/divexact and a
// canonical unit; field specializations provide inversion plus a "cleared"
// integral domain used by the fraction-free gcd path, and a rational
// specialization hook used by one-sided coprimality certificates.
template <class C>
struct CoeffOps;

// Fixed rational specialization point (q, x) for certificates.
struct SpecPoint {
    Rational q, x;
};

template <>
struct CoeffOps<Int> {
    static constexpr bool is_field = false;

    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_zero(const Int& a) { return sgn(a) == 0; }

    static Int gcd(const Int& a, const Int& b) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }

    // Checked exact division.
    static Int divexact(const Int& a, const Int& b) {
        if (is_zero(b)) throw DivisionByZero("integer divexact by zero");
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (sgn(r) != 0) throw NotDivisible("integer division not exact");
        return q;
    }

    // The unit u such that a/u is canonically normalized (nonnegative).
    static Int canonical_unit(const Int& a) { return sgn(a) < 0 ? Int(-1) : Int(1); }
};

template <>
struct CoeffOps<Rational> {
    static constexpr bool is_field = true;
    using Cleared = Int;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }

    static void clear_fraction(const Rational& e, Int& num, Int& den) {
        num = e.get_num();
        den = e.get_den();
    }
    static Rational from_cleared(const Int& n) { return Rational(n); }
    static Rational spec_eval(const Rational& e, const SpecPoint&) { return e; }
};

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (sgn(base) == 0) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1ul) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (invert) acc = Rational(1) / acc;
    return acc;
}

}  // namespace qtele
