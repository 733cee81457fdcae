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

#include <optional>
#include <utility>

#include "poly.hpp"

namespace qtele {

using IntPoly = Poly<Int>;  // Z[q]

// An element of Q(q): a reduced ratio of integer-coefficient polynomials in
// the symbolic indeterminate q, denominator with positive leading coefficient.
// q is never specialized to a root of unity, so cancellation is purely
// polynomial and q-power recognition is unambiguous.
class QRat {
  public:
    QRat() : num_(), den_(IntPoly::one()) {}
    QRat(long n) : num_(IntPoly(Int(n))), den_(IntPoly::one()) {}
    QRat(const Int& n) : num_(IntPoly(n)), den_(IntPoly::one()) {}
    QRat(const Rational& r)
        : num_(IntPoly(Int(r.get_num()))), den_(IntPoly(Int(r.get_den()))) {}
    explicit QRat(IntPoly n) : num_(std::move(n)), den_(IntPoly::one()) {}
    QRat(IntPoly n, IntPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer_poly() const { return den_.is_one(); }

    QRat operator-() const {
        QRat r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend QRat operator+(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw DivisionByZero("Q(q) division by zero");
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }

    QRat inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
        return QRat(den_, num_);
    }

    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    static QRat q() { return QRat(IntPoly::monomial(Int(1), 1)); }

    static QRat q_power(long m) {
        if (m >= 0) return QRat(IntPoly::monomial(Int(1), static_cast<int>(m)));
        QRat r;
        r.num_ = IntPoly::one();
        r.den_ = IntPoly::monomial(Int(1), static_cast<int>(-m));
        return r;
    }

    // m such that *this == q^m exactly, if any.
    std::optional<long> as_q_power() const {
        if (is_zero()) throw ZeroInput("as_q_power of zero");
        if (num_.degree() != num_.low_degree() || den_.degree() != den_.low_degree())
            return std::nullopt;
        if (num_.lc() != Int(1) || den_.lc() != Int(1)) return std::nullopt;
        return static_cast<long>(num_.degree()) - static_cast<long>(den_.degree());
    }

    // deg_q and ord_q of the reduced fraction; both require a nonzero value.
    long q_degree() const {
        if (is_zero()) throw ZeroInput("q_degree of zero");
        return static_cast<long>(num_.degree()) - static_cast<long>(den_.degree());
    }
    long q_order() const {
        if (is_zero()) throw ZeroInput("q_order of zero");
        return static_cast<long>(num_.low_degree()) - static_cast<long>(den_.low_degree());
    }

    // Exact evaluation at a rational q-value.
    Rational eval(const Rational& qv) const {
        Rational n(0), d(0);
        Rational p(1);
        for (const auto& c : num_.coeffs()) {
            n += Rational(c) * p;
            p *= qv;
        }
        p = Rational(1);
        for (const auto& c : den_.coeffs()) {
            d += Rational(c) * p;
            p *= qv;
        }
        if (sgn(d) == 0) throw PoleAtPoint("Q(q) denominator vanishes at q-value");
        return n / d;
    }

    // Printing-order helper: sign of the numerator's leading coefficient.
    bool negative_leading() const { return !is_zero() && sgn(num_.lc()) < 0; }

  private:
    IntPoly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("Q(q) value with zero denominator");
        if (num_.is_zero()) {
            den_ = IntPoly::one();
            return;
        }
        using IP = CoeffOps<IntPoly>;
        IntPoly g = IP::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = IP::divexact(num_, g);
            den_ = IP::divexact(den_, g);
        }
        if (sgn(den_.lc()) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

template <>
struct CoeffOps<QRat> {
    static constexpr bool is_field = true;
    using Cleared = IntPoly;

    static QRat zero() { return QRat(); }
    static QRat one() { return QRat(1); }
    static bool is_zero(const QRat& a) { return a.is_zero(); }

    static void clear_fraction(const QRat& e, IntPoly& n, IntPoly& d) {
        n = e.num();
        d = e.den();
    }
    static QRat from_cleared(const IntPoly& n) { return QRat(n); }

    static QRat q_power(long m) { return QRat::q_power(m); }
    static long q_degree(const QRat& e) { return e.q_degree(); }
    static long q_order(const QRat& e) { return e.q_order(); }
    static Rational spec_eval(const QRat& e, const SpecPoint& p) { return e.eval(p.q); }
};

using XPoly = Poly<QRat>;  // Q(q)[x] (or Q(q)[y] for the univariate pipeline)

// Spec-level helper: qpower_of(e) for e in Q(q).
inline std::optional<long> qpower_of(const QRat& e) { return e.as_q_power(); }

inline Rational eval_xpoly(const XPoly& p, const Rational& qv, const Rational& xv) {
    Rational acc(0), pw(1);
    for (const auto& c : p.coeffs()) {
        if (!c.is_zero()) acc += c.eval(qv) * pw;
        pw *= xv;
    }
    return acc;
}

}  // namespace qtele
