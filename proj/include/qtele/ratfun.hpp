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

#include <utility>

#include "qfield.hpp"

namespace qtele {

// Reduced rational function over a coefficient field F: num/den with
// gcd(num, den) = 1 and a monic denominator.
template <class F>
class RatFun {
  public:
    RatFun() : num_(), den_(Poly<F>::one()) {}
    explicit RatFun(Poly<F> n) : num_(std::move(n)), den_(Poly<F>::one()) {}
    explicit RatFun(const F& c) : num_(Poly<F>(c)), den_(Poly<F>::one()) {}
    RatFun(Poly<F> n, Poly<F> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Poly<F>::one()); }

    // Trusted constructor for values already in canonical form (automorphic
    // images of reduced functions); skips the gcd.
    static RatFun from_reduced(Poly<F> n, Poly<F> d) {
        RatFun r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RatFun(den_, num_);
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  private:
    Poly<F> num_, den_;

    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>::one();
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divexact_field(num_, g);
            den_ = divexact_field(den_, g);
        }
        const F l = den_.lc();
        if (!(l == CoeffOps<F>::one())) {
            F u = CoeffOps<F>::one() / l;
            num_ = mul_scalar(num_, u);
            den_ = mul_scalar(den_, u);
        }
    }
};

template <class F>
RatFun<F> pow_ratfun(const RatFun<F>& base, long e) {
    if (e == 0) return RatFun<F>::one();
    RatFun<F> b = e < 0 ? base.inv() : base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    RatFun<F> acc = RatFun<F>::one();
    while (n) {
        if (n & 1ul) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

using XRat = RatFun<QRat>;   // Q(q)(x)
using YPoly = Poly<XRat>;    // Q(q)(x)[y]
using YRat = RatFun<XRat>;   // Q(q)(x)(y)

template <>
struct CoeffOps<XRat> {
    static constexpr bool is_field = true;
    using Cleared = Poly<IntPoly>;  // Z[q][x]

    static XRat zero() { return XRat(); }
    static XRat one() { return XRat(QRat(1)); }
    static bool is_zero(const XRat& a) { return a.is_zero(); }

    static void clear_fraction(const XRat& e, Cleared& n, Cleared& d) {
        auto [n1, dn] = clear_poly_den(e.num());
        auto [d1, dd] = clear_poly_den(e.den());
        n = mul_scalar(n1, dd);
        d = mul_scalar(d1, dn);
    }

    static XRat from_cleared(const Cleared& n) {
        std::vector<QRat> cs;
        cs.reserve(n.coeffs().size());
        for (const auto& c : n.coeffs()) cs.push_back(QRat(c));
        return XRat(XPoly::from_coeffs(std::move(cs)));
    }

    static XRat q_power(long m) { return XRat(QRat::q_power(m)); }

    static long q_degree(const XRat& e) {
        if (e.is_zero()) throw ZeroInput("q_degree of zero");
        Cleared n, d;
        clear_fraction(e, n, d);
        return cleared_q_degree(n) - cleared_q_degree(d);
    }
    static long q_order(const XRat& e) {
        if (e.is_zero()) throw ZeroInput("q_order of zero");
        Cleared n, d;
        clear_fraction(e, n, d);
        return cleared_q_order(n) - cleared_q_order(d);
    }

    static Rational spec_eval(const XRat& e, const SpecPoint& p) {
        Rational den(0), pw(1);
        for (const auto& c : e.den().coeffs()) {
            if (!c.is_zero()) den += c.eval(p.q) * pw;
            pw *= p.x;
        }
        if (sgn(den) == 0) throw PoleAtPoint("specialization hits a pole");
        Rational num(0);
        pw = Rational(1);
        for (const auto& c : e.num().coeffs()) {
            if (!c.is_zero()) num += c.eval(p.q) * pw;
            pw *= p.x;
        }
        return num / den;
    }

    static long cleared_q_degree(const Cleared& p) {
        long m = 0;
        bool first = true;
        for (const auto& c : p.coeffs()) {
            if (c.is_zero()) continue;
            long d = c.degree();
            if (first || d > m) m = d;
            first = false;
        }
        return m;
    }
    static long cleared_q_order(const Cleared& p) {
        long m = 0;
        bool first = true;
        for (const auto& c : p.coeffs()) {
            if (c.is_zero()) continue;
            long d = c.low_degree();
            if (first || d < m) m = d;
            first = false;
        }
        return m;
    }
};

// q-degree helpers on cleared coefficient domains (used by qdis candidates).
inline long cleared_q_degree(const IntPoly& c) { return c.degree(); }
inline long cleared_q_order(const IntPoly& c) { return c.low_degree(); }
inline long cleared_q_degree(const Poly<IntPoly>& c) {
    return CoeffOps<XRat>::cleared_q_degree(c);
}
inline long cleared_q_order(const Poly<IntPoly>& c) {
    return CoeffOps<XRat>::cleared_q_order(c);
}

// Spec-level wrapper: the partial-fraction split of a rational function.
template <class F>
std::pair<Poly<F>, Poly<F>> partial_split(const RatFun<F>& U, const Poly<F>& st,
                                          const Poly<F>& u2) {
    return partial_split_nd(U.num(), U.den(), st, u2);
}

inline Rational eval_xrat(const XRat& e, const Rational& qv, const Rational& xv) {
    Rational d = eval_xpoly(e.den(), qv, xv);
    if (sgn(d) == 0) throw PoleAtPoint("denominator vanishes at evaluation point");
    return eval_xpoly(e.num(), qv, xv) / d;
}

inline Rational eval_ypoly(const YPoly& p, const Rational& qv, const Rational& xv,
                           const Rational& yv) {
    Rational acc(0), pw(1);
    for (const auto& c : p.coeffs()) {
        if (!c.is_zero()) acc += eval_xrat(c, qv, xv) * pw;
        pw *= yv;
    }
    return acc;
}

inline Rational eval_yrat(const YRat& e, const Rational& qv, const Rational& xv,
                          const Rational& yv) {
    Rational d = eval_ypoly(e.den(), qv, xv, yv);
    if (sgn(d) == 0) throw PoleAtPoint("denominator vanishes at evaluation point");
    return eval_ypoly(e.num(), qv, xv, yv) / d;
}

}  // namespace qtele
