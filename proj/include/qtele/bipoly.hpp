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

#include <map>
#include <utility>
#include <vector>

#include "decomp.hpp"

namespace qtele {

// Bivariate polynomial in (x, y) over Q(q); sparse, no zero coefficients.
// In the bivariate pipeline x and y stand for q^n and q^k.
class BiPoly {
  public:
    using Key = std::pair<long, long>;  // (x exponent, y exponent)
    using Map = std::map<Key, QRat>;

    BiPoly() = default;
    explicit BiPoly(const QRat& c) {
        if (!c.is_zero()) c_[{0, 0}] = c;
    }
    explicit BiPoly(long n) : BiPoly(QRat(n)) {}

    static BiPoly monomial(const QRat& c, long i, long j) {
        BiPoly p;
        if (!c.is_zero()) p.c_[{i, j}] = c;
        return p;
    }
    static BiPoly var_x() { return monomial(QRat(1), 1, 0); }
    static BiPoly var_y() { return monomial(QRat(1), 0, 1); }

    const Map& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == Key{0, 0});
    }
    bool is_monomial() const { return c_.size() == 1; }

    QRat coeff(long i, long j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? QRat() : it->second;
    }

    long deg_x() const {
        long d = 0;
        for (const auto& [k, v] : c_) d = std::max(d, k.first);
        return d;
    }
    long deg_y() const {
        long d = 0;
        for (const auto& [k, v] : c_) d = std::max(d, k.second);
        return d;
    }

    void add_term(long i, long j, const QRat& c) {
        if (c.is_zero()) return;
        auto it = c_.find({i, j});
        if (it == c_.end()) {
            c_[{i, j}] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [k, v] : c_) r.c_[k] = -v;
        return r;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, v);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, -v);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // f(q^a x, q^b y): the coefficient at (i, j) picks up q^{a i + b j}.
    BiPoly sigma(long a, long b) const {
        BiPoly r;
        for (const auto& [k, v] : c_)
            r.c_[k] = v * QRat::q_power(a * k.first + b * k.second);
        return r;
    }

    // Leading term in graded-lex order (total degree, then x exponent).
    Key leading_key() const {
        if (is_zero()) throw ZeroInput("leading term of zero polynomial");
        Key best = c_.begin()->first;
        for (const auto& [k, v] : c_) {
            long tb = best.first + best.second, tk = k.first + k.second;
            if (tk > tb || (tk == tb && k.first > best.first)) best = k;
        }
        return best;
    }

    Rational eval(const Rational& qv, const Rational& xv, const Rational& yv) const {
        Rational acc(0);
        for (const auto& [k, v] : c_)
            acc += v.eval(qv) * rational_pow(xv, k.first) * rational_pow(yv, k.second);
        return acc;
    }

  private:
    Map c_;
};

inline BiPoly mul_scalar(const BiPoly& p, const QRat& s) {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, v] : p.terms()) r.add_term(k.first, k.second, v * s);
    return r;
}

inline BiPoly mul_monomial(const BiPoly& p, long i, long j) {
    BiPoly r;
    for (const auto& [k, v] : p.terms()) r.add_term(k.first + i, k.second + j, v);
    return r;
}

// Spec-level name for the q-dilation substitution.
inline BiPoly sigma_shift(const BiPoly& f, long a, long b) { return f.sigma(a, b); }

// Strips the monomial content x^i y^j: f = x^i y^j * rest.
inline std::pair<std::pair<long, long>, BiPoly> strip_monomial_content(const BiPoly& f) {
    if (f.is_zero()) return {{0, 0}, f};
    long mi = f.terms().begin()->first.first, mj = f.terms().begin()->first.second;
    for (const auto& [k, v] : f.terms()) {
        mi = std::min(mi, k.first);
        mj = std::min(mj, k.second);
    }
    return {{mi, mj}, mul_monomial(f, -mi, -mj)};
}

// Canonical scale: f = unit * g with g having coprime integer Z[q]
// coefficients and a positive leading integer coefficient on the graded-lex
// leading term.  The zero polynomial is its own canonical form with unit 1.
inline std::pair<BiPoly, QRat> canonical_scale(const BiPoly& f) {
    if (f.is_zero()) return {f, QRat(1)};
    using IP = CoeffOps<IntPoly>;
    IntPoly den = IntPoly::one();
    for (const auto& [k, v] : f.terms()) den = lcm_domain(den, v.den());
    IntPoly content;
    for (const auto& [k, v] : f.terms()) {
        IntPoly cleared = v.num() * IP::divexact(den, v.den());
        content = content.is_zero() ? IP::canonicalize(cleared) : IP::gcd(content, cleared);
        (void)k;
    }
    QRat unit(content, den);
    BiPoly g = mul_scalar(f, unit.inv());
    // Sign-normalize on the leading term.
    const QRat lead = g.coeff(g.leading_key().first, g.leading_key().second);
    if (lead.negative_leading()) {
        g = -g;
        unit = -unit;
    }
    return {g, unit};
}

inline BiPoly canonical_bipoly(const BiPoly& f) { return canonical_scale(f).first; }

// ---------------------------------------------------------------------------
// Conversions between BiPoly and the univariate-in-y view over Q(q)(x).
// ---------------------------------------------------------------------------

inline YPoly bipoly_to_ypoly(const BiPoly& f) {
    std::vector<std::vector<QRat>> slices(static_cast<std::size_t>(f.deg_y()) + 1);
    for (const auto& [k, v] : f.terms()) {
        auto& s = slices[static_cast<std::size_t>(k.second)];
        if (static_cast<std::size_t>(k.first) >= s.size())
            s.resize(static_cast<std::size_t>(k.first) + 1, QRat());
        s[static_cast<std::size_t>(k.first)] = v;
    }
    std::vector<XRat> out;
    out.reserve(slices.size());
    for (auto& s : slices) out.push_back(XRat(XPoly::from_coeffs(std::move(s))));
    return YPoly::from_coeffs(std::move(out));
}

inline XPoly lcm_domain_field(const XPoly& a, const XPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    XPoly g = poly_gcd(a, b);
    return monic(a * divexact_field(b, g));
}

// Clears x-denominators of a y-polynomial over Q(q)(x) and returns the
// canonical-primitive bivariate polynomial together with the exact unit:
//   p(y) = unit * (result as an element of Q(q)(x)[y]).
inline std::pair<BiPoly, XRat> ypoly_to_bipoly(const YPoly& p) {
    if (p.is_zero()) return {BiPoly(), XRat::one()};
    XPoly den = XPoly::one();
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) den = lcm_domain_field(den, c.den());
    BiPoly raw;
    long j = 0;
    for (const auto& c : p.coeffs()) {
        if (!c.is_zero()) {
            XPoly cl = c.num() * divexact_field(den, c.den());
            long i = 0;
            for (const auto& qc : cl.coeffs()) {
                raw.add_term(i, j, qc);
                ++i;
            }
        }
        ++j;
    }
    auto [canon, unit] = canonical_scale(raw);
    // p = raw/den = unit * canon / den.
    XRat total = XRat(XPoly(unit), den);
    return {canon, total};
}

// Content of f viewed in (Q(q)[x])[y]: the monic gcd of the y-slices.
inline XPoly x_content(const BiPoly& f) {
    if (f.is_zero()) return XPoly();
    YPoly yp = bipoly_to_ypoly(f);
    XPoly g;
    for (const auto& c : yp.coeffs()) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c.num());  // denominators are 1 here by construction
        if (g.degree() == 0) break;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Bivariate gcd and exact division over Q(q)[x, y], via the primitive /
// x-content split and the field gcd in Q(q)(x)[y].  Results are canonical.
// ---------------------------------------------------------------------------

inline BiPoly bipoly_from_xpoly(const XPoly& p) {
    BiPoly r;
    long i = 0;
    for (const auto& c : p.coeffs()) {
        r.add_term(i, 0, c);
        ++i;
    }
    return r;
}

inline BiPoly gcd_bipoly(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero()) return canonical_bipoly(g);
    if (g.is_zero()) return canonical_bipoly(f);
    XPoly cf = x_content(f), cg = x_content(g);
    XPoly cc = poly_gcd(cf, cg);
    YPoly fp = bipoly_to_ypoly(f);
    YPoly gp = bipoly_to_ypoly(g);
    YPoly pg = poly_gcd(fp, gp);
    auto [pp, unit] = ypoly_to_bipoly(pg);
    (void)unit;
    BiPoly result = pp * bipoly_from_xpoly(cc);
    return canonical_bipoly(result);
}

// Exact division in Q(q)[x, y]; throws NotDivisible if g does not divide f.
inline BiPoly divexact_bipoly(const BiPoly& f, const BiPoly& g) {
    if (g.is_zero()) throw DivisionByZero("bivariate division by zero");
    if (f.is_zero()) return BiPoly();
    YPoly fp = bipoly_to_ypoly(f);
    YPoly gp = bipoly_to_ypoly(g);
    auto [q, r] = divmod(fp, gp);
    if (!r.is_zero()) throw NotDivisible("bivariate division not exact");
    auto [bq, unit] = ypoly_to_bipoly(q);
    // The quotient must be polynomial in x as well: unit must be x-free.
    if (unit.den().degree() != 0 || unit.num().degree() != 0)
        throw NotDivisible("bivariate division not exact in x");
    QRat scale = unit.num().coeff(0) / unit.den().coeff(0);
    return mul_scalar(bq, scale);
}

inline bool divides_bipoly(const BiPoly& g, const BiPoly& f) {
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    try {
        (void)divexact_bipoly(f, g);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Reduced bivariate rational functions, used for parsing, printing and the
// term DSL.  den is canonical-primitive; num absorbs the unit.
// ---------------------------------------------------------------------------

class BiRat {
  public:
    BiRat() : num_(), den_(BiPoly(1)) {}
    explicit BiRat(BiPoly n) : num_(std::move(n)), den_(BiPoly(1)) {}
    BiRat(BiPoly n, BiPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    explicit BiRat(const QRat& c) : num_(BiPoly(c)), den_(BiPoly(1)) {}

    static BiRat one() { return BiRat(BiPoly(1)); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == BiPoly(1); }

    BiRat operator-() const {
        BiRat r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend BiRat operator+(const BiRat& a, const BiRat& b) {
        return BiRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BiRat operator-(const BiRat& a, const BiRat& b) {
        return BiRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BiRat operator*(const BiRat& a, const BiRat& b) {
        return BiRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BiRat operator/(const BiRat& a, const BiRat& b) {
        if (b.is_zero()) throw DivisionByZero("bivariate rational division by zero");
        return BiRat(a.num_ * b.den_, a.den_ * b.num_);
    }

    BiRat inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return BiRat(den_, num_);
    }

    friend bool operator==(const BiRat& a, const BiRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BiRat& a, const BiRat& b) { return !(a == b); }

    Rational eval(const Rational& qv, const Rational& xv, const Rational& yv) const {
        Rational d = den_.eval(qv, xv, yv);
        if (sgn(d) == 0) throw PoleAtPoint("denominator vanishes at evaluation point");
        return num_.eval(qv, xv, yv) / d;
    }

  private:
    BiPoly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("bivariate rational with zero denominator");
        if (num_.is_zero()) {
            den_ = BiPoly(1);
            return;
        }
        BiPoly g = gcd_bipoly(num_, den_);
        if (!(g == BiPoly(1))) {
            num_ = divexact_bipoly(num_, g);
            den_ = divexact_bipoly(den_, g);
        }
        auto [dc, unit] = canonical_scale(den_);
        den_ = dc;
        num_ = mul_scalar(num_, unit.inv());
    }
};

inline BiRat pow_birat(const BiRat& base, long e) {
    if (e == 0) return BiRat::one();
    BiRat b = e < 0 ? base.inv() : base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    BiRat acc = BiRat::one();
    while (n) {
        if (n & 1ul) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

// BiRat <-> the univariate-in-y rational view over Q(q)(x).
inline YRat birat_to_yrat(const BiRat& r) {
    return YRat(bipoly_to_ypoly(r.num()), bipoly_to_ypoly(r.den()));
}

inline BiRat yrat_to_birat(const YRat& r) {
    auto [n, un] = ypoly_to_bipoly(r.num());
    auto [d, ud] = ypoly_to_bipoly(r.den());
    // r = (un * n) / (ud * d); fold the x-rational unit back in.
    XRat u = un / ud;
    BiPoly nn = n * bipoly_from_xpoly(u.num());
    BiPoly dd = d * bipoly_from_xpoly(u.den());
    return BiRat(nn, dd);
}

}  // namespace qtele
