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

#include <random>

#include <qtele/qtele.hpp>

namespace qtele::testgen {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long uniform(long lo, long hi) {  // inclusive
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng);
    }
    bool coin() { return uniform(0, 1) == 1; }
};

// Nonzero constant rho * q^e with small rho.
inline QRat rnd_qconst(Rng& rng) {
    long num = rng.uniform(1, 4) * (rng.coin() ? 1 : -1);
    long den = rng.uniform(1, 3);
    long e = rng.uniform(-3, 3);
    return QRat(Rational(num, den)) * QRat::q_power(e);
}

// Shifted linear factor in the main variable over Q(q): var - q^e or
// 1 - q^e*var (monic-normalized products keep tests deterministic).
inline Poly<QRat> rnd_linear_factor_q(Rng& rng) {
    long e = rng.uniform(-4, 4);
    if (rng.coin()) {
        // var - q^e
        return Poly<QRat>::from_coeffs({-QRat::q_power(e), QRat(1)});
    }
    // 1 - q^e var
    return Poly<QRat>::from_coeffs({QRat(1), -QRat::q_power(e)});
}

inline Poly<QRat> rnd_product_q(Rng& rng, long max_factors) {
    Poly<QRat> p = Poly<QRat>::one();
    long n = rng.uniform(0, max_factors);
    for (long i = 0; i < n; ++i) p = p * rnd_linear_factor_q(rng);
    return p;
}

// Shifted linear factor over ground field Q(q)(x): y - q^e x^f or
// 1 - q^e x^f y (f in {0, 1} keeps the x-degrees small).
inline Poly<XRat> rnd_linear_factor_x(Rng& rng) {
    long e = rng.uniform(-3, 3);
    long f = rng.uniform(0, 1);
    XRat c = XRat(XPoly::monomial(QRat::q_power(e), static_cast<int>(f)));
    if (rng.coin()) return Poly<XRat>::from_coeffs({-c, CoeffOps<XRat>::one()});
    return Poly<XRat>::from_coeffs({CoeffOps<XRat>::one(), -c});
}

inline Poly<XRat> rnd_product_x(Rng& rng, long max_factors) {
    Poly<XRat> p = Poly<XRat>::one();
    long n = rng.uniform(0, max_factors);
    for (long i = 0; i < n; ++i) p = p * rnd_linear_factor_x(rng);
    return p;
}

// Random nonzero rational function assembled from shifted linear factors.
inline RatFun<QRat> rnd_ratfun_q(Rng& rng, long max_factors) {
    Poly<QRat> num = mul_scalar(rnd_product_q(rng, max_factors), rnd_qconst(rng));
    Poly<QRat> den = rnd_product_q(rng, max_factors);
    return RatFun<QRat>(num, den);
}

inline RatFun<XRat> rnd_ratfun_x(Rng& rng, long max_factors) {
    Poly<XRat> num = mul_scalar(rnd_product_x(rng, max_factors),
                                XRat(XPoly(rnd_qconst(rng))));
    Poly<XRat> den = rnd_product_x(rng, max_factors);
    return RatFun<XRat>(num, den);
}

// QMR instances respecting the validity domain: denominators of D and U (and
// the numerator of D) are products of (1 - q^j var) with j >= 1, which never
// vanish at var = q^n for n >= 0.
inline Poly<QRat> rnd_safe_product_q(Rng& rng, long max_factors, long min_e = 1) {
    Poly<QRat> p = Poly<QRat>::one();
    long n = rng.uniform(0, max_factors);
    for (long i = 0; i < n; ++i) {
        long e = rng.uniform(min_e, min_e + 3);
        p = p * Poly<QRat>::from_coeffs({QRat(1), -QRat::q_power(e)});
    }
    return p;
}

inline QMR<QRat> rnd_qmr(Rng& rng) {
    QMR<QRat> mr;
    Poly<QRat> dn = mul_scalar(rnd_safe_product_q(rng, 2), rnd_qconst(rng));
    Poly<QRat> dd = rnd_safe_product_q(rng, 2);
    mr.D = RatFun<QRat>(dn, dd);
    Poly<QRat> un = mul_scalar(rnd_product_q(rng, 2), rnd_qconst(rng));
    Poly<QRat> ud = rnd_safe_product_q(rng, 3);
    mr.U = RatFun<QRat>(un, ud);
    mr.n0 = rng.uniform(0, 2);
    return mr;
}

// Univariate Laurent polynomial p used in proper-product construction.
inline std::vector<std::pair<long, QRat>> rnd_laurent(Rng& rng) {
    std::vector<std::pair<long, QRat>> terms;
    long nterms = rng.uniform(2, 3);
    long e = rng.uniform(-2, 0);
    for (long i = 0; i < nterms; ++i) {
        terms.emplace_back(e, rnd_qconst(rng));
        e += rng.uniform(1, 2);
    }
    return terms;
}

// A q-proper polynomial by construction: x^c y^d * prod_l p_l(q^{w_l} x^{a_l} y^{b_l}).
inline BiPoly rnd_proper_product(Rng& rng, long max_factors) {
    BiPoly f = BiPoly(1);
    long nf = rng.uniform(1, max_factors);
    long min_i = 0, min_j = 0;
    for (long l = 0; l < nf; ++l) {
        long a = rng.uniform(-2, 2);
        long b = rng.uniform(-2, 2);
        if (a == 0 && b == 0) a = 1;
        long g = std::gcd(std::abs(a), std::abs(b));
        a /= g;
        b /= g;
        long w = rng.uniform(-2, 2);
        BiPoly factor;
        for (const auto& [t, c] : rnd_laurent(rng)) {
            // c * (q^w x^a y^b)^t
            factor = factor + BiPoly::monomial(c * QRat::q_power(w * t), a * t, b * t);
        }
        if (factor.is_zero()) factor = BiPoly(1);
        f = f * factor;
    }
    // Shift into N^2 and attach a random extra monomial content.
    for (const auto& [k, v] : f.terms()) {
        min_i = std::min(min_i, k.first);
        min_j = std::min(min_j, k.second);
    }
    f = mul_monomial(f, -min_i + rng.uniform(0, 2), -min_j + rng.uniform(0, 2));
    return f;
}

// A factor with deliberately non-collinear support.
inline BiPoly rnd_noncollinear_factor(Rng& rng) {
    long e = rng.uniform(-3, 3);
    // x + q^e y + 1 has three non-collinear support points.
    return BiPoly::var_x() + mul_scalar(BiPoly::var_y(), QRat::q_power(e)) + BiPoly(1);
}

}  // namespace qtele::testgen
