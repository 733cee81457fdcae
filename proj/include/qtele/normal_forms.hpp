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

#include <algorithm>
#include <vector>

#include "qshift.hpp"

namespace qtele {

// q-Gosper form of a nonzero rational function R:
//   R = z * (a/b) * (c(q var)/c(var))
// with a, b, c monic, gcd(a, b(q^n var)) = 1 for all n >= 0,
// gcd(a, c) = gcd(b, c(q var)) = 1 and c(0) != 0.
template <class F>
struct QGosperForm {
    F z;
    Poly<F> a, b, c;

    RatFun<F> value() const {
        RatFun<F> ab = RatFun<F>(a) / RatFun<F>(b);
        RatFun<F> cc = RatFun<F>(qshift(c, 1)) / RatFun<F>(c);
        return RatFun<F>(F(z)) * ab * cc;
    }
};

// q-rational normal form: R = (r/s) * eps(u/v) / (u/v) with r/s eps-reduced,
// gcd(u, v) = 1 and neither u nor v divisible by the variable.  r carries the
// constant unit; s, u, v are monic.
template <class F>
struct QRNF {
    Poly<F> r, s, u, v;

    RatFun<F> value() const {
        RatFun<F> uv = RatFun<F>(u) / RatFun<F>(v);
        return (RatFun<F>(r) / RatFun<F>(s)) * qshift(uv, 1) / uv;
    }
};

namespace detail {

template <class F>
void check_qgosper(const QGosperForm<F>& gf, const RatFun<F>& R) {
    if (CoeffOps<F>::is_zero(gf.z)) throw InternalCheckFailure("q-Gosper form with z = 0");
    if (!(gf.value() == R)) throw InternalCheckFailure("q-Gosper form does not reproduce R");
    std::vector<long> ns;
    if (gf.a.degree() > 0 && gf.b.degree() > 0)
        for (long h : qdis_candidates(gf.a, gf.b)) ns.push_back(h);
    for (long h = 0; h <= 10; ++h) ns.push_back(h);
    for (long h : ns) {
        if (h < 0) continue;
        if (!coprime(gf.a, qshift(gf.b, h)))
            throw InternalCheckFailure("q-Gosper coprimality gcd(a, b(q^n x)) violated");
    }
    if (!coprime(gf.a, gf.c))
        throw InternalCheckFailure("q-Gosper condition gcd(a, c) = 1 violated");
    if (!coprime(gf.b, qshift(gf.c, 1)))
        throw InternalCheckFailure("q-Gosper condition gcd(b, c(qx)) = 1 violated");
    if (!gf.c.is_zero() && gf.c.low_degree() > 0)
        throw InternalCheckFailure("q-Gosper condition c(0) != 0 violated");
}

}  // namespace detail

// Gosper–Petkovsek style construction: start from the monic numerator and
// denominator, and for every shift h >= 0 at which they still share a factor
// migrate that factor into c.  Candidates are processed in increasing order:
// when h is reached every smaller shift is already clean, so the factors
// eps^{-1}g, ..., eps^{-h}g moved into c can meet neither the remaining b
// (via eps c) nor the remaining a.  A single sweep suffices, since removing
// factors never creates new matches.
template <class F>
QGosperForm<F> qgosper_form(const RatFun<F>& R) {
    if (R.is_zero()) throw ZeroInput("q-Gosper form of zero");
    QGosperForm<F> gf;
    gf.z = R.num().lc();  // den is monic by RatFun invariant
    gf.a = monic(R.num());
    gf.b = R.den();
    gf.c = Poly<F>::one();

    std::vector<long> cands;
    if (gf.a.degree() > 0 && gf.b.degree() > 0) cands = qdis_candidates(gf.a, gf.b);
    std::sort(cands.begin(), cands.end());
    for (long h : cands) {
        if (h < 0) continue;
        Poly<F> g = poly_gcd(gf.a, qshift(gf.b, h));
        if (g.degree() <= 0) continue;
        gf.a = divexact_field(gf.a, g);
        gf.b = divexact_field(gf.b, monic(qshift(g, -h)));
        for (long j = 1; j <= h; ++j) gf.c = gf.c * monic(qshift(g, -j));
        // Monic bookkeeping: b was divided by the monic image, which differs
        // from eps^{-h} g by q^{h deg g}; fold that unit into z.
        gf.z = gf.z * CoeffOps<F>::q_power(-h * g.degree());
    }
    detail::check_qgosper(gf, R);
    return gf;
}

// Algorithm q-RNF.  The zero input maps to (0, 1, 1, 1); otherwise two
// q-Gosper extractions, with the unit attached to the first component so the
// defining identity holds exactly.
template <class F>
QRNF<F> qrnf(const RatFun<F>& R) {
    QRNF<F> out;
    if (R.is_zero()) {
        out.r = Poly<F>::zero();
        out.s = Poly<F>::one();
        out.u = Poly<F>::one();
        out.v = Poly<F>::one();
        return out;
    }
    QGosperForm<F> g1 = qgosper_form(R);
    QGosperForm<F> g2 = qgosper_form(RatFun<F>(g1.b, g1.a));
    // R = z1 (a/b) eps(c)/c and b/a = z2 (r2/s2) eps(d)/d give
    // R = (z1/z2) (s2/r2) eps(c/d)/(c/d).
    Poly<F> g = poly_gcd(g1.c, g2.c);
    out.u = g.degree() > 0 ? divexact_field(g1.c, g) : g1.c;
    out.v = g.degree() > 0 ? divexact_field(g2.c, g) : g2.c;
    out.r = mul_scalar(g2.b, g1.z / g2.z);
    out.s = g2.a;

    if (!(out.value() == R)) throw InternalCheckFailure("q-RNF does not reproduce R");
    if (!is_eps_reduced(out.r, out.s)) throw InternalCheckFailure("q-RNF r/s not eps-reduced");
    if (!coprime(out.u, out.v)) throw InternalCheckFailure("q-RNF u, v not coprime");
    if (out.u.low_degree() > 0 || out.v.low_degree() > 0)
        throw InternalCheckFailure("q-RNF u or v divisible by the variable");
    return out;
}

}  // namespace qtele
