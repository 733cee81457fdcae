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

#include "normal_forms.hpp"

namespace qtele {

// q-multiplicative representation of a term T:
//   T(n) = U(q^n) * prod_{j=n0}^{n-1} D(q^j),
// D without zeros or poles and U without poles at q^n for n >= n0.
template <class F>
struct QMR {
    RatFun<F> D, U;
    long n0 = 0;
};

template <class F>
struct DecompResult {
    RatFun<F> U1;  // cofactor of the telescoped part T1 (ratio D)
    RatFun<F> U2;  // cofactor of T2 with ratio D: U2 = U - D*eps(U1) + U1
    RatFun<F> F_;  // ratio of the eps-free part T2
    RatFun<F> V;   // cofactor of T2 with ratio F_; its denominator is eps-free
};

// Lemma q-trans: the cofactor of T - Delta T1 when T, T1 share the ratio D.
template <class F>
RatFun<F> qmr_transform(const RatFun<F>& D, const RatFun<F>& U, const RatFun<F>& U1) {
    return U - D * qshift(U1, 1) + U1;
}

// Algorithm pump: redistribute g = f~ * g~ so that gcd(f~, g~) = 1 and every
// irreducible factor of f~ divides f.  Requires f | g; outputs are monic.
template <class F>
std::pair<Poly<F>, Poly<F>> pump(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero()) throw ZeroInput("pump with zero f");
    Poly<F> ft = monic(f);
    auto [gt, rem] = divmod(monic(g), ft);
    if (!rem.is_zero()) throw NotDivisible("pump requires f | g");
    gt = monic(gt);
    while (true) {
        Poly<F> d = poly_gcd(ft, gt);
        if (d.degree() == 0) break;
        ft = ft * d;
        gt = divexact_field(gt, d);
    }
    return {ft, gt};
}

// Algorithm q-decomp: the eps-free additive decomposition T = Delta T1 + T2.
// Follows the listing line by line; n0 enters only through the scalar
// 1/w(q^{n0}).
template <class F>
DecompResult<F> qdecomp(const QMR<F>& mr) {
    if (mr.D.is_zero()) throw InvalidQMR("q-MR with zero ratio D");
    const Poly<F> d1 = mr.D.num();
    const Poly<F> d2 = mr.D.den();

    RatFun<F> U1 = RatFun<F>::zero();
    RatFun<F> U2 = mr.U;
    Poly<F> u2 = U2.den();

    long N = U2.is_zero() ? -1 : qdis(u2, u2);
    for (long h = N; h >= 1; --h) {
        Poly<F> w2 = poly_gcd(u2, d2);
        Poly<F> v2 = w2.degree() > 0 ? divexact_field(u2, w2) : u2;
        if (v2.degree() == 0) break;
        Poly<F> s = poly_gcd(v2, qshift(v2, -h));
        auto [st, ut2] = pump(s, u2);
        auto [a, b] = partial_split_nd(U2.num(), U2.den(), st, ut2);
        if (b.is_zero()) continue;
        RatFun<F> U1p = -RatFun<F>(b, st);
        U1 = U1 + U1p;
        U2 = U2 - mr.D * qshift(U1p, 1) + U1p;
        u2 = U2.den();
    }

    Poly<F> v1 = U2.num();
    Poly<F> v2 = U2.den();
    Poly<F> w = poly_gcd(d2, v2);
    Poly<F> f2 = d2;
    if (w.degree() > 0) {
        v2 = divexact_field(v2, w);
        f2 = qshift(w, 1) * divexact_field(d2, w);
    }
    F w_at_n0 = w.eval(CoeffOps<F>::q_power(mr.n0));
    if (CoeffOps<F>::is_zero(w_at_n0))
        throw EvaluationFailure("w(q^{n0}) = 0: the q-MR violates its validity domain");

    DecompResult<F> out;
    out.U1 = U1;
    out.U2 = U2;
    out.F_ = RatFun<F>(d1, f2);
    out.V = RatFun<F>(mul_scalar(v1, CoeffOps<F>::one() / w_at_n0), v2);

    // Theorem q-decomp postconditions.
    if (!out.V.is_zero() && !is_eps_free(out.V.den()))
        throw InternalCheckFailure("q-decomp: denominator of V is not eps-free");
    if (!(qmr_transform(mr.D, mr.U, out.U1) == U2))
        throw InternalCheckFailure("q-decomp: transform identity violated");
    if (!mr.D.is_zero() && is_eps_reduced(mr.D.num(), mr.D.den())) {
        if (!is_eps_reduced(out.F_.num(), out.F_.den()))
            throw InternalCheckFailure("q-decomp: eps-reduced not preserved");
    }
    return out;
}

}  // namespace qtele
