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
#include <set>
#include <vector>

#include "resultant.hpp"

namespace qtele {

// The q-shift operator on the main variable: var -> q^h * var.  A ring
// automorphism, so canonical forms are preserved up to the monic rescale.
template <class F>
Poly<F> qshift(const Poly<F>& p, long h) {
    if (h == 0 || p.is_zero()) return p;
    std::vector<F> out;
    out.reserve(p.coeffs().size());
    long e = 0;
    for (const auto& c : p.coeffs()) {
        out.push_back(CoeffOps<F>::is_zero(c) ? c : c * CoeffOps<F>::q_power(h * e));
        ++e;
    }
    return Poly<F>::from_coeffs(std::move(out));
}

template <class F>
RatFun<F> qshift(const RatFun<F>& r, long h) {
    if (h == 0 || r.is_zero()) return r;
    Poly<F> n = qshift(r.num(), h);
    Poly<F> d = qshift(r.den(), h);
    // gcd(n, d) = 1 is preserved by the automorphism; restore the monic den.
    F u = CoeffOps<F>::one() / d.lc();
    return RatFun<F>::from_reduced(mul_scalar(n, u), mul_scalar(d, u));
}

namespace detail {

// Candidate extraction from the resultant N(z) = Res_var(u(var), v(z*var)).
// If N(q^h) = 0 then the top (and bottom) q-degree of sum n_i q^{h i} must be
// attained at least twice, so h solves a degree- or order-balance equation of
// a coefficient pair.
template <class D>
std::set<long> candidates_from_resultant(const Poly<D>& N) {
    struct Entry {
        long idx, qdeg, qord;
    };
    std::vector<Entry> es;
    long i = 0;
    for (const auto& c : N.coeffs()) {
        if (!CoeffOps<D>::is_zero(c)) es.push_back({i, cleared_q_degree(c), cleared_q_order(c)});
        ++i;
    }
    std::set<long> out;
    for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            long di = es[b].idx - es[a].idx;
            long num_deg = es[a].qdeg - es[b].qdeg;
            if (num_deg % di == 0) out.insert(num_deg / di);
            long num_ord = es[a].qord - es[b].qord;
            if (num_ord % di == 0) out.insert(num_ord / di);
        }
    }
    return out;
}

}  // namespace detail

// A finite superset of { h : gcd(u(var), v(q^h var)) is nontrivial }, via the
// resultant N(z) = Res_var(u(var), v(z var)) computed fraction-free over the
// cleared integer-coefficient domain.  Candidates include negative h; callers
// filter as needed.  Var-power factors are stripped first (they match at
// every shift and carry no information).
template <class F>
std::vector<long> qdis_candidates(const Poly<F>& u, const Poly<F>& v) {
    if (u.is_zero() || v.is_zero()) throw ZeroInput("qdis_candidates of zero polynomial");
    auto [su, u1] = strip_var_power(u);
    auto [sv, v1] = strip_var_power(v);
    (void)su;
    (void)sv;
    if (u1.degree() == 0 || v1.degree() == 0) return {};

    using D = typename CoeffOps<F>::Cleared;
    Poly<D> cu = clear_poly(u1);
    Poly<D> cv = clear_poly(v1);

    using E = Poly<D>;  // polynomials in the auxiliary variable z
    std::vector<E> f, g;
    f.reserve(cu.coeffs().size());
    for (const auto& c : cu.coeffs()) f.push_back(E(c));
    g.reserve(cv.coeffs().size());
    int j = 0;
    for (const auto& c : cv.coeffs()) {
        g.push_back(E::monomial(c, j));
        ++j;
    }
    E N = sylvester_resultant(f, g, E(), E::one());
    if (N.is_zero())
        throw InternalCheckFailure("vanishing dispersion resultant on var-free input");
    auto cands = detail::candidates_from_resultant(N);
    return std::vector<long>(cands.begin(), cands.end());
}

// q-dispersion: the largest h >= 0 such that u and v(q^h var) share an
// irreducible factor other than the variable itself; -1 if none.
template <class F>
long qdis(const Poly<F>& u, const Poly<F>& v) {
    if (u.is_zero() || v.is_zero()) throw ZeroInput("qdis of zero polynomial");
    auto [su, u1] = strip_var_power(u);
    auto [sv, v1] = strip_var_power(v);
    (void)su;
    (void)sv;
    if (u1.degree() == 0 || v1.degree() == 0) return -1;
    auto cands = qdis_candidates(u1, v1);
    std::sort(cands.begin(), cands.end(), std::greater<long>());
    for (long h : cands) {
        if (h < 0) continue;
        if (!coprime(u1, qshift(v1, h))) return h;
    }
    return -1;
}

// Shift in the ground-field variable x of the bivariate view: acts on the
// coefficients, leaving y-exponents alone.
inline YPoly qshift_x(const YPoly& p, long h) {
    if (h == 0) return p;
    std::vector<XRat> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(qshift(c, h));
    return YPoly::from_coeffs(std::move(out));
}

inline YRat qshift_x(const YRat& r, long h) {
    if (h == 0) return r;
    // An automorphism of the coefficient field: reduced and monic-in-y forms
    // are preserved.
    return YRat::from_reduced(qshift_x(r.num(), h), qshift_x(r.den(), h));
}

// r/s is eps-reduced iff r is coprime to every integer q-shift of s.  Shifts
// h >= 0 are covered by qdis(r, s), shifts h <= 0 by qdis(s, r); a shared
// var factor fails at every shift.
template <class F>
bool is_eps_reduced(const Poly<F>& r, const Poly<F>& s) {
    if (r.is_zero() || s.is_zero()) throw ZeroInput("is_eps_reduced of zero polynomial");
    if (r.low_degree() > 0 && s.low_degree() > 0) return false;
    return qdis(r, s) == -1 && qdis(s, r) == -1;
}

// v is eps-free iff no positive q-shift of v shares a non-variable factor
// with v; qdis(v, v) is 0 for the trivial self-match or -1 for constants and
// pure var powers.
template <class F>
bool is_eps_free(const Poly<F>& v) {
    if (v.is_zero()) throw ZeroInput("is_eps_free of zero polynomial");
    return qdis(v, v) <= 0;
}

}  // namespace qtele
