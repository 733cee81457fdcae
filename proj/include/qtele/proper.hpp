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
#include <vector>

#include "newton.hpp"

namespace qtele {

// Maximal divisor of f (with multiplicity) whose irreducible factors p
// satisfy p(q^a x, q^b y) = const * p, i.e. have support collinear in
// direction (a, b).  The twist sigma_{b,-a} scales the coefficient at (i, j)
// by q^{b i - a j}, which is constant on the support exactly for such
// factors; iterated gcds kill everything else because the sigma-orbit of a
// non-invariant factor leaves the finite factor set of f.
inline BiPoly invariant_part(const BiPoly& f, long a, long b) {
    if (f.is_zero()) throw ZeroInput("invariant_part of zero polynomial");
    BiPoly g = canonical_bipoly(f);
    long guard = f.deg_x() + f.deg_y() + 2;
    for (long it = 0; it < guard; ++it) {
        BiPoly gs = g.sigma(b, -a);
        BiPoly d = gcd_bipoly(g, gs);
        if (d == g) return g;
        g = d;
        if (g.is_constant()) return g;
    }
    throw InternalCheckFailure("invariant_part did not stabilize");
}

struct ProperVerdict {
    bool is_proper = false;
    std::optional<BiPoly> witness;  // nontrivial non-collinear cofactor when false
    // Per-direction invariant parts (only nontrivial ones are recorded).
    std::vector<std::tuple<long, long, BiPoly>> directions;
};

// A polynomial is q-proper iff every irreducible factor divides some
// nontrivial q-dilation of itself, which holds exactly when each factor's
// support is collinear.  Candidate directions come from the Newton polygon
// edges (Minkowski-sum additivity); the product of the per-direction
// invariant parts must reproduce f up to monomial content and a unit.
inline ProperVerdict is_qproper_poly(const BiPoly& f) {
    if (f.is_zero()) throw ZeroInput("is_qproper_poly of zero polynomial");
    ProperVerdict out;
    auto [mono, stripped] = strip_monomial_content(f);
    (void)mono;
    BiPoly ft = canonical_bipoly(stripped);
    if (ft.is_constant()) {
        out.is_proper = true;
        return out;
    }
    NewtonPolygon np = newton_polygon(ft);
    BiPoly prod = BiPoly(1);
    for (const auto& [a, b] : np.edge_directions) {
        BiPoly part = invariant_part(ft, a, b);
        if (!part.is_constant()) {
            prod = prod * part;
            out.directions.emplace_back(a, b, part);
        }
    }
    BiPoly cof = divexact_bipoly(ft, canonical_bipoly(prod));
    if (cof.is_constant()) {
        out.is_proper = true;
    } else {
        out.is_proper = false;
        out.witness = canonical_bipoly(cof);
    }
    return out;
}

// Bivariate q-normal representation with respect to eps_y: the q-RNF of the
// shift quotient with ground field Q(q)(x), cleared to integer-primitive
// bivariate polynomials.  The exact identity is
//   R = unit * (r/s) * eps_y(u/v) / (u/v),
// the x-rational unit being the price of integer-primitive components.
struct QNRBivariate {
    BiPoly r, s, u, v;
    XRat unit;
};

inline QNRBivariate qnr_bivariate_from_qrnf(const QRNF<XRat>& nf) {
    QNRBivariate out;
    auto [r, ur] = ypoly_to_bipoly(nf.r);
    auto [s, us] = ypoly_to_bipoly(nf.s);
    auto [u, uu] = ypoly_to_bipoly(nf.u);
    auto [v, uv] = ypoly_to_bipoly(nf.v);
    out.r = r;
    out.s = s;
    out.u = u;
    out.v = v;
    // eps_y fixes the x-rational clearing units of u and v, so only the
    // r/s units survive in the identity.
    out.unit = ur / us;
    (void)uu;
    (void)uv;
    return out;
}

inline QNRBivariate qnr_bivariate(const YRat& R) {
    if (R.is_zero()) throw ZeroInput("q-NR of the zero rational function");
    QRNF<XRat> nf = qrnf(R);
    QNRBivariate out = qnr_bivariate_from_qrnf(nf);

    // Invariant check: the ratio identity with the recorded unit.
    YRat rs = YRat(bipoly_to_ypoly(out.r), bipoly_to_ypoly(out.s));
    YRat uv = YRat(bipoly_to_ypoly(out.u), bipoly_to_ypoly(out.v));
    YRat rebuilt = YRat(YPoly(out.unit)) * rs * qshift(uv, 1) / uv;
    if (!(rebuilt == R)) throw InternalCheckFailure("q-NR does not reproduce R");
    return out;
}

}  // namespace qtele
