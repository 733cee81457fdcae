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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "term.hpp"

namespace qtele {

enum class Verdict { HasQZPair, NoQZPair, Rejected };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HasQZPair:
            return "HasQZPair";
        case Verdict::NoQZPair:
            return "NoQZPair";
        case Verdict::Rejected:
            return "Rejected";
    }
    return "?";
}

// Full decision certificate for one term.
struct DecisionReport {
    Verdict verdict = Verdict::Rejected;
    std::vector<DomainWarning> warnings;

    // Populated unless Rejected.
    YRat R1, R2;
    QNRBivariate qnr;
    YRat U1, F, V;  // q-decomp over ground field Q(q)(x)
    BiPoly v2;      // cleared denominator of V
    ProperVerdict properness;
    YRat C1, C2;  // decomposition cofactors: T1 = C1*T, T2 = C2*T
    double timing_ms = 0.0;
};

// T1 = C1*T and T2 = C2*T with C1 = U1 * v/u and C2 = U2 * v/u; U2 is the
// cofactor of T2 with respect to the same product as U1 (V differs from U2 by
// w(q^{n0})/w, which is not constant in y).  The residual identity
// 1 = eps_y(C1)*R2 - C1 + C2 is the decomposition T = (K-1)T1 + T2 divided by
// T; it is verified symbolically before returning.
inline std::pair<YRat, YRat> build_certificate(const YRat& R2, const QRNF<XRat>& nf,
                                               const DecompResult<XRat>& dec) {
    YRat vu = YRat(nf.v, nf.u);
    YRat C1 = dec.U1 * vu;
    YRat C2 = dec.U2 * vu;
    YRat residual = qshift(C1, 1) * R2 - C1 + C2;
    if (!(residual == YRat::one()))
        throw ResidualIdentityFailure("decomposition residual identity failed");
    return {C1, C2};
}

// The decision pipeline: shift quotient w.r.t. k, q-RNF w.r.t. eps_y over
// Q(q)(x), eps-free decomposition, q-properness of the cleared denominator.
inline DecisionReport decide_qzpair(const TermExpr& t) {
    auto start = std::chrono::steady_clock::now();
    DecisionReport rep;
    TermParts parts = to_parts(t);

    rep.warnings = validate_domain(parts);
    for (const auto& w : rep.warnings) {
        if (w.fatal) {
            rep.verdict = Verdict::Rejected;
            return rep;
        }
    }

    rep.R1 = shift_quotient(parts, Direction::n);
    rep.R2 = shift_quotient(parts, Direction::k);

    QRNF<XRat> nf = qrnf(rep.R2);
    rep.qnr = qnr_bivariate_from_qrnf(nf);

    QMR<XRat> mr;
    mr.D = YRat(nf.r, nf.s);
    mr.U = YRat(nf.u, nf.v);
    mr.n0 = 0;
    DecompResult<XRat> dec = qdecomp(mr);
    rep.U1 = dec.U1;
    rep.F = dec.F_;
    rep.V = dec.V;

    rep.v2 = yrat_to_birat(rep.V).den();
    rep.properness = is_qproper_poly(rep.v2);

    auto [C1, C2] = build_certificate(rep.R2, nf, dec);
    rep.C1 = C1;
    rep.C2 = C2;

    // Similarity-scaling degeneracy: if u or v vanishes at (q^m, 1) the
    // paper's T1/T2 reconstruction degenerates at isolated n; flag it.
    for (const YPoly* p : {&nf.u, &nf.v}) {
        XRat at1 = p->eval(CoeffOps<XRat>::one());
        if (at1.is_zero()) {
            rep.warnings.push_back({"u or v vanishes identically at y = 1", false});
            continue;
        }
        for (long m = 0; m <= 12; ++m) {
            QRat val = at1.num().eval(QRat::q_power(m));
            if (val.is_zero()) {
                rep.warnings.push_back(
                    {"similarity scaling u(q^n,1)/v(q^n,1) degenerates at n = " +
                         std::to_string(m),
                     false});
                break;
            }
        }
    }

    rep.verdict = rep.properness.is_proper ? Verdict::HasQZPair : Verdict::NoQZPair;
    auto end = std::chrono::steady_clock::now();
    rep.timing_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return rep;
}

}  // namespace qtele
