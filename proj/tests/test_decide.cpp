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

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

using namespace qtele;
using qtele::testgen::Rng;

namespace {

const char* kEx1 = "qpow(k) * (1 + q*qn + q^2*qk) / ((qn+qk+1)*(qn+q*qk+1)*qfac(k+1))";
const char* kEx2 = "qpow(k) * (1 + q*qn + q^2*qk) / ((qn+qk+1)*(qn+q*qk+1)*qfac(k))";

}  // namespace

TEST_CASE("Example 1 end-to-end") {
    DecisionReport rep = decide_qzpair(*parse_term(kEx1));
    CHECK(rep.verdict == Verdict::HasQZPair);
    CHECK(equal_up_to_unit(rep.qnr.r, parse_bipoly("q")));
    CHECK(equal_up_to_unit(rep.qnr.s, parse_bipoly("1-q^2*y")));
    CHECK(equal_up_to_unit(rep.qnr.u, parse_bipoly("1+q*x+q^2*y")));
    CHECK(equal_up_to_unit(rep.qnr.v, parse_bipoly("(x+y+1)*(x+q*y+1)")));
    CHECK(equal_up_to_unit(rep.V, parse_yrat("(-q^2)/((q^2-1)*(x+1))")));
    CHECK(equal_up_to_unit(rep.v2, parse_bipoly("(q^2-1)*(x+1)")));
    CHECK(rep.properness.is_proper);
}

TEST_CASE("Example 2 end-to-end") {
    DecisionReport rep = decide_qzpair(*parse_term(kEx2));
    CHECK(rep.verdict == Verdict::NoQZPair);
    REQUIRE(rep.properness.witness.has_value());
    CHECK(divides_bipoly(parse_bipoly("x+q*y+1"), *rep.properness.witness));
    CHECK(equal_up_to_unit(rep.V,
                           parse_yrat("(-(x+y+1)*q^2)/((q-1)*(x+1)*(x+q*y+1))")));
}

TEST_CASE("trivial term") {
    DecisionReport rep = decide_qzpair(*parse_term("1"));
    CHECK(rep.verdict == Verdict::HasQZPair);
    CHECK(equal_up_to_unit(rep.qnr.r, BiPoly(1)));
    CHECK(equal_up_to_unit(rep.qnr.s, BiPoly(1)));
    CHECK(equal_up_to_unit(rep.qnr.u, BiPoly(1)));
    CHECK(equal_up_to_unit(rep.qnr.v, BiPoly(1)));
    CHECK(rep.V == YRat::one());
    CHECK(rep.C1.is_zero());
    CHECK(rep.C2 == YRat::one());
}

TEST_CASE("rejected input never gets a mathematical verdict") {
    DecisionReport rep = decide_qzpair(*parse_term("1/(1-qn)"));
    CHECK(rep.verdict == Verdict::Rejected);
    REQUIRE(!rep.warnings.empty());
    CHECK(rep.warnings.front().fatal);
}

TEST_CASE("residual identity holds on every completed run") {
    Rng rng(111);
    std::vector<std::string> terms = {kEx1, kEx2, "1", "qpow(k)", "qpoch(q; k)^-1",
                                      "qpow(n+2*k) * qpoch(-1; k) / (qn+q*qk+1)"};
    for (const auto& src : terms) {
        TermPtr t = parse_term(src);
        DecisionReport rep = decide_qzpair(*t);  // throws on residual failure
        if (rep.verdict == Verdict::Rejected) continue;
        YRat residual = qshift(rep.C1, 1) * rep.R2 - rep.C1 + rep.C2;
        CHECK(residual == YRat::one());
    }
}

TEST_CASE("pointwise decomposition on a grid") {
    TermPtr t = parse_term(kEx1);
    DecisionReport rep = decide_qzpair(*t);
    TermParts parts = to_parts(*t);
    Rational qv(2);
    int checked = 0;
    for (long n = 0; n < 6; ++n) {
        for (long k = 0; k < 6; ++k) {
            try {
                Rational xv = rational_pow(qv, n), yv = rational_pow(qv, k);
                Rational tval = eval_term(parts, n, k, qv);
                Rational t_up = eval_term(parts, n, k + 1, qv);
                Rational c1 = eval_yrat(rep.C1, qv, xv, yv);
                Rational c1u = eval_yrat(rep.C1, qv, xv, yv * qv);
                Rational c2 = eval_yrat(rep.C2, qv, xv, yv);
                CHECK(tval == c1u * t_up - c1 * tval + c2 * tval);
                ++checked;
            } catch (const PoleAtPoint&) {
                continue;
            }
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("verdict invariance under unit rescaling of the input") {
    Rng rng(2222);
    for (const char* src : {kEx1, kEx2}) {
        DecisionReport base = decide_qzpair(*parse_term(src));
        for (int i = 0; i < 3; ++i) {
            QRat c = testgen::rnd_qconst(rng);
            std::string scaled = "(" + to_text(c) + ") * (" + std::string(src) + ")";
            DecisionReport rep = decide_qzpair(*parse_term(scaled));
            CHECK(rep.verdict == base.verdict);
            CHECK(equal_up_to_unit(rep.v2, base.v2));
        }
    }
}

TEST_CASE("q-proper-by-construction terms decide HasQZPair") {
    // Proper shapes: products of qpow, qpoch with monomial bases, and
    // rational content whose factors have collinear support.
    for (const char* src :
         {"qpow(2*n+k)", "qpoch(q; n)", "qpoch(q; k)^-1 * qpow(k)",
          "(1 - q*qn*qk) * qpow(k)", "qpoch(-1/2; n+k) / qpoch(q^2; k)"}) {
        DecisionReport rep = decide_qzpair(*parse_term(src));
        CHECK(rep.verdict == Verdict::HasQZPair);
    }
}
