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

TEST_CASE("rho") {
    YRat R1 = shift_quotient(*parse_term(kEx1), Direction::n);
    CHECK(rho(R1, 0) == YRat::one());
    CHECK(rho(R1, 1) == R1);
    CHECK(rho(R1, 2) == R1 * qshift_x(R1, 1));
    CHECK_THROWS_AS(rho(YRat::zero(), 1), ZeroInput);
}

TEST_CASE("verify the paper's pair for Example 1") {
    TermPtr t = parse_term(kEx1);
    QZPair pair;
    pair.coeffs.push_back(XPoly::one());
    pair.cert = parse_yrat("(x+q*y+1)*(1-q*y)/(y*(1+q*x+q^2*y))");
    CHECK(verify_qzpair(*t, pair));

    QZPair negated = pair;
    negated.cert = -negated.cert;
    CHECK(!verify_qzpair(*t, negated));

    QZPair zero;
    zero.coeffs.push_back(XPoly());
    zero.cert = pair.cert;
    CHECK(!verify_qzpair(*t, zero));  // all-zero L is not a qZ-pair
}

TEST_CASE("geometric telescoping") {
    TermPtr t = parse_term("qpow(k)");
    QZPair pair;
    pair.coeffs.push_back(XPoly::one());
    pair.cert = parse_yrat("1/(q-1)");
    CHECK(verify_qzpair(*t, pair));

    SearchOptions opt;
    opt.max_order = 0;
    opt.degree_cap = 2;
    auto found = search_qzpair(*t, opt);
    REQUIRE(found.has_value());
    CHECK(verify_qzpair(*t, *found));
}

TEST_CASE("verify is invariant under scaling the pair") {
    TermPtr t = parse_term(kEx1);
    QZPair pair;
    pair.coeffs.push_back(XPoly::one());
    pair.cert = parse_yrat("(x+q*y+1)*(1-q*y)/(y*(1+q*x+q^2*y))");
    Rng rng(5150);
    for (int i = 0; i < 5; ++i) {
        QRat c = testgen::rnd_qconst(rng);
        QZPair scaled;
        scaled.coeffs.push_back(mul_scalar(pair.coeffs[0], QRat(c)));
        scaled.cert = YRat(YPoly(XRat(XPoly(c)))) * pair.cert;
        CHECK(verify_qzpair(*t, scaled) == verify_qzpair(*t, pair));
    }
}

TEST_CASE("search finds a verified pair for Example 1 and none for Example 2") {
    SearchOptions opt;  // defaults: max_order 2, degree_cap 8
    auto f1 = search_qzpair(*parse_term(kEx1), opt);
    REQUIRE(f1.has_value());
    CHECK(verify_qzpair(*parse_term(kEx1), *f1));
    // Example 1 admits an order-0 telescoper.
    CHECK(f1->coeffs.size() == 1);

    auto f2 = search_qzpair(*parse_term(kEx2), opt);
    CHECK(!f2.has_value());
}

TEST_CASE("search is consistent with decide on proper-by-construction terms") {
    SearchOptions opt;
    opt.max_order = 1;
    opt.degree_cap = 4;
    for (const char* src : {"qpow(2*n+k)", "qpoch(q; k)^-1", "qpoch(q; k)^-1 * qpow(k)"}) {
        TermPtr t = parse_term(src);
        DecisionReport rep = decide_qzpair(*t);
        REQUIRE(rep.verdict == Verdict::HasQZPair);
        auto found = search_qzpair(*t, opt);
        if (found) CHECK(verify_qzpair(*t, *found));
    }
}

TEST_CASE("budget exhaustion raises") {
    SearchOptions opt;
    opt.max_order = 2;
    opt.degree_cap = 8;
    opt.budget = 10;
    CHECK_THROWS_AS(search_qzpair(*parse_term(kEx1), opt), BudgetExceeded);
}
