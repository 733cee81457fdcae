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

TEST_CASE("rational and Q(q) field arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(QRat::q() * QRat::q_power(2) == QRat::q_power(3));

    QRat e = parse_qrat("(q-1)/(q+1)");
    CHECK(e.inv() == parse_qrat("(q+1)/(q-1)"));
    CHECK_THROWS_AS(QRat().inv(), DivisionByZero);
    CHECK_THROWS_AS(e / QRat(), DivisionByZero);

    QRat sum = parse_qrat("(q-1)/(q+1)") + parse_qrat("2/(q+1)");
    CHECK(sum == QRat(1));  // canonical reduction
}

TEST_CASE("qpower_of recognizes exact powers of q") {
    CHECK(qpower_of(QRat::q_power(3)) == 3);
    CHECK(qpower_of(QRat(1)) == 0);
    CHECK(qpower_of(parse_qrat("1/q^2")) == -2);
    CHECK(!qpower_of(parse_qrat("1+q")).has_value());
    CHECK_THROWS_AS(qpower_of(QRat()), ZeroInput);

    for (long m = -20; m <= 20; ++m) CHECK(qpower_of(QRat::q_power(m)) == m);

    Rng rng(12345);
    for (int i = 0; i < 50; ++i) {
        QRat c = testgen::rnd_qconst(rng);
        if (c == QRat(1)) continue;
        if (c.as_q_power().has_value()) continue;  // c happened to be a pure power
        long m = rng.uniform(-10, 10);
        CHECK(!qpower_of(c * QRat::q_power(m)).has_value());
    }
}

TEST_CASE("poly_gcd over Q(q)") {
    XPoly f = parse_xpoly("(x-1)*(x-q)");
    XPoly g = parse_xpoly("(x-q)*(x-q^2)");
    XPoly d = poly_gcd(f, g);
    CHECK(d == parse_xpoly("x-q"));
    // verify by exact division of both inputs
    CHECK(divexact_field(f, d) * d == f);
    CHECK(divexact_field(g, d) * d == g);

    CHECK(poly_gcd(f, XPoly()) == monic(f));
    CHECK(poly_gcd(XPoly(), XPoly()).is_zero());
    CHECK(poly_gcd(parse_xpoly("1+q*x"), parse_xpoly("1+q^2*x")) == XPoly::one());
}

TEST_CASE("poly_gcd cofactors are coprime on random inputs") {
    Rng rng(777);
    for (int i = 0; i < 30; ++i) {
        XPoly f = testgen::rnd_product_q(rng, 3);
        XPoly g = testgen::rnd_product_q(rng, 3);
        if (f.is_zero() || g.is_zero()) continue;
        XPoly d = poly_gcd(f, g);
        XPoly cf = divexact_field(f, d);
        XPoly cg = divexact_field(g, d);
        CHECK(cf * d == f);
        CHECK(cg * d == g);
        CHECK(poly_gcd(cf, cg).degree() == 0);
    }
}

TEST_CASE("resultant convention: f rows first") {
    // Res(x-1, x-q) with our convention equals 1-q.
    XPoly f = parse_xpoly("x-1");
    XPoly g = parse_xpoly("x-q");
    CHECK(poly_resultant(f, g) == parse_qrat("1-q"));

    // Res(x-a, g) = g(a), the standard identity for a monic linear first row.
    XPoly lin = parse_xpoly("x-q");
    XPoly quad = parse_xpoly("x^2+1");
    CHECK(poly_resultant(lin, quad) == parse_qrat("q^2+1"));

    XPoly ff = parse_xpoly("x^2+q*x+1");
    CHECK(poly_resultant(ff, ff).is_zero());
    CHECK_THROWS_AS(poly_resultant(XPoly(), f), ZeroInput);
}

TEST_CASE("partial_split") {
    // U = 1/(y(y-q)) with st = y, u2 = y-q gives a = 1/q, b = -1/q.
    XRat U(XPoly::one(), parse_xpoly("x*(x-q)"));
    auto [a, b] = partial_split(U, parse_xpoly("x"), parse_xpoly("x-q"));
    CHECK(a == XPoly(parse_qrat("1/q")));
    CHECK(b == XPoly(parse_qrat("-1/q")));

    auto [a0, b0] = partial_split(XRat(), parse_xpoly("x"), parse_xpoly("x-q"));
    CHECK(a0.is_zero());
    CHECK(b0.is_zero());

    // Polynomial part goes to the a side.
    auto [a1, b1] = partial_split(XRat(parse_xpoly("x")), parse_xpoly("x+1"), XPoly::one());
    CHECK(a1 == parse_xpoly("x"));
    CHECK(b1.is_zero());

    CHECK_THROWS_AS(partial_split(U, parse_xpoly("x-q"), parse_xpoly("x-q")), NotCoprime);
    XRat bad(XPoly::one(), parse_xpoly("(x-q^2)*(x-q^3)"));
    CHECK_THROWS_AS(partial_split(bad, parse_xpoly("x"), parse_xpoly("x-q")),
                    DenominatorMismatch);
}

TEST_CASE("partial_split recombines on random inputs") {
    Rng rng(4242);
    for (int i = 0; i < 25; ++i) {
        XPoly st = testgen::rnd_product_q(rng, 2);
        XPoly u2 = testgen::rnd_product_q(rng, 2);
        if (st.is_zero() || u2.is_zero()) continue;
        st = monic(st);
        u2 = monic(u2);
        if (poly_gcd(st, u2).degree() > 0) continue;
        XPoly num = testgen::rnd_product_q(rng, 2);
        XRat U(num, st * u2);
        auto [a, b] = partial_split(U, st, u2);
        XRat recon = XRat(a, u2) + XRat(b, st);
        CHECK(recon == U);
        if (!b.is_zero()) CHECK(b.degree() < st.degree());
    }
}

TEST_CASE("exact arithmetic laws on random triples") {
    Rng rng(31337);
    for (int i = 0; i < 40; ++i) {
        QRat a = testgen::rnd_qconst(rng);
        QRat b = testgen::rnd_qconst(rng);
        QRat c = testgen::rnd_qconst(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) / b == a);
    }
    for (int i = 0; i < 15; ++i) {
        YRat a = testgen::rnd_ratfun_x(rng, 2);
        YRat b = testgen::rnd_ratfun_x(rng, 2);
        YRat c = testgen::rnd_ratfun_x(rng, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}
