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

YPoly ypoly(const std::string& s) { return bipoly_to_ypoly(parse_bipoly(s)); }

// Brute-force q-dispersion over h in [0, H].
template <class F>
long brute_qdis(const Poly<F>& u, const Poly<F>& v, long H) {
    auto [su, u1] = strip_var_power(u);
    auto [sv, v1] = strip_var_power(v);
    (void)su;
    (void)sv;
    if (u1.degree() == 0 || v1.degree() == 0) return -1;
    long best = -1;
    for (long h = 0; h <= H; ++h)
        if (poly_gcd(u1, qshift(v1, h)).degree() > 0) best = h;
    return best;
}

}  // namespace

TEST_CASE("qshift substitutes var -> q^h var") {
    CHECK(qshift(ypoly("x+y+1"), 1) == ypoly("x+q*y+1"));
    YPoly f = ypoly("(x+y+1)*(x+q*y+1)");
    CHECK(qshift(f, 0) == f);
    CHECK(qshift(qshift(f, 3), -3) == f);

    XPoly p = parse_xpoly("1-q^2*x");
    CHECK(qshift(p, -1) == parse_xpoly("1-q*x"));
}

TEST_CASE("qshift is a ring automorphism on random inputs") {
    Rng rng(99);
    for (int i = 0; i < 25; ++i) {
        XPoly f = testgen::rnd_product_q(rng, 2);
        XPoly g = testgen::rnd_product_q(rng, 2);
        long h = rng.uniform(-4, 4);
        CHECK(qshift(f * g, h) == qshift(f, h) * qshift(g, h));
        CHECK(qshift(f + g, h) == qshift(f, h) + qshift(g, h));
    }
}

TEST_CASE("qdis examples") {
    CHECK(qdis(parse_xpoly("x-1"), parse_xpoly("x-q")) == 1);
    CHECK(qdis(parse_xpoly("x-q"), parse_xpoly("x-1")) == -1);
    YPoly f = ypoly("(x+y+1)*(x+q*y+1)");
    CHECK(qdis(f, f) == 1);
    CHECK(qdis(parse_xpoly("x^3"), parse_xpoly("x^5")) == -1);
    CHECK_THROWS_AS(qdis(XPoly(), parse_xpoly("x")), ZeroInput);
}

TEST_CASE("qdis_candidates soundness examples") {
    auto has = [](const std::vector<long>& v, long x) {
        for (long e : v)
            if (e == x) return true;
        return false;
    };
    CHECK(has(qdis_candidates(parse_xpoly("x-1"), parse_xpoly("x-q")), 1));
    CHECK(has(qdis_candidates(parse_xpoly("x+1"), parse_xpoly("x+1")), 0));
    CHECK(has(qdis_candidates(parse_xpoly("x+1"), parse_xpoly("x+q^5")), 5));
}

TEST_CASE("qdis matches brute force on random shifted-factor products") {
    Rng rng(555);
    for (int i = 0; i < 30; ++i) {
        XPoly u = testgen::rnd_product_q(rng, 3);
        XPoly v = testgen::rnd_product_q(rng, 3);
        if (u.is_zero() || v.is_zero()) continue;
        CHECK(qdis(u, v) == brute_qdis(u, v, 12));
    }
    for (int i = 0; i < 12; ++i) {
        YPoly u = testgen::rnd_product_x(rng, 2);
        YPoly v = testgen::rnd_product_x(rng, 2);
        if (u.is_zero() || v.is_zero()) continue;
        CHECK(qdis(u, v) == brute_qdis(u, v, 10));
    }
}

TEST_CASE("self-dispersion is nonnegative except for monomials") {
    Rng rng(808);
    for (int i = 0; i < 25; ++i) {
        XPoly u = testgen::rnd_product_q(rng, 3);
        if (u.is_zero()) continue;
        auto [s, u1] = strip_var_power(u);
        (void)s;
        if (u1.degree() == 0)
            CHECK(qdis(u, u) == -1);
        else
            CHECK(qdis(u, u) >= 0);
    }
}

TEST_CASE("is_eps_reduced") {
    // Example 1's q-NR has r = q, s = 1-q^2 y over ground field Q(q)(x).
    CHECK(is_eps_reduced(ypoly("q"), ypoly("1-q^2*y")));
    CHECK(!is_eps_reduced(parse_xpoly("x-1"), parse_xpoly("x-q")));
    CHECK(!is_eps_reduced(parse_xpoly("x"), parse_xpoly("x")));

    Rng rng(606);
    for (int i = 0; i < 20; ++i) {
        XPoly r = testgen::rnd_product_q(rng, 2);
        XPoly s = testgen::rnd_product_q(rng, 2);
        if (r.is_zero() || s.is_zero()) continue;
        if (!is_eps_reduced(r, s)) continue;
        for (long h = -10; h <= 10; ++h)
            CHECK(poly_gcd(r, qshift(s, h)).degree() == 0);
    }
}

TEST_CASE("is_eps_free") {
    CHECK(is_eps_free(ypoly("(q^2-1)*(x+1)")));  // constant in y
    CHECK(!is_eps_free(ypoly("(x+y+1)*(x+q*y+1)")));
    CHECK(is_eps_free(parse_xpoly("x^4")));
}
