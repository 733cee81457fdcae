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

// Brute-force properness for a KNOWN factorization: every factor must divide
// one of its q-dilations with (a, b) in [-6, 6]^2 \ {0}.
bool brute_factor_proper(const BiPoly& p) {
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) {
            if (a == 0 && b == 0) continue;
            if (divides_bipoly(p, p.sigma(a, b))) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("sigma_shift") {
    CHECK(sigma_shift(parse_bipoly("x+y+1"), 0, 1) == parse_bipoly("x+q*y+1"));
    BiPoly f = parse_bipoly("(x+y+1)*(1-x*y)");
    CHECK(sigma_shift(f, 0, 0) == f);
    CHECK(sigma_shift(parse_bipoly("x*y"), 1, -1) == parse_bipoly("x*y"));

    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        BiPoly g = testgen::rnd_proper_product(rng, 2);
        BiPoly h = testgen::rnd_noncollinear_factor(rng);
        long a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
        CHECK(sigma_shift(g * h, a, b) == sigma_shift(g, a, b) * sigma_shift(h, a, b));
    }
}

TEST_CASE("newton_polygon") {
    NewtonPolygon np = newton_polygon(parse_bipoly("x+q*y+1"));
    CHECK(np.vertices.size() == 3);
    CHECK(np.edge_directions.count({1, 0}) == 1);
    CHECK(np.edge_directions.count({0, 1}) == 1);
    CHECK(np.edge_directions.count({-1, 1}) == 1);

    NewtonPolygon mono = newton_polygon(parse_bipoly("x^3*y^2"));
    CHECK(mono.edge_directions.empty());

    NewtonPolygon seg = newton_polygon(parse_bipoly("1-x*y"));
    CHECK(seg.edge_directions.size() == 1);
    CHECK(seg.edge_directions.count({1, 1}) == 1);

    CHECK_THROWS_AS(newton_polygon(BiPoly()), ZeroInput);
}

TEST_CASE("invariant_part") {
    BiPoly f = parse_bipoly("(1-x*y)*(x+y+1)");
    BiPoly p = invariant_part(f, 1, 1);
    CHECK(equal_up_to_unit(p, parse_bipoly("1-x*y")));
    // sigma_{1,-1} fixes the collinear factor exactly.
    BiPoly xy = parse_bipoly("1-x*y");
    CHECK(sigma_shift(xy, 1, -1) == xy);
    CHECK(divides_bipoly(p, f));

    CHECK(invariant_part(parse_bipoly("x+q*y+1"), 1, 1).is_constant());
    CHECK(invariant_part(parse_bipoly("x+q*y+1"), 0, 1).is_constant());
    CHECK(invariant_part(parse_bipoly("x+q*y+1"), 1, 0).is_constant());
}

TEST_CASE("is_qproper_poly on the paper's examples") {
    CHECK(is_qproper_poly(parse_bipoly("x+1")).is_proper);

    ProperVerdict v2 = is_qproper_poly(parse_bipoly("x+q*y+1"));
    CHECK(!v2.is_proper);
    REQUIRE(v2.witness.has_value());
    CHECK(equal_up_to_unit(*v2.witness, parse_bipoly("x+q*y+1")));

    ProperVerdict v3 = is_qproper_poly(parse_bipoly("(x+y+1)*(x+q*y+1)"));
    CHECK(!v3.is_proper);

    CHECK(is_qproper_poly(parse_bipoly("(1-x*y)*(1-q*x*y)*x^3")).is_proper);
    CHECK_THROWS_AS(is_qproper_poly(BiPoly()), ZeroInput);
}

TEST_CASE("constructive completeness and soundness on random products") {
    Rng rng(4711);
    for (int i = 0; i < 25; ++i) {
        BiPoly f = testgen::rnd_proper_product(rng, 3);
        ProperVerdict pv = is_qproper_poly(f);
        CHECK(pv.is_proper);

        BiPoly poison = testgen::rnd_noncollinear_factor(rng);
        ProperVerdict bad = is_qproper_poly(f * poison);
        CHECK(!bad.is_proper);
        REQUIRE(bad.witness.has_value());
        CHECK(gcd_bipoly(*bad.witness, poison) == canonical_bipoly(poison));
    }
}

TEST_CASE("agreement with brute force on small known factorizations") {
    Rng rng(1234);
    for (int i = 0; i < 20; ++i) {
        // Build from at most 2 known factors of total degree <= 3.
        std::vector<BiPoly> factors;
        long nf = rng.uniform(1, 2);
        for (long l = 0; l < nf; ++l) {
            if (rng.coin()) {
                long w = rng.uniform(-2, 2);
                factors.push_back(BiPoly(1) -
                                  BiPoly::monomial(QRat::q_power(w), 1, 1));  // 1 - q^w xy
            } else {
                factors.push_back(testgen::rnd_noncollinear_factor(rng));
            }
        }
        BiPoly f(1);
        bool all_proper = true;
        for (const auto& p : factors) {
            f = f * p;
            if (!brute_factor_proper(p)) all_proper = false;
        }
        CHECK(is_qproper_poly(f).is_proper == all_proper);
    }
}

TEST_CASE("invariant_part stabilizes quickly") {
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        BiPoly f = testgen::rnd_proper_product(rng, 2) * testgen::rnd_noncollinear_factor(rng);
        for (const auto& [a, b] : newton_polygon(f).edge_directions) {
            BiPoly part = invariant_part(f, a, b);  // throws if not stabilized
            CHECK(divides_bipoly(part, f));
        }
    }
}

TEST_CASE("qnr_bivariate") {
    YRat R1 = parse_yrat(
        "q*(1+q*x+q^3*y)*(x+y+1)/((x+q^2*y+1)*(1+q*x+q^2*y)*(1-q^2*y))");
    QNRBivariate nr = qnr_bivariate(R1);
    CHECK(equal_up_to_unit(nr.r, parse_bipoly("q")));
    CHECK(equal_up_to_unit(nr.s, parse_bipoly("1-q^2*y")));
    CHECK(equal_up_to_unit(nr.u, parse_bipoly("1+q*x+q^2*y")));
    CHECK(equal_up_to_unit(nr.v, parse_bipoly("(x+y+1)*(x+q*y+1)")));

    QNRBivariate triv = qnr_bivariate(YRat::one());
    CHECK(equal_up_to_unit(triv.r, BiPoly(1)));
    CHECK(equal_up_to_unit(triv.s, BiPoly(1)));
    CHECK(equal_up_to_unit(triv.u, BiPoly(1)));
    CHECK(equal_up_to_unit(triv.v, BiPoly(1)));
    CHECK_THROWS_AS(qnr_bivariate(YRat::zero()), ZeroInput);
}
