#include <doctest.h>

#include <cmath>

#include "sag/error.hpp"
#include "sag/hypgeom.hpp"

using namespace sag;

namespace {
QPoly zp(std::initializer_list<long> coeffs) {
    std::vector<Q> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}
Isometry<Q> qiso(long a, long b, long c, long d) {
    return {Mat2<Q>{Q(a), Q(b), Q(c), Q(d)}, false};
}
} // namespace

TEST_CASE("classification") {
    CHECK(classify(qiso(1, 1, 0, 1)) == IsoClass::parabolic);
    Isometry<Q> diag{Mat2<Q>{Q(2), Q(0), Q(0), Q(1, 2)}, false};
    CHECK(classify(diag) == IsoClass::hyperbolic);
    CHECK(classify(qiso(0, 1, -1, 0)) == IsoClass::elliptic);
    CHECK_THROWS_AS(classify(qiso(1, 0, 0, 1)), error);
    CHECK_THROWS_AS(classify(qiso(-1, 0, 0, -1)), error);
}

TEST_CASE("translation length") {
    // Tr = 6: l = 2 acosh(3) = 3.525494348078172 (direct acosh evaluation)
    Isometry<Q> g{Mat2<Q>{Q(6), Q(35), Q(1), Q(6)}, false};
    REQUIRE(g.m.det() == 1);
    RInterval l = translation_length(g);
    CHECK(l.contains(3.525494348078172));
    CHECK(l.width_d() < 1e-25);
    // Tr = 2cosh(1): l = 2 exactly; use the trace-level entry point
    RInterval c1 = RInterval(Q(1), 160).cosh() * RInterval::exact_ui(2, 160);
    RInterval l2 = translation_length_from_trace(c1);
    CHECK(l2.contains(2.0));
    CHECK(l2.width_d() < 1e-25);
    CHECK_THROWS_AS(translation_length(qiso(0, 1, -1, 0)), error);
}

TEST_CASE("half-turn product trace") {
    // d(i, 2i) = log 2, Tr = 2cosh(log 2) = 5/2, exact rational arithmetic
    CHECK(halfturn_product_trace(Q(0), Q(1), Q(0), Q(2)) == Q(-5, 2)); // sign: tr, Tr = |tr|
    CHECK_THROWS_AS(halfturn_product_trace(Q(0), Q(1), Q(0), Q(1)), error);
    // d(i, e*i) = 1, Tr = 2cosh(1) = 3.0861612696304874
    RInterval e = RInterval(Q(1), 160).exp();
    RInterval tr = halfturn_product_trace(RInterval(Q(0), 160), RInterval(Q(1), 160),
                                          RInterval(Q(0), 160), e);
    CHECK(tr.abs().contains(3.0861612696304874));
    CHECK(tr.width_d() < 1e-20);
}

TEST_CASE("trirectangle solution at u = 1") {
    auto K = NumberField::rationals();
    NfElem u = NfElem::constant(K, 1);
    PolygonSolution sol = solve_trirectangle(u);
    CHECK(sol.sinh_b.rational_value() == Q(1, 2));
    CHECK(sol.cos_phi == Q(1, 2));
    // 2cosh b = sqrt5, cosh a = sqrt2, 2cosh d = sqrt10
    CHECK(sol.two_cosh_b.number_minimal_poly() == zp({-5, 0, 1}));
    CHECK(sol.cosh_a.number_minimal_poly() == zp({-2, 0, 1}));
    CHECK(sol.two_cosh_d.number_minimal_poly() == zp({-10, 0, 1}));
    // Pythagoras holds exactly in the tower: (2cosh d) = cosh a * (2 cosh b)
    CHECK(sol.two_cosh_d == sol.cosh_a * sol.two_cosh_b);
    // monotonicity of sinh b = 1/(2u) at u = 10, 100
    NfElem u10 = NfElem::constant(K, 10), u100 = NfElem::constant(K, 100);
    CHECK(solve_trirectangle(u10).sinh_b.rational_value() >
          solve_trirectangle(u100).sinh_b.rational_value());
    CHECK_THROWS_AS(solve_trirectangle(NfElem::constant(K, -1)), error);
}

TEST_CASE("trirectangle group certification at u = 1") {
    auto K = NumberField::rationals();
    TrirectangleGroup g = build_trirectangle_group(NfElem::constant(K, 1));
    // order-2 rotations have trace 0, the order-3 rotation has trace 1
    for (int i = 0; i < 3; ++i) {
        TowerElem tr = g.S[i].m.tr();
        CHECK(tr.is_zero());
    }
    TowerElem t4 = g.S[3].m.tr();
    CHECK((t4 == TowerElem::constant(g.ctx, 1) || t4 == TowerElem::constant(g.ctx, -1)));
    // vertex distance traces: sqrt8, sqrt5, sqrt10
    CHECK(g.tr_S1S2.number_minimal_poly() == zp({-8, 0, 1}));
    CHECK(g.tr_S2S3.number_minimal_poly() == zp({-5, 0, 1}));
    CHECK(g.tr_S1S3.number_minimal_poly() == zp({-10, 0, 1}));
}

TEST_CASE("conjugation invariance of traces") {
    auto K = NumberField::rationals();
    TrirectangleGroup g = build_trirectangle_group(NfElem::constant(K, 1));
    TIso a = g.S[0] * g.S[1] * g.S[2];
    TIso h = g.S[1] * g.S[3];
    TIso conj = h * a * inverse(h);
    CHECK(conj.m.tr() == a.m.tr());
}

TEST_CASE("hexagon group certification") {
    auto K = NumberField::rationals();
    SUBCASE("u = 1: Tr(C1C2) = 6") {
        HexagonGroup h = build_hexagon_group(NfElem::constant(K, 1));
        CHECK(h.tr_c1c2.rational_value() == 6);
        for (int j = 0; j < 6; ++j) CHECK_FALSE(h.C[j].anti);
    }
    SUBCASE("u = 1+sqrt2: Tr(C1C2) = 14+8sqrt2") {
        auto K2 = NumberField::make(zp({-2, 0, 1}));
        NfElem u = NfElem::constant(K2, 1) + NfElem::gen(K2);
        HexagonGroup h = build_hexagon_group(u);
        NfElem expect = NfElem(K2, {Q(14), Q(8)});
        CHECK(h.tr_c1c2 == expect);
        QInterval iv = h.tr_c1c2.embed_distinguished(Q(1, 1 << 30));
        CHECK(iv.lo.get_d() <= 25.31370849898476);
        CHECK(25.31370849898476 <= iv.hi.get_d());
    }
}

TEST_CASE("hexagon opposite side formula") {
    RInterval one(Q(1), 160);
    RInterval b1 = hexagon_opposite_side(one, one, one);
    // cosh b1 = (cosh1 + cosh^2 1)/sinh^2 1 = 2.841347188415585 (formula oracle),
    // b1 = acosh(...) = 1.7049128323580138
    CHECK(b1.contains(1.7049128323580138));
    CHECK(b1.width_d() < 1e-20);
    // symmetry in a2, a3
    RInterval two(Q(2), 160);
    RInterval x = hexagon_opposite_side(one, one, two), y = hexagon_opposite_side(one, two, one);
    CHECK(x.contains(y.mid_d()));
    // monotone limit: larger a2 = a3 shrink b1 toward 0
    RInterval ten(Q(10), 160);
    CHECK(hexagon_opposite_side(one, ten, ten).hi_d() < b1.lo_d());
    CHECK_THROWS_AS(hexagon_opposite_side(RInterval(Q(0), 160), one, one), error);
}

TEST_CASE("displacement in products of planes") {
    mpfr_prec_t prec = 160;
    auto cosh1x2 = [&](mpfr_prec_t p) { return RInterval(Q(1), p).cosh() * RInterval::exact_ui(2, p); };
    // r=2, both factors tr = 2cosh(1): l = 2 sqrt(2)
    RInterval l = displacement_product({{1, cosh1x2}, {1, cosh1x2}}, prec);
    CHECK(l.contains(2.8284271247461903));
    // r=1 reduces to translation length: tr = 6 -> 2 acosh 3
    RInterval l1 = displacement_product({{1, [](mpfr_prec_t p) { return RInterval(Q(6), p); }}}, prec);
    CHECK(l1.contains(3.525494348078172));
    // elliptic factor contributes nothing
    RInterval l2 = displacement_product(
        {{1, cosh1x2}, {-1, [](mpfr_prec_t p) { return RInterval(Q(1), p); }}}, prec);
    CHECK(l2.contains(2.0));
    CHECK(l2.width_d() < 1e-20);
    // permutation invariance
    RInterval l3 = displacement_product(
        {{-1, [](mpfr_prec_t p) { return RInterval(Q(1), p); }}, {1, cosh1x2}}, prec);
    CHECK(l3.contains(2.0));
    CHECK_THROWS_AS(displacement_product({{0, cosh1x2}}, prec), error);
    CHECK_THROWS_AS(
        displacement_product({{-1, [](mpfr_prec_t p) { return RInterval(Q(1), p); }}}, prec), error);
}

TEST_CASE("orbifold area") {
    CHECK(area_pi_coefficient(0, {2, 2, 2, 2, 2, 2}, 0) == 2);
    CHECK(area_pi_coefficient(2, {}, 0) == 4);
    CHECK(area_pi_coefficient(0, {2, 3}, 1) == Q(1, 3)); // PSL(2,Z): pi/3
}
