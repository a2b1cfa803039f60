#include <doctest.h>

#include "sag/tower.hpp"

using namespace sag;

namespace {
QPoly zp(std::initializer_list<long> coeffs) {
    std::vector<Q> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}
} // namespace

TEST_CASE("tower arithmetic over Q, u = 1") {
    auto K = NumberField::rationals();
    auto ctx = TowerCtx::make(NfElem::constant(K, 1)); // s^2 = 2, t^2 = 5
    TowerElem s = TowerElem::s(ctx), t = TowerElem::t(ctx);
    CHECK(s * s == TowerElem::constant(ctx, 2));
    CHECK(t * t == TowerElem::constant(ctx, 5));
    CHECK((s * t) * (s * t) == TowerElem::constant(ctx, 10));
    TowerElem x = s + t * Q(2);
    CHECK(x * x.inverse() == TowerElem::constant(ctx, 1));
    // sqrt(2): enclosure
    RInterval e = s.enclosure(128);
    CHECK(e.contains(1.4142135623730951));
    CHECK(e.width_d() < 1e-25);
    CHECK(s.sign() == 1);
    CHECK((s - t).sign() == -1);
}

TEST_CASE("tower minimal polynomials") {
    auto K = NumberField::rationals();
    auto ctx = TowerCtx::make(NfElem::constant(K, 1));
    TowerElem s = TowerElem::s(ctx), t = TowerElem::t(ctx);
    CHECK(s.number_minimal_poly() == zp({-2, 0, 1}));
    CHECK(t.number_minimal_poly() == zp({-5, 0, 1}));
    CHECK((s * t).number_minimal_poly() == zp({-10, 0, 1}));
    // s + t has degree 4 over Q: x^4 - 14x^2 + 9
    CHECK((s + t).number_minimal_poly() == zp({9, 0, -14, 0, 1}));
    CHECK(is_algebraic_integer(s));
    CHECK(is_totally_real(s + t));
    // 1/2 * s is not integral
    CHECK_FALSE(is_algebraic_integer(s * Q(1, 2)));
    // rational constant
    CHECK(TowerElem::constant(ctx, Q(7)).number_minimal_poly() == zp({-7, 1}));
}

TEST_CASE("tower over the cubic field of 2cos(2pi/7)") {
    auto K = NumberField::make(zp({-1, -2, 1, 1}));
    NfElem u = NfElem::gen(K);
    auto ctx = TowerCtx::make(u);
    TowerElem s2 = TowerElem::s(ctx) * Q(2); // 2 cosh a
    TowerElem t = TowerElem::t(ctx);         // 2 cosh b
    TowerElem st = TowerElem::s(ctx) * TowerElem::t(ctx);
    // frozen minimal polynomials (computed independently by expanding the
    // sqrt tower symbolically):
    CHECK(s2.number_minimal_poly() == zp({-832, 0, 304, 0, -32, 0, 1}));
    CHECK(t.number_minimal_poly() == zp({-181, 0, 101, 0, -18, 0, 1}));
    CHECK(st.number_minimal_poly() == zp({-2353, 0, 544, 0, -41, 0, 1}));
    CHECK(is_algebraic_integer(s2));
    CHECK(is_totally_real(s2));
    CHECK(is_algebraic_integer(t));
    CHECK(is_totally_real(t));
    CHECK(is_algebraic_integer(st));
    CHECK(is_totally_real(st));
    CHECK(s2.enclosure(160).contains(3.1968472794848184));
    CHECK(t.enclosure(160).contains(2.1547863309636504));
    CHECK(st.enclosure(160).contains(3.44426141000611));
}
