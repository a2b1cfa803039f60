#include <doctest.h>

#include <cmath>
#include <random>

#include "sag/error.hpp"
#include "sag/numfield.hpp"

using namespace sag;

namespace {
QPoly zp(std::initializer_list<long> coeffs) {
    std::vector<Q> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}
NfRef sqrt2_field() { return NumberField::make(zp({-2, 0, 1})); }
NfRef cos7_field() { return NumberField::make(zp({-1, -2, 1, 1})); }

double mid(const QInterval& iv) { return (iv.lo.get_d() + iv.hi.get_d()) / 2; }
} // namespace

TEST_CASE("make_field") {
    auto K = sqrt2_field();
    CHECK(K->degree() == 2);
    CHECK(mid(K->root(0, Q(1, 1 << 34))) == doctest::Approx(-1.41421356).epsilon(1e-6));
    CHECK(mid(K->root(1, Q(1, 1 << 34))) == doctest::Approx(1.41421356).epsilon(1e-6));

    auto K3 = cos7_field();
    CHECK(K3->degree() == 3);
    CHECK(mid(K3->root(0, Q(1, 1 << 34))) == doctest::Approx(-1.8019377358).epsilon(1e-8));
    CHECK(mid(K3->root(1, Q(1, 1 << 34))) == doctest::Approx(-0.4450418679).epsilon(1e-8));
    CHECK(mid(K3->root(2, Q(1, 1 << 34))) == doctest::Approx(1.2469796037).epsilon(1e-8));
    CHECK(K3->distinguished() == 2); // largest root = 2cos(2pi/7)

    CHECK_THROWS_AS(NumberField::make(zp({1, 0, 1})), error);    // NotTotallyReal
    CHECK_THROWS_AS(NumberField::make(zp({-1, 0, 1})), error);   // reducible
    CHECK_THROWS_WITH_AS(NumberField::make(QPoly({Q(1, 2), Q(1)})), doctest::Contains("NotMonic"),
                         error);
}

TEST_CASE("algebraic integers") {
    auto K = sqrt2_field();
    NfElem one_plus = NfElem::constant(K, 1) + NfElem::gen(K); // 1+sqrt2
    CHECK(is_algebraic_integer(one_plus));
    CHECK(one_plus.minimal_poly() == zp({-1, -2, 1})); // x^2-2x-1 (resultant oracle)
    NfElem half = NfElem::constant(NumberField::rationals(), Q(1, 2));
    CHECK_FALSE(is_algebraic_integer(half));
    CHECK(is_algebraic_integer(NfElem::gen(cos7_field())));
}

TEST_CASE("totally positive") {
    auto K = sqrt2_field();
    NfElem r2 = NfElem::gen(K);
    NfElem a = NfElem::constant(K, 3) + r2 * Q(2); // 3+2sqrt2
    CHECK(is_totally_positive(a));
    CHECK_FALSE(is_totally_positive(NfElem::constant(K, 1) + r2)); // conjugate negative
    CHECK(is_totally_positive(NfElem::constant(K, 1)));
}

TEST_CASE("sqrt of totally positive integers") {
    auto K = sqrt2_field();
    NfElem a = NfElem::constant(K, 3) + NfElem::gen(K) * Q(2);
    NfElem r = sqrt_totally_positive(a);
    CHECK(r.minimal_poly() == zp({-1, -2, 1})); // 1+sqrt2, factor of X^4-6X^2+1
    CHECK(mid(r.embed_distinguished(Q(1, 1 << 24))) == doctest::Approx(2.41421356).epsilon(1e-7));
    // square equals the original exactly: same minimal polynomial and matching image
    NfElem r2 = r * r;
    CHECK(r2.minimal_poly() == a.minimal_poly());
    CHECK(mid(r2.embed_distinguished(Q(1, 1 << 24))) ==
          doctest::Approx(mid(a.embed_distinguished(Q(1, 1 << 24)))).epsilon(1e-9));

    NfElem four = NfElem::constant(NumberField::rationals(), 4);
    NfElem two = sqrt_totally_positive(four);
    CHECK(two.is_rational());
    CHECK(two.rational_value() == 2);

    CHECK_THROWS_AS(sqrt_totally_positive(NfElem::constant(K, 1) + NfElem::gen(K)), error);
}

TEST_CASE("heights of numbers") {
    // H(4) = 4 over Q
    Height h4 = height_rational(Q(4));
    CHECK(h4.value.contains(4.0));
    CHECK(h4.value.width_d() < 1e-8);
    // H(1/2) = 2: archimedean 1, finite place at 2 contributes 2
    Height hh = height_rational(Q(1, 2));
    CHECK(hh.value.contains(2.0));
    // H(1+sqrt2) = (1+sqrt2)^(1/2), unit so no finite part
    auto K = sqrt2_field();
    Height hu = height_number(NfElem::constant(K, 1) + NfElem::gen(K));
    CHECK(hu.value.contains(1.5537739740300374));
    CHECK(hu.value.width_d() / hu.value.lo_d() <= std::pow(2.0, -30));
    // absoluteness: H(2 in Q) == H(2 in Q(sqrt2)) == 2
    Height ha = height_number(NfElem::constant(K, 2));
    CHECK(ha.value.contains(2.0));
    CHECK(ha.value.width_d() < 1e-8);
}

TEST_CASE("heights of matrices") {
    auto Qf = NumberField::rationals();
    auto c = [&](const Q& v) { return NfElem::constant(Qf, v); };
    Height hid = height_matrix(c(1), c(0), c(0), c(1));
    CHECK(hid.value.contains(1.0));
    CHECK(hid.value.width_d() < 1e-9);
    // [[2,0],[0,1/2]]: arch max 2, finite place at 2 gives max 2 -> H = 4
    Height hdiag = height_matrix(c(2), c(0), c(0), c(Q(1, 2)));
    CHECK(hdiag.value.contains(4.0));
    Height hpar = height_matrix(c(1), c(1), c(0), c(1));
    CHECK(hpar.value.contains(1.0));
    CHECK_THROWS_AS(height_matrix(c(2), c(0), c(0), c(1)), error); // det != 1
}

TEST_CASE("height inequalities on random samples") {
    // H(a+b) <= 4 H(a) H(b), H(ab) <= H(a)H(b), interval-certified on Q(sqrt2)
    auto K = sqrt2_field();
    std::mt19937_64 rng(12345);
    auto rnd = [&]() {
        std::uniform_int_distribution<long> num(-8, 8), den(1, 6);
        return NfElem(K, {Q(num(rng), den(rng)), Q(num(rng), den(rng))});
    };
    int tested = 0;
    for (int i = 0; i < 60 && tested < 40; ++i) {
        NfElem a = rnd(), b = rnd();
        if (a.is_zero() || b.is_zero() || (a + b).is_zero()) continue;
        ++tested;
        Height ha = height_number(a), hb = height_number(b);
        Height hs = height_number(a + b), hp = height_number(a * b);
        CHECK(hs.value.lo_d() <= 4 * ha.value.hi_d() * hb.value.hi_d() * (1 + 1e-12));
        CHECK(hp.value.lo_d() <= ha.value.hi_d() * hb.value.hi_d() * (1 + 1e-12));
    }
    CHECK(tested >= 30);
}

TEST_CASE("prime ideals") {
    auto K = sqrt2_field();
    auto p7 = prime_ideal_above(K, Z(7));
    REQUIRE(p7.size() == 2);
    CHECK(p7[0].norm == 7);
    CHECK(p7[1].norm == 7);
    auto p5 = prime_ideal_above(K, Z(5));
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].norm == 25);
    auto q3 = prime_ideal_above(NumberField::rationals(), Z(3));
    REQUIRE(q3.size() == 1);
    CHECK(q3[0].norm == 3);
    CHECK_THROWS_AS(prime_ideal_above(K, Z(6)), error);
    // ramified prime 2 in Q(sqrt2): single ideal of norm 2, ord(beta) = 1, ord(2) = 2
    auto p2 = prime_ideal_above(K, Z(2));
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].norm == 2);
    CHECK(p2[0].ramification == 2);
    CHECK(ord_p(NfElem::gen(K), p2[0]) == 1);
    CHECK(ord_p(NfElem::constant(K, 2), p2[0]) == 2);
    // split prime: ord of (3+sqrt2) at the two ideals above 7: N(3+sqrt2)=7
    NfElem a = NfElem::constant(K, 3) + NfElem::gen(K);
    CHECK(ord_p(a, p7[0]) + ord_p(a, p7[1]) == 1);
}

TEST_CASE("product formula on random elements") {
    // prod_v v(a) = 1, i.e. |N(a)| equals the product of N(P)^{ord_P} over
    // primes dividing numerator and denominator (checked through ord_p)
    for (auto K : {NumberField::rationals(), sqrt2_field()}) {
        std::mt19937_64 rng(777);
        std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
        int tested = 0;
        for (int i = 0; i < 120 && tested < 50; ++i) {
            std::vector<Q> c(K->degree());
            for (auto& q : c) q = Q(num(rng), den(rng));
            NfElem a(K, c);
            if (a.is_zero()) continue;
            Q n = a.norm();
            Z nn = abs(n.get_num()) * n.get_den(); // primes involved
            Q finite(1);
            bool supported = true;
            try {
                std::vector<Z> ps = factor_integer(nn);
                ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
                for (const Z& p : ps)
                    for (const auto& P : prime_ideal_above(K, p))
                        finite *= qpow(Q(P.norm), -ord_p(a, P));
            } catch (const error&) {
                supported = false; // index-obstructed prime: skip sample
            }
            if (!supported) continue;
            ++tested;
            // archimedean part of the product formula is |N(a)| exactly
            Q arch = abs(n);
            CHECK(arch * finite == 1);
        }
        CHECK(tested >= 40);
    }
}

TEST_CASE("unit sweep") {
    auto K = sqrt2_field();
    NfElem u = NfElem::constant(K, 1) + NfElem::gen(K);
    auto got = unit_sweep(K, {u}, Q(2), Q(3), 3);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == u);

    auto K3 = cos7_field();
    NfElem u1 = NfElem::gen(K3);
    NfElem u2 = u1 + Q(1);
    auto sw = unit_sweep(K3, {u1, u2}, Q(1, 10), Q(10), 6);
    CHECK(!sw.empty());
    bool has_u = false;
    for (auto& v : sw)
        if (v == u1) has_u = true;
    CHECK(has_u);
    // closed under inversion within budget, norms +-1
    for (auto& v : sw) CHECK(abs(v.norm()) == 1);
    // budget 0
    auto sw0 = unit_sweep(K3, {u1, u2}, Q(0), Q(10), 0);
    REQUIRE(sw0.size() == 1);
    CHECK(sw0[0] == NfElem::constant(K3, 1));
    CHECK_THROWS_AS(unit_sweep(K, {NfElem::constant(K, 2)}, Q(0), Q(1), 1), error);
}

TEST_CASE("unit sweep density proxy") {
    // cubic field, budget 12 on [0,5]: max gap between consecutive values < 1/2
    auto K3 = cos7_field();
    NfElem u1 = NfElem::gen(K3);
    NfElem u2 = u1 + Q(1);
    auto sw = unit_sweep(K3, {u1, u2}, Q(0), Q(5), 12);
    REQUIRE(sw.size() > 100);
    Q w(1, 1 << 24);
    double prev = 0;
    double maxgap = 0;
    for (auto& v : sw) {
        double x = mid(v.embed_distinguished(w));
        maxgap = std::max(maxgap, x - prev);
        prev = x;
    }
    maxgap = std::max(maxgap, 5.0 - prev);
    CHECK(maxgap < 0.5);
    // inversion closure within budget: u and u^-1 both inside window when in range
    for (auto& v : sw) {
        NfElem vi = v.inverse();
        if (vi.cmp(Q(0)) >= 0 && vi.cmp(Q(5)) <= 0) {
            bool found = false;
            for (auto& w2 : sw)
                if (w2 == vi) { found = true; break; }
            CHECK(found);
        }
    }
}
