#include <doctest.h>

#include "sag/factor.hpp"
#include "sag/linalg.hpp"
#include "sag/poly.hpp"

using namespace sag;

namespace {
QPoly zp(std::initializer_list<long> coeffs) {
    std::vector<Q> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}
} // namespace

TEST_CASE("polynomial arithmetic and division") {
    QPoly a = zp({-1, 0, 1});     // x^2 - 1
    QPoly b = zp({1, 1});         // x + 1
    auto [q, r] = a.divmod(b);
    CHECK(q == zp({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, b) == b.monic());
    CHECK(a.eval(Q(3)) == 8);
    CHECK(zp({-1, -2, 1, 1}).compose_x2() == zp({-1, 0, -2, 0, 1, 0, 1}));
}

TEST_CASE("sturm root counting and isolation") {
    QPoly p = zp({-1, -2, 1, 1}); // x^3+x^2-2x-1, three real roots
    Sturm st(p);
    CHECK(st.count_all() == 3);
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    // bisection oracle values (independent from the implementation path):
    // -1.8019377, -0.4450419, 1.2469796
    const double expect[3] = {-1.8019377358048383, -0.4450418679126287, 1.2469796037174672};
    for (int i = 0; i < 3; ++i) {
        QInterval iv = refine_root(p, roots[i], Q(1, 1 << 24));
        double lo = iv.lo.get_d(), hi = iv.hi.get_d();
        CHECK(lo <= expect[i]);
        CHECK(expect[i] <= hi);
    }
    CHECK(isolate_real_roots(zp({1, 0, 1})).empty()); // x^2+1
}

TEST_CASE("mod-p factorization") {
    // x^2-2 = (x-3)(x+3) mod 7, irreducible mod 5
    ModPoly f7 = ModPoly::from_q(zp({-2, 0, 1}), Z(7));
    auto fac7 = factor_mod_p(f7);
    REQUIRE(fac7.size() == 2);
    CHECK(fac7[0].degree() == 1);
    ModPoly f5 = ModPoly::from_q(zp({-2, 0, 1}), Z(5));
    CHECK(factor_mod_p(f5).size() == 1);
}

TEST_CASE("factorization over Z") {
    // X^4 - 6X^2 + 1 = (x^2-2x-1)(x^2+2x-1)
    auto fac = factor_monic_z(zp({1, 0, -6, 0, 1}));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0] == zp({-1, -2, 1}));
    CHECK(fac[1] == zp({-1, 2, 1}));

    CHECK(is_irreducible_z(zp({-2, 0, 1})));
    CHECK(is_irreducible_z(zp({-1, -2, 1, 1})));
    CHECK_FALSE(is_irreducible_z(zp({-1, 0, 1})));
    // non-squarefree input: (x-1)^2 (x+2)
    auto fac2 = factor_monic_z(zp({2, -3, 0, 1}));
    REQUIRE(fac2.size() == 3);

    // bigger: product of the three trirectangle trace polynomials stays factorable
    QPoly t1 = zp({-832, 0, 304, 0, -32, 0, 1});
    QPoly t2 = zp({-181, 0, 101, 0, -18, 0, 1});
    CHECK(is_irreducible_z(t1));
    CHECK(is_irreducible_z(t2));
    auto fac3 = factor_monic_z(t1 * t2);
    REQUIRE(fac3.size() == 2);
}

TEST_CASE("smith normal form and lattices") {
    // relator matrix of <c1..c6 | ci^2, c1...c6>: columns = generators
    ZMat m(7, 6);
    for (int i = 0; i < 6; ++i) m.at(i, i) = 2;
    for (int j = 0; j < 6; ++j) m.at(6, j) = 1;
    auto d = smith_diagonal(m);
    REQUIRE(d.size() == 6);
    CHECK(d[0] == 1);
    for (int i = 1; i < 6; ++i) CHECK(d[i] == 2);

    ZMat l(2, 2);
    l.at(0, 0) = 2; l.at(1, 1) = 3;
    ColumnLattice lat(l);
    CHECK(lat.contains({Z(4), Z(3)}));
    CHECK_FALSE(lat.contains({Z(1), Z(0)}));
}

TEST_CASE("first_dependency finds minimal relations") {
    // vectors 1, x, x^2 in Q^2 with x = [1,2]: 1=(1,0)? use explicit small case
    std::vector<std::vector<Q>> vs = {{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(2), Q(3)}};
    auto dep = first_dependency(2, [&](size_t k) { return vs.at(k); });
    CHECK(dep.k == 2);
    CHECK(dep.coeffs == std::vector<Q>{Q(2), Q(3)});
}
