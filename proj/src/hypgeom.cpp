#include "sag/hypgeom.hpp"

#include "sag/error.hpp"

namespace sag {

RInterval translation_length_from_trace(const RInterval& tr_abs) {
    RInterval half = tr_abs / RInterval::exact_ui(2, tr_abs.prec());
    return half.acosh() * RInterval::exact_ui(2, tr_abs.prec());
}

PolygonSolution solve_trirectangle(const NfElem& u, mpfr_prec_t prec) {
    if (u.is_zero() || u.sign() <= 0) fail(errc::non_positive_unit, "solve_trirectangle");
    TowerRef ctx = TowerCtx::make(u);
    PolygonSolution sol;
    sol.ctx = ctx;
    sol.sinh_a = u;
    sol.sinh_b = u.inverse() * Q(1, 2);
    sol.cosh_a = TowerElem::s(ctx);
    sol.two_cosh_b = TowerElem::t(ctx);
    sol.two_cosh_d = TowerElem::s(ctx) * TowerElem::t(ctx);
    sol.cos_phi = Q(1, 2);
    // certified identities: cos phi = sinh a sinh b, cosh d = cosh a cosh b
    if (!((sol.sinh_a * sol.sinh_b).is_rational() &&
          (sol.sinh_a * sol.sinh_b).rational_value() == sol.cos_phi))
        fail(errc::internal, "trirectangle identity cos(phi) = sinh a sinh b failed");
    RInterval two(RInterval::exact_ui(2, prec));
    sol.len_a = (scalar_enclosure(sol.cosh_a, prec)).acosh();
    sol.len_b = (sol.two_cosh_b.enclosure(prec) / two).acosh();
    sol.len_d = (sol.two_cosh_d.enclosure(prec) / two).acosh();
    return sol;
}

namespace {

TIso make_iso(const TowerRef& ctx, TowerElem a, TowerElem b, TowerElem c, TowerElem d, bool anti) {
    return TIso{Mat2<TowerElem>{std::move(a), std::move(b), std::move(c), std::move(d)}, anti};
}

void certify_pm_identity(const Mat2<TowerElem>& m, const char* what) {
    if (!is_pm_identity(m)) fail(errc::placement_failure, std::string("relator failed: ") + what);
}

} // namespace

TrirectangleGroup build_trirectangle_group(const NfElem& u) {
    if (u.is_zero() || u.sign() <= 0) fail(errc::non_positive_unit, "build_trirectangle_group");
    TowerRef ctx = TowerCtx::make(u);
    const NfRef& K = u.field();
    auto base = [&](const NfElem& x) { return TowerElem::from_base(ctx, x); };
    auto cst = [&](const Q& v) { return TowerElem::constant(ctx, v); };
    TowerElem s = TowerElem::s(ctx), t = TowerElem::t(ctx);
    TowerElem zero = cst(0), one = cst(1);
    NfElem inv2u = u.inverse() * Q(1, 2); // 1/(2u)

    TrirectangleGroup g;
    g.ctx = ctx;
    // sigma_1: z -> -z-bar (imaginary axis); sigma_2: z -> 1/z-bar (unit circle)
    g.sigma[0] = make_iso(ctx, -one, zero, zero, one, true);
    g.sigma[1] = make_iso(ctx, zero, one, one, zero, true);
    // sigma_3: reflection in the geodesic through F3 orthogonal to the unit
    // circle (center coth b = ut, radius 1/sinh b = 2u)
    g.sigma[2] = make_iso(ctx, t * Q(1, 2), base(-inv2u), base(inv2u), t * Q(-1, 2), true);
    // sigma_4: reflection in the semicircle of radius e^a about 0
    g.sigma[3] = make_iso(ctx, zero, s + base(u), s - base(u), zero, true);

    for (int i = 0; i < 4; ++i) certify_pm_identity((g.sigma[i] * g.sigma[i]).m, "sigma^2");

    g.S[0] = g.sigma[3] * g.sigma[0];
    g.S[1] = g.sigma[0] * g.sigma[1];
    g.S[2] = g.sigma[1] * g.sigma[2];
    g.S[3] = g.sigma[2] * g.sigma[3];
    certify_pm_identity((g.S[0] * g.S[0]).m, "S1^2");
    certify_pm_identity((g.S[1] * g.S[1]).m, "S2^2");
    certify_pm_identity((g.S[2] * g.S[2]).m, "S3^2");
    certify_pm_identity((g.S[3] * g.S[3] * g.S[3]).m, "S4^3");
    certify_pm_identity((g.S[0] * g.S[1] * g.S[2] * g.S[3]).m, "S1 S2 S3 S4");
    // vertex angle pi/3 at F4: |tr S4| = 2 cos(pi/3) = 1
    TowerElem t4 = g.S[3].m.tr();
    if (!(t4 == one || t4 == -one)) fail(errc::placement_failure, "S4 trace");

    g.tr_S1S2 = (g.S[0] * g.S[1]).m.tr();
    g.tr_S2S3 = (g.S[1] * g.S[2]).m.tr();
    g.tr_S1S3 = (g.S[0] * g.S[2]).m.tr();
    // normalize signs so the stored traces are the positive representatives
    if (g.tr_S1S2.sign() < 0) g.tr_S1S2 = -g.tr_S1S2;
    if (g.tr_S2S3.sign() < 0) g.tr_S2S3 = -g.tr_S2S3;
    if (g.tr_S1S3.sign() < 0) g.tr_S1S3 = -g.tr_S1S3;
    // the vertex-distance traces equal 2cosh a, 2cosh b, 2cosh d exactly
    if (!(g.tr_S1S2 == s * Q(2)) || !(g.tr_S2S3 == t) || !(g.tr_S1S3 == s * t))
        fail(errc::placement_failure, "vertex distance traces");
    (void)K;
    return g;
}

HexagonGroup build_hexagon_group(const NfElem& u) {
    TrirectangleGroup tg = build_trirectangle_group(u);
    const auto& sg = tg.sigma;
    HexagonGroup h;
    h.ctx = tg.ctx;
    // reflections across the hexagon sides, in cyclic order
    TIso s434 = sg[3] * sg[2] * sg[3];
    h.side[0] = sg[0];
    h.side[1] = sg[1];
    h.side[2] = sg[2] * sg[0] * sg[2];
    h.side[3] = s434 * sg[1] * s434;
    h.side[4] = sg[3] * (sg[2] * sg[0] * sg[2]) * sg[3];
    h.side[5] = sg[3] * sg[1] * sg[3];
    for (int i = 0; i < 6; ++i) certify_pm_identity((h.side[i] * h.side[i]).m, "side^2");
    // C_j = (side j-1)(side j): half-turn at the common vertex E_j
    for (int j = 0; j < 6; ++j) h.C[j] = h.side[(j + 5) % 6] * h.side[j];
    for (int j = 0; j < 6; ++j) certify_pm_identity((h.C[j] * h.C[j]).m, "C^2");
    TIso prod = h.C[0];
    for (int j = 1; j < 6; ++j) prod = prod * h.C[j];
    certify_pm_identity(prod.m, "C1...C6");
    // Tr(C1 C2) = 2 cosh(2a) = 2 + 4u^2 exactly
    NfElem t_expect = u * u * Q(4) + Q(2);
    TowerElem tr = (h.C[0] * h.C[1]).m.tr();
    TowerElem expect = TowerElem::from_base(h.ctx, t_expect);
    if (!(tr == expect || tr == -expect)) fail(errc::placement_failure, "Tr(C1C2) != 2+4u^2");
    h.tr_c1c2 = t_expect;
    return h;
}

Q halfturn_product_trace(const Q& x1, const Q& y1, const Q& x2, const Q& y2) {
    if (y1 <= 0 || y2 <= 0) fail(errc::invalid_argument, "points must lie in the upper half-plane");
    if (x1 == x2 && y1 == y2) fail(errc::coincident_points, "halfturn_product_trace");
    // H = [[-x, x^2+y^2], [-1, x]] / y
    Q a1 = -x1 / y1, b1 = (x1 * x1 + y1 * y1) / y1, c1 = -1 / y1, d1 = x1 / y1;
    Q a2 = -x2 / y2, b2 = (x2 * x2 + y2 * y2) / y2, c2 = -1 / y2, d2 = x2 / y2;
    return a1 * a2 + b1 * c2 + c1 * b2 + d1 * d2;
}

RInterval halfturn_product_trace(const RInterval& x1, const RInterval& y1, const RInterval& x2,
                                 const RInterval& y2) {
    // coincidence must be excluded by certified separation
    bool sep = certified_lt(x1, x2) || certified_lt(x2, x1) || certified_lt(y1, y2) ||
               certified_lt(y2, y1);
    if (!sep) fail(errc::coincident_points, "halfturn_product_trace: points not certified distinct");
    auto H = [&](const RInterval& x, const RInterval& y) {
        return std::array<RInterval, 4>{-x / y, (x * x + y * y) / y, -(RInterval::exact_ui(1, x.prec()) / y),
                                        x / y};
    };
    auto h1 = H(x1, y1), h2 = H(x2, y2);
    return h1[0] * h2[0] + h1[1] * h2[2] + h1[2] * h2[1] + h1[3] * h2[3];
}

RInterval hexagon_opposite_side(const RInterval& a1, const RInterval& a2, const RInterval& a3) {
    for (const RInterval* a : {&a1, &a2, &a3})
        if (a->lo_d() <= 0) fail(errc::non_positive_input, "hexagon_opposite_side");
    RInterval one = RInterval::exact_ui(1, a1.prec());
    auto sinh = [&](const RInterval& x) {
        // sinh = sqrt(cosh^2 - 1) for x > 0
        RInterval c = x.cosh();
        return (c * c - one).sqrt();
    };
    RInterval cosh_b1 = (a1.cosh() + a2.cosh() * a3.cosh()) / (sinh(a2) * sinh(a3));
    return cosh_b1.acosh();
}

RInterval displacement_product(const std::vector<FactorTrace>& factors, mpfr_prec_t prec) {
    if (factors.empty()) fail(errc::invalid_argument, "displacement_product: no factors");
    bool any_hyp = false;
    for (auto& f : factors) {
        if (f.cmp_abs2 == 0) fail(errc::parabolic_factor, "factor with |tr| = 2");
        if (f.cmp_abs2 > 0) any_hyp = true;
    }
    if (!any_hyp) fail(errc::all_elliptic, "no factor with |tr| > 2");
    RInterval sum(prec);
    RInterval two = RInterval::exact_ui(2, prec);
    for (auto& f : factors) {
        if (f.cmp_abs2 < 0) continue;
        RInterval term = (f.abs_tr(prec) / two).acosh();
        sum = sum + term * term;
    }
    return sum.sqrt() * two;
}

Q area_pi_coefficient(int genus, const std::vector<long>& cone_orders, int punctures) {
    Q s(2 * genus - 2 + punctures);
    for (long m : cone_orders) {
        if (m < 2) fail(errc::invalid_argument, "cone order must be >= 2");
        s += 1 - Q(1, m);
    }
    return 2 * s;
}

} // namespace sag
