#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sag/error.hpp"
#include "sag/isometry.hpp"

namespace sag {

enum class IsoClass { elliptic, parabolic, hyperbolic };

/// classification by |tr| vs 2, exact. Requires parity 0 and g != +-1.
/// errors: identity_element
template <class T>
IsoClass classify(const Isometry<T>& g) {
    if (g.anti) fail(errc::invalid_argument, "classify: orientation-reversing element");
    if (is_pm_identity(g.m)) fail(errc::identity_element, "classify: identity");
    T t = g.m.tr();
    int c = scalar_cmp_q(t * t, Q(4));
    return c < 0 ? IsoClass::elliptic : c == 0 ? IsoClass::parabolic : IsoClass::hyperbolic;
}

/// l(g) = 2 acosh(Tr/2) for hyperbolic g. errors: not_hyperbolic
template <class T>
RInterval translation_length(const Isometry<T>& g, mpfr_prec_t prec = 160) {
    if (classify(g) != IsoClass::hyperbolic) fail(errc::not_hyperbolic, "translation_length");
    RInterval tr = scalar_enclosure(g.m.tr(), prec).abs();
    RInterval half = tr / RInterval::exact_ui(2, prec);
    return half.acosh() * RInterval::exact_ui(2, prec);
}

RInterval translation_length_from_trace(const RInterval& tr_abs);

using TIso = Isometry<TowerElem>;

/// Exact solution of the trirectangle with acute angle pi/3 from the free
/// side parameter u = sinh a: sinh b = 1/(2u), cosh a = s, 2cosh b = t,
/// 2cosh d = s t, all in the tower algebra over Q(u).
struct PolygonSolution {
    TowerRef ctx;
    NfElem sinh_a, sinh_b;
    TowerElem cosh_a, two_cosh_b, two_cosh_d;
    RInterval len_a, len_b, len_d; // certified side/diagonal lengths
    Q cos_phi;                     // exactly 1/2
};
PolygonSolution solve_trirectangle(const NfElem& u, mpfr_prec_t prec = 160);

/// Reflections sigma_1..sigma_4 across the sides F1F2, F2F3, F3F4, F4F1 of
/// the trirectangle in canonical placement (right angle at F2 = i, side a
/// along the imaginary axis, side b along the unit semicircle), and the
/// vertex rotations S_1..S_4 of orders 2,2,2,3. Construction is certified:
/// relator matrices are checked to be +-identity exactly.
struct TrirectangleGroup {
    TowerRef ctx;
    std::array<TIso, 4> sigma;
    std::array<TIso, 4> S;
    TowerElem tr_S1S2, tr_S2S3, tr_S1S3; // = 2cosh a, 2cosh b, 2cosh d exactly
};
TrirectangleGroup build_trirectangle_group(const NfElem& u);

/// The right-angled hexagon tiled by six copies of the trirectangle; sides
/// in cyclic order with half-turns C_1..C_6 at the vertices. Certified:
/// C_j^2 = 1, C_1...C_6 = 1, Tr(C_1 C_2) = 2 + 4u^2 exactly.
struct HexagonGroup {
    TowerRef ctx;
    std::array<TIso, 6> side;
    std::array<TIso, 6> C;
    NfElem tr_c1c2; // 2 + 4u^2 in the base field
};
HexagonGroup build_hexagon_group(const NfElem& u);

/// trace of the product of the half-turns around two points of the upper
/// half-plane; equals 2 cosh d(p1, p2). Exact for rational points.
/// errors: coincident_points
Q halfturn_product_trace(const Q& x1, const Q& y1, const Q& x2, const Q& y2);
RInterval halfturn_product_trace(const RInterval& x1, const RInterval& y1, const RInterval& x2,
                                 const RInterval& y2);

/// side b1 opposite to a1 in the right-angled hexagon with alternating sides
/// a1, a2, a3: cosh b1 sinh a2 sinh a3 = cosh a1 + cosh a2 cosh a3.
/// errors: non_positive_input
RInterval hexagon_opposite_side(const RInterval& a1, const RInterval& a2, const RInterval& a3);

/// One factor of an element of PSL(2,R)^r: the exact comparison of |tr|
/// against 2 plus a certified enclosure of |tr|.
struct FactorTrace {
    int cmp_abs2; // sign of |tr| - 2, decided exactly by the caller
    std::function<RInterval(mpfr_prec_t)> abs_tr;
};

/// displacement of a hyperbolic translation of (H^2)^r:
/// l = 2 sqrt(sum_h acosh(|tr_h|/2)^2) over the factors with |tr| > 2.
/// errors: parabolic_factor, all_elliptic
RInterval displacement_product(const std::vector<FactorTrace>& factors, mpfr_prec_t prec = 160);

/// orbifold area as a rational multiple of pi: 2(2g-2+s+sum(1-1/m_i))
Q area_pi_coefficient(int genus, const std::vector<long>& cone_orders, int punctures);

} // namespace sag
