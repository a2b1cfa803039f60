#pragma once

#include "sag/interval.hpp"
#include "sag/numfield.hpp"
#include "sag/tower.hpp"

namespace sag {

/// 2x2 matrix over an exact scalar ring (Q, NfElem, TowerElem) or RInterval.
template <class T>
struct Mat2 {
    T a, b, c, d;

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    T det() const { return a * d - b * c; }
    T tr() const { return a + d; }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

/// Isometry of the hyperbolic plane: matrix action z -> Mz for parity 0
/// (det +1), z -> M z-bar for parity 1 (det -1). For real matrices the
/// composition rule reduces to the plain matrix product with parity XOR.
template <class T>
struct Isometry {
    Mat2<T> m;
    bool anti = false;

    Isometry operator*(const Isometry& o) const { return {m * o.m, anti != o.anti}; }
    bool operator==(const Isometry& o) const = default;
};

/// adjugate-based inverse for unimodular matrices; det_sign is +1 or -1
template <class T>
Mat2<T> inverse_unimodular(const Mat2<T>& m, int det_sign) {
    Mat2<T> adj{m.d, -m.b, -m.c, m.a};
    return det_sign > 0 ? adj : -adj;
}

template <class T>
Isometry<T> inverse(const Isometry<T>& g) {
    return {inverse_unimodular(g.m, g.anti ? -1 : 1), g.anti};
}

// scalar helpers dispatched by type: exact integer-equality, exact comparison
// with a rational, certified enclosure

inline bool scalar_eq_int(const Q& x, long v) { return x == v; }
inline bool scalar_eq_int(const NfElem& x, long v) {
    return x.is_rational() && x.rational_value() == v;
}
inline bool scalar_eq_int(const TowerElem& x, long v) {
    return x == TowerElem::constant(x.ctx(), Q(v));
}

inline int scalar_cmp_q(const Q& x, const Q& r) { return x < r ? -1 : x == r ? 0 : 1; }
inline int scalar_cmp_q(const NfElem& x, const Q& r) { return x.cmp(r); }
inline int scalar_cmp_q(const TowerElem& x, const Q& r) { return x.cmp(r); }

inline RInterval scalar_enclosure(const Q& x, mpfr_prec_t prec) { return RInterval(x, prec); }
inline RInterval scalar_enclosure(const NfElem& x, mpfr_prec_t prec) {
    Q w = Q(1) / qpow(Q(2), static_cast<long>(prec / 2));
    return RInterval(x.embed_distinguished(w), prec);
}
inline RInterval scalar_enclosure(const TowerElem& x, mpfr_prec_t prec) {
    return x.enclosure(prec);
}

template <class T>
bool is_pm_identity(const Mat2<T>& m) {
    if (!scalar_eq_int(m.b, 0) || !scalar_eq_int(m.c, 0)) return false;
    return (scalar_eq_int(m.a, 1) && scalar_eq_int(m.d, 1)) ||
           (scalar_eq_int(m.a, -1) && scalar_eq_int(m.d, -1));
}

} // namespace sag
