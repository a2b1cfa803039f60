#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "sag/rat.hpp"

namespace sag {

/// Closed interval with exact rational endpoints. Arithmetic keeps exactness;
/// used wherever algebraic signs must be decided, never rounded.
struct QInterval {
    Q lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(const Q& v) : lo(v), hi(v) {}
    QInterval(Q l, Q h) : lo(std::move(l)), hi(std::move(h)) {}

    bool is_point() const { return lo == hi; }
    Q width() const { return hi - lo; }
    Q mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    /// -1, 0 (straddles), +1
    int sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    QInterval operator-() const { return {-hi, -lo}; }
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const;
    QInterval operator+(const Q& c) const { return {lo + c, hi + c}; }
    QInterval operator*(const Q& c) const {
        return c >= 0 ? QInterval{lo * c, hi * c} : QInterval{hi * c, lo * c};
    }
    QInterval abs() const;
    QInterval max1() const { // max(1, .) pointwise
        return {lo < 1 ? Q(1) : lo, hi < 1 ? Q(1) : hi};
    }
};

QInterval qi_union(const QInterval& a, const QInterval& b);

/// Certified real interval backed by MPFR with directed rounding; endpoints
/// always bracket the exact value. Used for transcendental enclosures
/// (log, acosh, sqrt, n-th root) on top of exact rational inputs.
class RInterval {
  public:
    explicit RInterval(mpfr_prec_t prec = 128);
    RInterval(const Q& v, mpfr_prec_t prec = 128);
    RInterval(const QInterval& v, mpfr_prec_t prec = 128);
    RInterval(const RInterval&);
    RInterval(RInterval&&) noexcept;
    RInterval& operator=(RInterval);
    ~RInterval();

    static RInterval exact_ui(unsigned long v, mpfr_prec_t prec = 128);

    mpfr_prec_t prec() const { return prec_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const { return (lo_d() + hi_d()) / 2; }
    Q lo_q() const;
    Q hi_q() const;
    double width_d() const;
    bool contains(double v) const { return lo_d() <= v && v <= hi_d(); }

    RInterval operator+(const RInterval&) const;
    RInterval operator-(const RInterval&) const;
    RInterval operator*(const RInterval&) const;
    RInterval operator/(const RInterval&) const; // divisor must not straddle 0
    RInterval operator-() const;

    RInterval sqrt() const;   // lo >= 0 required
    RInterval log() const;    // lo > 0 required
    RInterval exp() const;
    RInterval acosh() const;  // lo >= 1 required
    RInterval cosh() const;
    RInterval nth_root(unsigned long n) const; // lo >= 0
    RInterval abs() const;
    RInterval max1() const;

    /// decimal rendering of the midpoint, deterministic, `digits` significant digits
    std::string str(int digits = 25) const;

    friend RInterval ri_union(const RInterval& a, const RInterval& b);
    friend bool certified_lt(const RInterval& a, const RInterval& b); // a.hi < b.lo
    friend bool certified_le(const RInterval& a, const RInterval& b); // a.hi <= b.lo

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
    RInterval unary(int (*fd)(mpfr_t, const mpfr_t, mpfr_rnd_t),
                    int (*fu)(mpfr_t, const mpfr_t, mpfr_rnd_t)) const;
};

} // namespace sag
