#include "sag/interval.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sag/error.hpp"

namespace sag {

QInterval QInterval::operator*(const QInterval& o) const {
    Q a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

QInterval QInterval::abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return -*this;
    Q nl = -lo;
    return {Q(0), std::max(nl, hi)};
}

QInterval qi_union(const QInterval& a, const QInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RInterval::RInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RInterval::RInterval(const Q& v, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

RInterval::RInterval(const QInterval& v, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, v.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.hi.get_mpq_t(), MPFR_RNDU);
}

RInterval::RInterval(const RInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RInterval::RInterval(RInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RInterval& RInterval::operator=(RInterval o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RInterval::~RInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RInterval RInterval::exact_ui(unsigned long v, mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_set_ui(r.lo_, v, MPFR_RNDD);
    mpfr_set_ui(r.hi_, v, MPFR_RNDU);
    return r;
}

Q RInterval::lo_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

Q RInterval::hi_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

double RInterval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

RInterval RInterval::operator+(const RInterval& o) const {
    RInterval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::operator-(const RInterval& o) const {
    RInterval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RInterval RInterval::operator-() const {
    RInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RInterval RInterval::operator*(const RInterval& o) const {
    RInterval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lower bound: min over endpoint products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // upper bound
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInterval RInterval::operator/(const RInterval& o) const {
    if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
        fail(errc::internal, "interval division by interval containing zero");
    RInterval inv(o.prec_);
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this * inv;
}

RInterval RInterval::unary(int (*fd)(mpfr_t, const mpfr_t, mpfr_rnd_t),
                           int (*fu)(mpfr_t, const mpfr_t, mpfr_rnd_t)) const {
    RInterval r(prec_);
    fd(r.lo_, lo_, MPFR_RNDD);
    fu(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::sqrt() const { return unary(mpfr_sqrt, mpfr_sqrt); }
RInterval RInterval::log() const { return unary(mpfr_log, mpfr_log); }
RInterval RInterval::exp() const { return unary(mpfr_exp, mpfr_exp); }

RInterval RInterval::acosh() const {
    RInterval r(prec_);
    // clamp lower endpoint at 1 so that enclosures of values == 1 stay valid
    if (mpfr_cmp_ui(lo_, 1) < 0) {
        if (mpfr_cmp_ui(hi_, 1) < 0) fail(errc::internal, "acosh argument below 1");
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_acosh(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_acosh(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::cosh() const {
    // cosh is not monotone through 0; split on sign
    if (mpfr_sgn(lo_) >= 0) return unary(mpfr_cosh, mpfr_cosh);
    if (mpfr_sgn(hi_) <= 0) return (-*this).cosh();
    RInterval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    mpfr_cosh(r.hi_, hi_, MPFR_RNDU);
    mpfr_neg(t, lo_, MPFR_RNDU);
    mpfr_cosh(t, t, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInterval RInterval::nth_root(unsigned long n) const {
    RInterval r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

RInterval RInterval::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    RInterval r(prec_);
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::max1() const {
    RInterval r(*this);
    if (mpfr_cmp_ui(r.lo_, 1) < 0) mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    if (mpfr_cmp_ui(r.hi_, 1) < 0) mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
    return r;
}

std::string RInterval::str(int digits) const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, m);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(m);
    return out;
}

RInterval ri_union(const RInterval& a, const RInterval& b) {
    RInterval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

bool certified_lt(const RInterval& a, const RInterval& b) { return mpfr_cmp(a.hi_, b.lo_) < 0; }
bool certified_le(const RInterval& a, const RInterval& b) { return mpfr_cmp(a.hi_, b.lo_) <= 0; }

} // namespace sag
