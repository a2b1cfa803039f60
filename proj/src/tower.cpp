#include "sag/tower.hpp"

#include "sag/error.hpp"
#include "sag/factor.hpp"

namespace sag {

TowerRef TowerCtx::make(const NfElem& u) {
    if (u.is_zero() || u.sign() <= 0)
        fail(errc::non_positive_unit, "tower base parameter must be positive");
    NfElem v = u * u + Q(1);
    NfElem ui = u.inverse();
    NfElem w = ui * ui + Q(4);
    return TowerRef(new TowerCtx(u.field(), u, std::move(v), std::move(w)));
}

TowerElem TowerElem::from_base(const TowerRef& ctx, const NfElem& x) {
    NfElem z = NfElem::constant(ctx->base(), 0);
    return TowerElem(ctx, {x, z, z, z});
}

TowerElem TowerElem::constant(const TowerRef& ctx, const Q& v) {
    return from_base(ctx, NfElem::constant(ctx->base(), v));
}

TowerElem TowerElem::s(const TowerRef& ctx) {
    NfElem z = NfElem::constant(ctx->base(), 0);
    return TowerElem(ctx, {z, NfElem::constant(ctx->base(), 1), z, z});
}

TowerElem TowerElem::t(const TowerRef& ctx) {
    NfElem z = NfElem::constant(ctx->base(), 0);
    return TowerElem(ctx, {z, z, NfElem::constant(ctx->base(), 1), z});
}

void TowerElem::check_same(const TowerElem& o) const {
    if (ctx_.get() != o.ctx_.get()) fail(errc::invalid_argument, "mixed tower contexts");
}

bool TowerElem::is_zero() const {
    for (auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool TowerElem::operator==(const TowerElem& o) const {
    return ctx_.get() == o.ctx_.get() && c_ == o.c_;
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
    check_same(o);
    return TowerElem(ctx_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]});
}

TowerElem TowerElem::operator-(const TowerElem& o) const { return *this + (-o); }

TowerElem TowerElem::operator-() const {
    return TowerElem(ctx_, {-c_[0], -c_[1], -c_[2], -c_[3]});
}

TowerElem TowerElem::operator*(const Q& v) const {
    return TowerElem(ctx_, {c_[0] * v, c_[1] * v, c_[2] * v, c_[3] * v});
}

TowerElem TowerElem::operator*(const TowerElem& o) const {
    check_same(o);
    const NfElem& v = ctx_->s_sq();
    const NfElem& w = ctx_->t_sq();
    const auto& a = c_;
    const auto& b = o.c_;
    NfElem vw = v * w;
    return TowerElem(
        ctx_, {a[0] * b[0] + (a[1] * b[1]) * v + (a[2] * b[2]) * w + (a[3] * b[3]) * vw,
               a[0] * b[1] + a[1] * b[0] + (a[2] * b[3] + a[3] * b[2]) * w,
               a[0] * b[2] + a[2] * b[0] + (a[1] * b[3] + a[3] * b[1]) * v,
               a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]});
}

std::vector<Q> TowerElem::qvec() const {
    std::vector<Q> out;
    out.reserve(ctx_->qdim());
    for (auto& comp : c_)
        for (auto& q : comp.coords()) out.push_back(q);
    return out;
}

TowerElem TowerElem::inverse() const {
    // solve x * y = 1 as a Q-linear system in the 4d coordinates of y
    if (is_zero()) fail(errc::internal, "tower inverse of zero");
    const NfRef& K = ctx_->base();
    int d = K->degree();
    QMat m(4 * d, 4 * d);
    for (int comp = 0; comp < 4; ++comp) {
        for (int j = 0; j < d; ++j) {
            std::array<NfElem, 4> e = {NfElem::constant(K, 0), NfElem::constant(K, 0),
                                       NfElem::constant(K, 0), NfElem::constant(K, 0)};
            std::vector<Q> coords(d, Q(0));
            coords[j] = 1;
            e[comp] = NfElem(K, coords);
            TowerElem col = *this * TowerElem(ctx_, e);
            std::vector<Q> cv = col.qvec();
            for (size_t i = 0; i < cv.size(); ++i) m.at(i, comp * d + j) = cv[i];
        }
    }
    std::vector<Q> rhs(4 * d, Q(0));
    rhs[0] = 1;
    auto sol = solve(m, rhs);
    if (!sol) fail(errc::internal, "tower element not invertible");
    std::array<NfElem, 4> y;
    for (int comp = 0; comp < 4; ++comp) {
        std::vector<Q> coords(sol->begin() + comp * d, sol->begin() + (comp + 1) * d);
        y[comp] = NfElem(K, coords);
    }
    return TowerElem(ctx_, y);
}

QInterval qi_sqrt(const QInterval& v, int bits) {
    auto lower = [&](const Q& x) {
        if (x <= 0) return Q(0);
        Q lo(0), hi = x < 1 ? Q(1) : x;
        for (int i = 0; i < bits; ++i) {
            Q m = (lo + hi) / 2;
            if (m * m <= x) lo = m;
            else hi = m;
        }
        return lo;
    };
    auto upper = [&](const Q& x) {
        if (x <= 0) return Q(0);
        Q lo(0), hi = x < 1 ? Q(1) : x;
        for (int i = 0; i < bits; ++i) {
            Q m = (lo + hi) / 2;
            if (m * m >= x) hi = m;
            else lo = m;
        }
        return hi;
    };
    return {lower(v.lo), upper(v.hi)};
}

QInterval TowerElem::embed(const Q& width) const {
    Q w = width / 8;
    for (int iter = 0;; ++iter, w /= 256) {
        int bits = 48 + 32 * iter;
        QInterval sv = qi_sqrt(ctx_->s_sq().embed_distinguished(w), bits);
        QInterval tv = qi_sqrt(ctx_->t_sq().embed_distinguished(w), bits);
        QInterval r = c_[0].embed_distinguished(w) + c_[1].embed_distinguished(w) * sv +
                      c_[2].embed_distinguished(w) * tv +
                      c_[3].embed_distinguished(w) * (sv * tv);
        if (r.width() <= width || iter > 64) return r;
    }
}

int TowerElem::sign() const {
    if (is_zero()) return 0;
    Q w(1, 64);
    while (true) {
        QInterval iv = embed(w);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
        w /= 256;
    }
}

int TowerElem::cmp(const Q& r) const { return (*this - constant(ctx_, r)).sign(); }

RInterval TowerElem::enclosure(mpfr_prec_t prec) const {
    Q w = Q(1) / qpow(Q(2), static_cast<long>(prec / 2));
    return RInterval(embed(w), prec);
}

QPoly TowerElem::operator_minimal_poly() const {
    size_t dim = ctx_->qdim();
    TowerElem self = *this;
    std::vector<TowerElem> powers{constant(ctx_, 1)};
    auto dep = first_dependency(dim, [&](size_t k) {
        while (powers.size() <= k) powers.push_back(powers.back() * self);
        return powers[k].qvec();
    });
    std::vector<Q> c(dep.coeffs);
    for (auto& q : c) q = -q;
    c.push_back(Q(1));
    return QPoly(std::move(c));
}

QPoly TowerElem::number_minimal_poly() const {
    QPoly mu = operator_minimal_poly();
    if (mu.degree() == 1) return mu;
    // clear denominators: g(y) = D^n mu(y/D) is monic integral; roots scale by D
    Z D(1);
    for (auto& c : mu.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den().get_mpz_t());
    int n = mu.degree();
    std::vector<Q> gc(n + 1);
    for (int k = 0; k <= n; ++k) gc[k] = mu[k] * qpow(Q(D), n - k);
    QPoly g(std::move(gc));
    auto factors = factor_monic_z(g);
    const QPoly* hit = factors.data();
    if (factors.size() > 1) {
        // the denoted number, scaled by D, picks out exactly one factor
        Q w(1, 1024);
        for (;; w /= 256) {
            QInterval iv = embed(w) * Q(D);
            hit = nullptr;
            int nhit = 0;
            for (const auto& f : factors) {
                Sturm st(f);
                int cnt = st.count(iv.lo, iv.hi);
                if (f.eval(iv.lo) == 0) ++cnt;
                if (cnt > 0) {
                    ++nhit;
                    hit = &f;
                }
            }
            if (nhit == 1) break;
        }
    }
    // unscale: p(x) = q(D x) / D^m
    int m = hit->degree();
    std::vector<Q> pc(m + 1);
    for (int k = 0; k <= m; ++k) pc[k] = (*hit)[k] * qpow(Q(D), k) / qpow(Q(D), m);
    return QPoly(std::move(pc));
}

bool is_algebraic_integer(const TowerElem& x) { return x.number_minimal_poly().is_integer(); }

bool is_totally_real(const TowerElem& x) { return is_totally_real_poly(x.number_minimal_poly()); }

} // namespace sag
