#include "sag/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sag/error.hpp"
#include "sag/factor.hpp"

namespace sag {

NumberField::NumberField(QPoly p, std::vector<QInterval> roots, size_t dist)
    : minpoly_(std::move(p)), degree_(minpoly_.degree()), roots_(std::move(roots)),
      distinguished_(dist) {}

NfRef NumberField::make(const QPoly& minpoly, std::optional<size_t> distinguished_root) {
    if (minpoly.degree() < 1) fail(errc::invalid_argument, "defining polynomial must be nonconstant");
    if (!minpoly.is_integer()) fail(errc::not_monic, "defining polynomial must have integer coefficients");
    if (!minpoly.is_monic()) fail(errc::not_monic, "defining polynomial must be monic");
    if (!is_irreducible_z(minpoly)) fail(errc::not_irreducible, minpoly.str());
    auto roots = isolate_real_roots(minpoly);
    if (static_cast<int>(roots.size()) != minpoly.degree())
        fail(errc::not_totally_real, minpoly.str());
    size_t dist = distinguished_root.value_or(roots.size() - 1);
    if (dist >= roots.size()) fail(errc::invalid_argument, "embedding index out of range");
    return NfRef(new NumberField(minpoly, std::move(roots), dist));
}

NfRef NumberField::rationals() {
    static NfRef q = NfRef(new NumberField(QPoly::x(), {QInterval(Q(0))}, 0));
    return q;
}

QInterval NumberField::root(size_t i, const Q& w) const {
    return refine_root(minpoly_, roots_.at(i), w);
}

NfElem::NfElem(NfRef field, std::vector<Q> coords) : K_(std::move(field)), c_(std::move(coords)) {
    c_.resize(K_->degree(), Q(0));
    for (auto& q : c_) q.canonicalize();
}

NfElem NfElem::constant(const NfRef& field, const Q& v) {
    std::vector<Q> c(field->degree(), Q(0));
    c[0] = v;
    return NfElem(field, std::move(c));
}

NfElem NfElem::gen(const NfRef& field) {
    std::vector<Q> c(field->degree(), Q(0));
    if (field->degree() == 1) {
        // beta is the rational root itself
        c[0] = -field->minpoly()[0];
    } else {
        c[1] = 1;
    }
    return NfElem(field, std::move(c));
}

void NfElem::check_same(const NfElem& o) const {
    if (!K_ || !o.K_ || !K_->same_field(*o.K_))
        fail(errc::invalid_argument, "elements of different number fields");
}

bool NfElem::is_zero() const {
    for (auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool NfElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Q NfElem::rational_value() const {
    if (!is_rational()) fail(errc::internal, "not a rational element");
    return c_[0];
}

NfElem NfElem::operator+(const NfElem& o) const {
    check_same(o);
    std::vector<Q> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return NfElem(K_, std::move(r));
}

NfElem NfElem::operator-(const NfElem& o) const { return *this + (-o); }

NfElem NfElem::operator-() const {
    std::vector<Q> r(c_);
    for (auto& q : r) q = -q;
    return NfElem(K_, std::move(r));
}

NfElem NfElem::operator+(const Q& v) const {
    std::vector<Q> r(c_);
    r[0] += v;
    return NfElem(K_, std::move(r));
}

NfElem NfElem::operator*(const Q& v) const {
    std::vector<Q> r(c_);
    for (auto& q : r) q *= v;
    return NfElem(K_, std::move(r));
}

NfElem NfElem::operator*(const NfElem& o) const {
    check_same(o);
    QPoly prod = QPoly(c_) * QPoly(o.c_);
    QPoly rem = prod.divmod(K_->minpoly()).second;
    std::vector<Q> r(rem.coeffs());
    return NfElem(K_, std::move(r));
}

NfElem NfElem::inverse() const {
    if (is_zero()) fail(errc::internal, "inverse of zero");
    // solve M_a x = e_0
    QMat m = mult_matrix();
    std::vector<Q> b(K_->degree(), Q(0));
    b[0] = 1;
    auto x = solve(m, b);
    if (!x) fail(errc::internal, "inverse solve failed");
    return NfElem(K_, std::move(*x));
}

NfElem NfElem::pow(long e) const {
    NfElem base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
    NfElem r = NfElem::constant(K_, 1);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool NfElem::operator==(const NfElem& o) const {
    if (!K_ || !o.K_) return !K_ && !o.K_;
    return K_->same_field(*o.K_) && c_ == o.c_;
}

QMat NfElem::mult_matrix() const {
    int d = K_->degree();
    QMat m(d, d);
    NfElem col = *this;
    // columns are coords of a * beta^j
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m.at(i, j) = col.c_[i];
        if (j + 1 < d) col = col * NfElem::gen(K_);
    }
    return m;
}

QInterval NfElem::embed(size_t i, const Q& width) const {
    // evaluate the coordinate polynomial on a refined root interval; halve the
    // request until the result is tight enough
    QPoly g(c_);
    Q w = width;
    for (int iter = 0;; ++iter) {
        QInterval iv = g.eval(K_->root(i, w));
        if (iv.width() <= width || iter > 256) return iv;
        w /= 16;
    }
}

QInterval NfElem::embed_distinguished(const Q& width) const {
    return embed(K_->distinguished(), width);
}

int NfElem::sign_at(size_t i) const {
    if (is_zero()) return 0;
    Q w(1, 16);
    while (true) {
        QInterval iv = embed(i, w);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
        w /= 256;
    }
}

int NfElem::sign() const { return sign_at(K_->distinguished()); }

int NfElem::cmp(const Q& r) const { return (*this + (-r)).sign(); }

int NfElem::cmp(const NfElem& o) const { return (*this - o).sign(); }

Q NfElem::norm() const { return det(mult_matrix()); }

Q NfElem::trace() const {
    QMat m = mult_matrix();
    Q t(0);
    for (int i = 0; i < K_->degree(); ++i) t += m.at(i, i);
    return t;
}

QPoly NfElem::minimal_poly() const {
    int d = K_->degree();
    NfElem self = *this;
    NfRef K = K_;
    std::vector<NfElem> powers{NfElem::constant(K, 1)};
    auto dep = first_dependency(d, [&](size_t k) {
        while (powers.size() <= k) powers.push_back(powers.back() * self);
        return powers[k].coords();
    });
    std::vector<Q> c(dep.coeffs);
    for (auto& q : c) q = -q;
    c.push_back(Q(1));
    return QPoly(std::move(c));
}

bool is_algebraic_integer(const NfElem& a) { return a.minimal_poly().is_integer(); }

bool is_totally_positive(const NfElem& a) {
    if (a.is_zero()) fail(errc::invalid_argument, "totally-positive test on zero");
    for (size_t i = 0; i < a.field()->roots_raw().size(); ++i)
        if (a.sign_at(i) <= 0) return false;
    return true;
}

bool is_totally_real_poly(const QPoly& p) {
    QPoly sf = p.monic();
    QPoly g = gcd(sf, sf.derivative());
    if (g.degree() > 0) sf = sf.divmod(g).first.monic();
    Sturm st(sf);
    return st.count_all() == sf.degree();
}

NfElem sqrt_totally_positive(const NfElem& a) {
    if (!is_algebraic_integer(a)) fail(errc::not_integral, "sqrt of a non-integral element");
    if (!is_totally_positive(a)) fail(errc::not_totally_positive, "sqrt of a non-totally-positive element");
    if (a.is_rational()) {
        // rational square roots are exact; otherwise fall through to the
        // quadratic case with an irrational target
        Q v = a.rational_value();
        Z num = v.get_num(), den = v.get_den(), rn, rd;
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return NfElem::constant(NumberField::rationals(), Q(rn) / Q(rd));
        }
    }
    QPoly P = a.minimal_poly();
    QPoly F = P.compose_x2(); // sqrt(a) is a root of P(X^2)
    auto factors = factor_monic_z(F);
    // locate the factor vanishing at the positive square root of the
    // distinguished image of a; rational sqrt brackets by bisection
    Q w(1, 1024);
    auto sqrt_lower = [](const Q& v) {
        Q lo(0), hi = v < 1 ? Q(1) : v;
        for (int i = 0; i < 80; ++i) {
            Q m = (lo + hi) / 2;
            if (m * m <= v) lo = m;
            else hi = m;
        }
        return lo;
    };
    auto sqrt_upper = [](const Q& v) {
        Q lo(0), hi = v < 1 ? Q(1) : v;
        for (int i = 0; i < 80; ++i) {
            Q m = (lo + hi) / 2;
            if (m * m >= v) hi = m;
            else lo = m;
        }
        return hi;
    };
    for (;; w /= 256) {
        QInterval av = a.embed_distinguished(w);
        if (av.lo <= 0) continue;
        Q l = sqrt_lower(av.lo), h = sqrt_upper(av.hi);
        // candidates: factors with exactly one root in (l, h]
        const QPoly* hit = nullptr;
        int nhit = 0;
        for (const auto& f : factors) {
            Sturm st(f);
            int n = st.count(l, h);
            if (n > 0) {
                ++nhit;
                hit = &f;
                if (n > 1) nhit = 2; // force refinement
            }
        }
        if (nhit == 1) {
            // build the field generated by sqrt(a), distinguished root in (l, h]
            auto roots = isolate_real_roots(*hit);
            size_t idx = roots.size();
            Sturm st(*hit);
            for (size_t i = 0; i < roots.size(); ++i) {
                QInterval r = roots[i];
                // refine until either inside (l,h] or separated
                while (true) {
                    if (r.lo >= l && r.hi <= h) { idx = i; break; }
                    if (r.hi < l || r.lo > h) break;
                    if (st.count(std::max(r.lo, l), std::min(r.hi, h)) == 0) break;
                    r = refine_root(*hit, r, r.width() / 16);
                }
                if (idx != roots.size()) break;
            }
            if (idx == roots.size()) continue; // refine the bracket and retry
            NfRef Kr = NumberField::make(*hit, idx);
            return NfElem::gen(Kr);
        }
    }
}

std::vector<PrimeIdealData> prime_ideal_above(const NfRef& K, const Z& p) {
    if (p < 2 || !is_prime(p)) fail(errc::bad_prime, p.get_str());
    const QPoly& f = K->minpoly();
    ModPoly fp = ModPoly::from_q(f, p);
    auto fac = factor_mod_p(fp);
    // group equal factors
    std::vector<std::pair<ModPoly, int>> grouped;
    for (auto& g : fac) {
        if (!grouped.empty() && grouped.back().first.c == g.c)
            grouped.back().second++;
        else
            grouped.emplace_back(g, 1);
    }
    bool squarefree = true;
    for (auto& [g, e] : grouped)
        if (e > 1) squarefree = false;
    if (!squarefree) {
        // Dedekind criterion: p must not divide [O_K : Z[beta]]
        ModPoly gstar({Z(1)}, p), hstar({Z(1)}, p);
        for (auto& [g, e] : grouped) {
            gstar = gstar * g;
            for (int i = 1; i < e; ++i) hstar = hstar * g;
        }
        QPoly glift = gstar.lift_symmetric(), hlift = hstar.lift_symmetric();
        QPoly T = glift * hlift - f;
        std::vector<Q> tc(T.coeffs());
        for (auto& c : tc) c /= Q(p);
        ModPoly Tbar = ModPoly::from_q(QPoly(tc), p);
        ModPoly g1 = mod_gcd(Tbar, gstar);
        ModPoly g2 = mod_gcd(g1, hstar);
        if (g2.degree() != 0)
            fail(errc::unsupported_ideal_factorization,
                 "prime " + p.get_str() + " divides the index [O_K : Z[beta]]");
    }
    std::vector<PrimeIdealData> out;
    for (auto& [g, e] : grouped) {
        PrimeIdealData d;
        d.p = p;
        d.residue_degree = g.degree();
        d.ramification = e;
        d.norm = zpow(p, g.degree());
        d.local_generator = g.lift_symmetric();
        d.squarefree_case = squarefree;
        d.n_primes_above = grouped.size();
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

Z coords_denominator(const NfElem& a) {
    Z den(1);
    for (auto& c : a.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    return den;
}

// ord at P of an element with integral coordinates
long ord_p_integral(const NfElem& g, const PrimeIdealData& P) {
    const NfRef& K = g.field();
    Q nq = g.norm();
    if (nq == 0) fail(errc::internal, "ord of zero");
    long vn = z_valuation(nq.get_num(), P.p);
    if (vn == 0) return 0;
    if (P.n_primes_above == 1) {
        // f * ord = v_p(N)
        if (vn % P.residue_degree != 0) fail(errc::internal, "valuation mismatch");
        return vn / P.residue_degree;
    }
    if (!P.squarefree_case)
        fail(errc::unsupported_ideal_factorization,
             "mixed ramified factorization at " + P.p.get_str());
    // Hensel-lift the local generator to p^k, k = vn + 1, and read the
    // valuation off the residue of the coordinate polynomial.
    unsigned k = static_cast<unsigned>(vn + 1);
    ModPoly fp = ModPoly::from_q(K->minpoly(), P.p);
    auto fac = factor_mod_p(fp);
    auto lifted = hensel_lift(K->minpoly(), fac, P.p, k);
    Z pk = zpow(P.p, k);
    // find the lifted factor congruent to P.local_generator mod p
    const ModPoly* target = nullptr;
    for (size_t i = 0; i < fac.size(); ++i) {
        if (fac[i].lift_symmetric() == P.local_generator) {
            target = &lifted[i];
            break;
        }
    }
    if (!target) fail(errc::internal, "local generator not found among factors");
    ModPoly gamma = ModPoly::from_q(QPoly(g.coords()), pk);
    ModPoly rem = gamma.divmod(ModPoly(target->c, pk)).second;
    long m = vn + 1;
    for (auto& c : rem.c)
        if (c != 0) m = std::min(m, z_valuation(c, P.p));
    if (rem.is_zero()) m = vn + 1; // >= k, capped; cannot happen with k = vn+1
    return m;
}

} // namespace

long ord_p(const NfElem& a, const PrimeIdealData& P) {
    if (a.is_zero()) fail(errc::invalid_argument, "ord of zero");
    Z den = coords_denominator(a);
    NfElem g = a * Q(den);
    long vden = z_valuation(den, P.p);
    return ord_p_integral(g, P) - static_cast<long>(P.ramification) * vden;
}

namespace {

// exact rational contribution of the finite places
Q finite_height_factor(const std::vector<const NfElem*>& entries) {
    const NfRef& K = entries.front()->field();
    Z den(1);
    for (auto* e : entries)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coords_denominator(*e).get_mpz_t());
    Q fin(1);
    if (den == 1) return fin;
    std::vector<Z> primes = factor_integer(den);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const Z& p : primes) {
        for (const auto& P : prime_ideal_above(K, p)) {
            long m = 0;
            for (auto* e : entries)
                if (!e->is_zero()) m = std::min(m, ord_p(*e, P));
            if (m < 0) fin *= qpow(Q(P.norm), -m);
        }
    }
    return fin;
}

Height height_impl(const std::vector<const NfElem*>& entries, long tol_bits) {
    const NfRef& K = entries.front()->field();
    int n = K->degree();
    Q fin = finite_height_factor(entries);
    Q w(1, 1 << 20);
    mpfr_prec_t prec = 192;
    for (;; w = w * Q(1, 1 << 16), prec += 64) {
        RInterval prod(fin, prec);
        for (int i = 0; i < n; ++i) {
            QInterval m(Q(1));
            bool first = true;
            for (auto* e : entries) {
                QInterval x = e->embed(i, w).abs();
                if (first) { m = x; first = false; }
                else m = QInterval{std::max(m.lo, x.lo), std::max(m.hi, x.hi)};
            }
            prod = prod * RInterval(m.max1(), prec);
        }
        Height h{prod.nth_root(n), RInterval(prec)};
        h.log_value = h.value.log();
        double width = h.value.width_d();
        double lo = h.value.lo_d();
        if (lo > 0 && width / lo <= std::pow(2.0, -static_cast<double>(tol_bits))) return h;
    }
}

} // namespace

Height height_number(const NfElem& a, long tol_bits) {
    if (a.is_zero()) fail(errc::invalid_argument, "height of zero");
    return height_impl({&a}, tol_bits);
}

Height height_matrix(const NfElem& a, const NfElem& b, const NfElem& c, const NfElem& d,
                     long tol_bits) {
    NfElem dd = a * d - b * c;
    if (!(dd.is_rational() && dd.rational_value() == 1))
        fail(errc::invalid_argument, "height_matrix: determinant must be 1");
    return height_impl({&a, &b, &c, &d}, tol_bits);
}

Height height_rational(const Q& x, long tol_bits) {
    NfElem e = NfElem::constant(NumberField::rationals(), x);
    return height_number(e, tol_bits);
}

std::vector<NfElem> unit_sweep(const NfRef& K, const std::vector<NfElem>& fundamental_units,
                               const Q& lo, const Q& hi, int budget) {
    for (const auto& u : fundamental_units) {
        if (u.is_zero() || !is_algebraic_integer(u) || !is_algebraic_integer(u.inverse()))
            fail(errc::not_a_unit, "supplied unit is not invertible in O_K");
    }
    std::vector<NfElem> values{NfElem::constant(K, 1)};
    for (const auto& u : fundamental_units) {
        std::vector<NfElem> next;
        NfElem upos = NfElem::constant(K, 1);
        std::vector<NfElem> pows{upos}; // u^0..u^budget
        for (int e = 1; e <= budget; ++e) pows.push_back(pows.back() * u);
        NfElem uinv = u.inverse();
        std::vector<NfElem> ipows{NfElem::constant(K, 1)};
        for (int e = 1; e <= budget; ++e) ipows.push_back(ipows.back() * uinv);
        for (const auto& v : values)
            for (int e = -budget; e <= budget; ++e)
                next.push_back(e >= 0 ? v * pows[e] : v * ipows[-e]);
        values = std::move(next);
    }
    // +- signs, dedup by coordinates, filter by window, sort by value
    std::set<std::vector<std::string>> seen;
    std::vector<NfElem> out;
    for (const auto& v : values) {
        for (int s = 0; s < 2; ++s) {
            NfElem cand = s ? -v : v;
            std::vector<std::string> key;
            for (auto& c : cand.coords()) key.push_back(c.get_str());
            if (!seen.insert(key).second) continue;
            if (cand.cmp(lo) >= 0 && cand.cmp(hi) <= 0) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), [](const NfElem& a, const NfElem& b) { return a.cmp(b) < 0; });
    return out;
}

} // namespace sag
