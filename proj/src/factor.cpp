#include "sag/factor.hpp"

#include <algorithm>
#include <map>

#include "sag/error.hpp"

namespace sag {

namespace {
Z mod_norm(Z v, const Z& m) {
    Z r = v % m;
    if (r < 0) r += m;
    return r;
}

Z mod_inv(const Z& a, const Z& m) {
    Z g, s;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) fail(errc::internal, "non-invertible element in Z/m");
    return mod_norm(s, m);
}
} // namespace

ModPoly::ModPoly(std::vector<Z> coeffs, Z mod) : c(std::move(coeffs)), m(std::move(mod)) {
    for (auto& v : c) v = mod_norm(v, m);
    trim();
}

ModPoly ModPoly::from_q(const QPoly& p, const Z& mod) {
    std::vector<Z> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        const Q& q = p[i];
        Z den_inv = mod_inv(mod_norm(q.get_den(), mod), mod);
        c[i] = mod_norm(q.get_num() * den_inv, mod);
    }
    return ModPoly(std::move(c), mod);
}

void ModPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<Z> r(std::max(c.size(), o.c.size()), Z(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] = mod_norm(r[i] + o.c[i], m);
    return ModPoly(std::move(r), m);
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<Z> r(std::max(c.size(), o.c.size()), Z(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] = mod_norm(r[i] - o.c[i], m);
    return ModPoly(std::move(r), m);
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(m);
    std::vector<Z> r(c.size() + o.c.size() - 1, Z(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] = mod_norm(r[i + j] + c[i] * o.c[j], m);
    return ModPoly(std::move(r), m);
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& d) const {
    if (d.is_zero()) fail(errc::internal, "ModPoly division by zero");
    Z linv = mod_inv(d.c.back(), m);
    std::vector<Z> rem(c);
    int dd = d.degree();
    if (degree() < dd) return {ModPoly(m), *this};
    std::vector<Z> quo(degree() - dd + 1, Z(0));
    for (int i = degree(); i >= dd; --i) {
        Z f = mod_norm(rem[i] * linv, m);
        if (f == 0) continue;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = mod_norm(rem[i - dd + j] - f * d.c[j], m);
    }
    return {ModPoly(std::move(quo), m), ModPoly(std::move(rem), m)};
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    Z linv = mod_inv(c.back(), m);
    std::vector<Z> r(c);
    for (auto& v : r) v = mod_norm(v * linv, m);
    return ModPoly(std::move(r), m);
}

QPoly ModPoly::lift() const {
    std::vector<Q> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = Q(c[i]);
    return QPoly(std::move(r));
}

QPoly ModPoly::lift_symmetric() const {
    std::vector<Q> r(c.size());
    Z half = m / 2;
    for (size_t i = 0; i < c.size(); ++i) r[i] = Q(c[i] > half ? c[i] - m : c[i]);
    return QPoly(std::move(r));
}

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

namespace {

// enumerate monic polynomials of given degree over F_p in lexicographic order
bool next_candidate(std::vector<Z>& c, const Z& p, int deg) {
    for (int i = 0; i < deg; ++i) {
        c[i] += 1;
        if (c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

// smallest-degree monic irreducible factor of monic f over F_p by trial division
ModPoly smallest_factor(const ModPoly& f) {
    int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<Z> c(d + 1, Z(0));
        c[d] = 1;
        do {
            ModPoly cand(c, f.m);
            auto [q, r] = f.divmod(cand);
            if (r.is_zero()) return cand;
        } while (next_candidate(c, f.m, d));
    }
    return f; // irreducible
}

} // namespace

std::vector<ModPoly> factor_mod_p(const ModPoly& f0) {
    ModPoly f = f0.monic();
    std::vector<ModPoly> out;
    while (f.degree() > 0) {
        ModPoly g = smallest_factor(f);
        out.push_back(g);
        f = f.divmod(g).first;
    }
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
    });
    return out;
}

std::vector<ModPoly> hensel_lift(const QPoly& f, const std::vector<ModPoly>& factors_mod_p,
                                 const Z& p, unsigned k) {
    if (factors_mod_p.size() == 1) {
        Z pk = zpow(p, k);
        return {ModPoly::from_q(f, pk)};
    }
    // split the list into (g, h = product of the rest) and lift that pair, recurse on h
    ModPoly g = factors_mod_p.front();
    ModPoly h(p);
    h = ModPoly({Z(1)}, p);
    for (size_t i = 1; i < factors_mod_p.size(); ++i) h = h * factors_mod_p[i];

    // Bezout: u g + v h = 1 mod p
    ModPoly u(p), v(p);
    {
        ModPoly r0 = g, r1 = h;
        ModPoly s0({Z(1)}, p), s1(p), t0(p), t1({Z(1)}, p);
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            ModPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = r1; r1 = r;
            s0 = s1; s1 = s2;
            t0 = t1; t1 = t2;
        }
        if (r0.degree() != 0) fail(errc::internal, "hensel: factors not coprime mod p");
        Z inv = mod_inv(r0.c[0], p);
        u = s0 * ModPoly({inv}, p);
        v = t0 * ModPoly({inv}, p);
    }

    // linear lift g*h = f from mod p^j to mod p^{j+1}
    QPoly G = g.lift_symmetric(), H = h.lift_symmetric();
    Z pj(p);
    for (unsigned j = 1; j < k; ++j) {
        Z pj1 = pj * p;
        QPoly err = f - G * H; // divisible by p^j
        std::vector<Q> ec(err.coeffs());
        std::vector<Z> ez(ec.size());
        for (size_t i = 0; i < ec.size(); ++i) ez[i] = ec[i].get_num() / pj;
        ModPoly e(ez, p);
        // G += p^j * (v e mod g),  H += p^j * (u e mod h)
        ModPoly dg = (v * e).divmod(g).second;
        ModPoly dh = (u * e).divmod(h).second;
        G = G + dg.lift_symmetric() * Q(pj);
        H = H + dh.lift_symmetric() * Q(pj);
        pj = pj1;
    }
    Z pk = zpow(p, k);
    ModPoly Gk = ModPoly::from_q(G, pk);
    std::vector<ModPoly> rest_p(factors_mod_p.begin() + 1, factors_mod_p.end());
    // recurse: H lifts the product of the remaining factors
    std::vector<ModPoly> rest;
    if (rest_p.size() == 1) {
        rest = {ModPoly::from_q(H, pk)};
    } else {
        rest = hensel_lift(H, rest_p, p, k);
    }
    rest.insert(rest.begin(), Gk);
    return rest;
}

namespace {

// 2^n * sqrt(sum c_i^2) + 1, bound on |coefficients| of monic factors
Z mignotte_bound(const QPoly& f) {
    Z s(0);
    for (auto& c : f.coeffs()) s += c.get_num() * c.get_num();
    Z r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return (r + 1) * zpow(Z(2), f.degree());
}

const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                        47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

// irreducible factors of a squarefree monic integer polynomial
std::vector<QPoly> factor_squarefree(const QPoly& f) {
    if (f.degree() <= 1) return {f};
    // pick the smallest prime keeping f squarefree mod p
    for (long pl : kPrimes) {
        Z p(pl);
        ModPoly fp = ModPoly::from_q(f, p);
        if (fp.degree() != f.degree()) continue;
        if (mod_gcd(fp, ModPoly::from_q(f.derivative(), p)).degree() != 0) continue;
        auto fac_p = factor_mod_p(fp);
        if (fac_p.size() == 1) return {f}; // irreducible mod p => irreducible
        // lift beyond twice the Mignotte bound
        Z bound = 2 * mignotte_bound(f) + 1;
        unsigned k = 1;
        Z pk = p;
        while (pk < bound) {
            pk *= p;
            ++k;
        }
        auto lifted = hensel_lift(f, fac_p, p, k);
        // subset recombination
        std::vector<QPoly> out;
        QPoly residual = f;
        std::vector<ModPoly> pool = lifted;
        bool progress = true;
        while (progress && !pool.empty()) {
            progress = false;
            size_t r = pool.size();
            for (size_t sz = 1; sz <= r / 2 && !progress; ++sz) {
                // bitmask enumeration of size-sz subsets
                std::vector<size_t> idx(sz);
                for (size_t i = 0; i < sz; ++i) idx[i] = i;
                while (true) {
                    ModPoly prod({Z(1)}, pk);
                    for (size_t i : idx) prod = prod * pool[i];
                    QPoly cand = prod.lift_symmetric();
                    auto [q, rem] = residual.divmod(cand);
                    if (rem.is_zero()) {
                        out.push_back(cand);
                        residual = q;
                        std::vector<ModPoly> np;
                        for (size_t i = 0, j = 0; i < pool.size(); ++i) {
                            if (j < sz && idx[j] == i) { ++j; continue; }
                            np.push_back(pool[i]);
                        }
                        pool = std::move(np);
                        progress = true;
                        break;
                    }
                    // next subset
                    long t = static_cast<long>(sz) - 1;
                    while (t >= 0 && idx[t] == r - sz + t) --t;
                    if (t < 0) break;
                    ++idx[t];
                    for (size_t i = t + 1; i < sz; ++i) idx[i] = idx[i - 1] + 1;
                }
            }
        }
        if (residual.degree() > 0) out.push_back(residual);
        return out;
    }
    fail(errc::internal, "no squarefree prime found for factorization");
}

} // namespace

std::vector<QPoly> factor_monic_z(const QPoly& f0) {
    if (!f0.is_monic() || !f0.is_integer()) fail(errc::internal, "factor_monic_z: not monic integral");
    std::vector<QPoly> out;
    QPoly f = f0;
    // strip powers of x
    size_t nx = 0;
    while (f.degree() > 0 && f[0] == 0) {
        f = f.divmod(QPoly::x()).first;
        ++nx;
    }
    for (size_t i = 0; i < nx; ++i) out.push_back(QPoly::x());
    if (f.degree() >= 1) {
        QPoly sf = f.divmod(gcd(f, f.derivative())).first.monic();
        for (const QPoly& q : factor_squarefree(sf)) {
            QPoly g = f;
            while (true) {
                auto [quo, rem] = g.divmod(q);
                if (!rem.is_zero()) break;
                out.push_back(q);
                g = quo;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

bool is_irreducible_z(const QPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_monic_z(f);
    return fac.size() == 1;
}

} // namespace sag
