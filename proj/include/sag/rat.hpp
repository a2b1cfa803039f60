#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sag {

using Z = mpz_class;
using Q = mpq_class;

inline Z zpow(const Z& b, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Q qpow(const Q& b, long e) {
    if (e == 0) return Q(1);
    Q r;
    unsigned long a = e < 0 ? -static_cast<unsigned long>(e) : e;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), a);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

/// largest k with p^k | n  (n != 0)
inline long z_valuation(Z n, const Z& p) {
    long k = 0;
    n = abs(n);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++k;
    }
    return k;
}

inline long q_valuation(const Q& x, const Z& p) {
    return z_valuation(x.get_num(), p) - z_valuation(x.get_den(), p);
}

inline bool is_prime(const Z& p) { return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0; }

/// parse "p/q" or "p"
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

std::vector<Z> factor_integer(Z n); // prime factors with multiplicity, n > 0

} // namespace sag
