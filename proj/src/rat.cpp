#include "sag/rat.hpp"

#include "sag/error.hpp"

namespace sag {

Q parse_rational(const std::string& s) {
    Q q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        fail(errc::invalid_argument, "bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::vector<Z> factor_integer(Z n) {
    if (n < 0) n = -n;
    std::vector<Z> out;
    if (n <= 1) return out;
    Z d(2);
    while (d * d <= n) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            out.push_back(d);
            n /= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace sag
