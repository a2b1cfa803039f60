#pragma once

#include <vector>

#include "sag/poly.hpp"
#include "sag/rat.hpp"

namespace sag {

/// Polynomial over Z/m, coefficients low-first in [0, m). m need not be prime
/// (Hensel lifting works modulo p^k).
struct ModPoly {
    std::vector<Z> c;
    Z m;

    explicit ModPoly(Z mod) : m(std::move(mod)) {}
    ModPoly(std::vector<Z> coeffs, Z mod);
    static ModPoly from_q(const QPoly& p, const Z& mod);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();

    ModPoly operator+(const ModPoly&) const;
    ModPoly operator-(const ModPoly&) const;
    ModPoly operator*(const ModPoly&) const;
    /// divisor must have invertible leading coefficient mod m
    std::pair<ModPoly, ModPoly> divmod(const ModPoly&) const;
    ModPoly monic() const;

    QPoly lift() const;           // coefficients in [0, m)
    QPoly lift_symmetric() const; // coefficients in (-m/2, m/2]
};

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b); // m prime

/// monic irreducible factors with multiplicity, over F_p (m prime, small)
std::vector<ModPoly> factor_mod_p(const ModPoly& f);

/// Given monic f over Z and pairwise-coprime monic factorization mod p,
/// lift the factors to p^k. f must be squarefree mod p.
std::vector<ModPoly> hensel_lift(const QPoly& f, const std::vector<ModPoly>& factors_mod_p,
                                 const Z& p, unsigned k);

/// Monic irreducible factors over Z of a monic integer polynomial, with
/// multiplicity, sorted deterministically (degree, then coefficients).
std::vector<QPoly> factor_monic_z(const QPoly& f);

bool is_irreducible_z(const QPoly& f); // f monic integer, degree >= 1

} // namespace sag
