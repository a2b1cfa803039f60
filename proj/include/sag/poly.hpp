#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sag/interval.hpp"
#include "sag/rat.hpp"

namespace sag {

/// Dense univariate polynomial over Q, coefficients low-degree-first.
/// The zero polynomial has an empty coefficient vector.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Q> c) : c_(std::move(c)) { trim(); }
    static QPoly constant(const Q& v) { return v == 0 ? QPoly() : QPoly({v}); }
    static QPoly x() { return QPoly({Q(0), Q(1)}); }
    static QPoly from_z(const std::vector<Z>& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Q& operator[](size_t i) const { return c_[i]; }
    const std::vector<Q>& coeffs() const { return c_; }
    const Q& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_integer() const;
    std::vector<Z> z_coeffs() const; // requires is_integer()

    QPoly operator+(const QPoly&) const;
    QPoly operator-(const QPoly&) const;
    QPoly operator*(const QPoly&) const;
    QPoly operator*(const Q&) const;
    QPoly operator-() const;
    bool operator==(const QPoly&) const = default;

    /// quotient and remainder; rhs nonzero
    std::pair<QPoly, QPoly> divmod(const QPoly&) const;
    QPoly monic() const;
    QPoly derivative() const;
    Q eval(const Q& x) const;
    QInterval eval(const QInterval& x) const;
    QPoly compose_x2() const; // P(X^2)
    QPoly shift(const Q& a) const; // P(X + a)
    QPoly neg_x() const; // P(-X)

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Q> c_;
    void trim();
};

QPoly gcd(const QPoly& a, const QPoly& b); // monic gcd

/// Sturm chain of a squarefree-or-not polynomial; counts distinct real roots.
class Sturm {
  public:
    explicit Sturm(const QPoly& p);
    /// number of distinct real roots in (a, b]
    int count(const Q& a, const Q& b) const;
    int count_all() const;
    /// a bound B such that all real roots lie in (-B, B)
    Q root_bound() const;

  private:
    std::vector<QPoly> chain_;
    int variations(const Q& x) const;
    int variations_at_inf(int sign) const;
};

/// Isolating intervals (pairwise disjoint, each containing exactly one root)
/// for all distinct real roots of p, sorted increasingly.
std::vector<QInterval> isolate_real_roots(const QPoly& p);

/// Shrink an isolating interval of p by bisection until width <= w.
QInterval refine_root(const QPoly& p, QInterval iv, const Q& w);

} // namespace sag
